#include "commlie/counts_sp.hpp"

#include "commlie/class_sums.hpp"
#include "commlie/error.hpp"
#include "commlie/polycount.hpp"

namespace commlie {

namespace {

long halve(long twice, const std::string& what) {
  if (twice % 2 != 0) throw IntegralityError(what + ": odd exponent " + std::to_string(twice) + " cannot be halved");
  return twice / 2;
}

long x_exponent(const Partition& lam) {
  return halve(lam.sum_sq_conjugate() + lam.odd_part_count(), "sp nilpotent part " + lam.to_string());
}

// Self-dual φ of degree 2d: Pochhammer base −q^d, i.e. factors 1 − (−1)^s/q^{sd}.
QCoeff selfdual_pochhammer(const QContext& ctx, int d, int m) { return pochhammer(ctx, QBase{d, true}, m); }

void check_backend(Backend b) {
  if (b == Backend::oracle) throw UsageError("oracle counts come from the brute-force module");
}

}  // namespace

void require_odd_q(const QContext& ctx, const std::string& where) {
  if (!ctx.is_symbolic() && ctx.q_value() % 2 == 0) throw CharacteristicTwoError(where);
}

QCoeff group_order_sp(int n, const QContext& ctx) {
  require_odd_q(ctx, "group_order_sp");
  if (n < 0) throw UsageError("n must be non-negative");
  QCoeff g = ctx.q_power(static_cast<long>(n) * n);
  for (int i = 1; i <= n; ++i) g *= ctx.q_power(2 * i) - ctx.one();
  return g;
}

QCoeff sp_nilpotent_pochhammer(const QContext& ctx, int m) { return pochhammer(ctx, QBase{2, false}, m / 2); }

long centralizer_dim_sp(const SpData& data) {
  if (!data.admissible()) throw IntegralityError("sp data " + data.to_string() + " has inadmissible λ_x");
  long dim = x_exponent(data.lambda_x);
  for (const auto& a : data.selfdual) dim += a.degree * a.lambda.sum_sq_conjugate();
  for (const auto& a : data.pairs) dim += a.degree * a.lambda.sum_sq_conjugate();
  return dim;
}

QCoeff centralizer_size_sp(const SpData& data, const QContext& ctx) {
  return ctx.q_power(centralizer_dim_sp(data));
}

long nilpotent_dim_formulas_agree(const Partition& lambda) {
  if (!lambda.sp_admissible()) throw UsageError("partition " + lambda.to_string() + " is not sp-admissible");
  long first = 0;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) first += static_cast<long>(i) * parts[i] + (parts[i] + 1) / 2;
  long second = x_exponent(lambda);
  if (first != second) {
    throw MismatchError("nilpotent centralizer dimensions disagree for " + lambda.to_string() + ": " +
                        std::to_string(first) + " vs " + std::to_string(second));
  }
  return first;
}

QCoeff nilpotent_count_sp(const Partition& lambda, int n, const QContext& ctx) {
  require_odd_q(ctx, "nilpotent_count_sp");
  if (lambda.size() != 2 * n) throw UsageError("partition " + lambda.to_string() + " does not have size 2n");
  if (!lambda.sp_admissible()) throw UsageError("partition " + lambda.to_string() + " is not sp-admissible");
  QCoeff denom = ctx.q_power(x_exponent(lambda));
  for (auto [part, m] : lambda.multiplicities()) denom *= sp_nilpotent_pochhammer(ctx, m);
  QCoeff v = group_order_sp(n, ctx) / denom;
  require_integral(v, "sp nilpotent orbit " + lambda.to_string());
  return v;
}

QCoeff orbit_size_sp(const SpData& data, int n, const QContext& ctx) {
  require_odd_q(ctx, "orbit_size_sp");
  if (data.weight() != 2 * n) {
    throw UsageError("sp data " + data.to_string() + " has weight " + std::to_string(data.weight()) + ", expected " +
                     std::to_string(2 * n));
  }
  if (!data.admissible()) throw UsageError("sp data " + data.to_string() + " has inadmissible λ_x");
  QCoeff denom = ctx.q_power(x_exponent(data.lambda_x));
  for (auto [part, m] : data.lambda_x.multiplicities()) denom *= sp_nilpotent_pochhammer(ctx, m);
  for (const auto& a : data.selfdual) {
    // deg φ = 2d, so the exponent deg φ·Σ(λ′)²/2 is d·Σ(λ′)².
    denom *= ctx.q_power(static_cast<long>(a.degree) * a.lambda.sum_sq_conjugate());
    for (auto [part, m] : a.lambda.multiplicities()) denom *= selfdual_pochhammer(ctx, a.degree, m);
  }
  for (const auto& a : data.pairs) {
    denom *= ctx.q_power(static_cast<long>(a.degree) * a.lambda.sum_sq_conjugate());
    for (auto [part, m] : a.lambda.multiplicities()) denom *= pochhammer(ctx, a.degree, Sign::plus, m);
  }
  QCoeff size = group_order_sp(n, ctx) / denom;
  require_integral(size, "sp orbit " + data.to_string());
  if (!size.is_symbolic() && size.rational() <= 0) {
    throw IntegralityError("sp orbit " + data.to_string() + " has non-positive size " + size.to_string());
  }
  return size;
}

USeries sp_pairs_series(const QContext& ctx, int order, Backend backend) {
  require_odd_q(ctx, "sp_pairs_series");
  check_backend(backend);
  if (backend == Backend::gen_fn) {
    USeries out = USeries::one(ctx, order);
    for (int i = 1; i <= order; ++i) {
      USeries plus = USeries::one(ctx, order) + USeries::monomial(ctx.one(), i, order);
      out *= plus * euler_sum(i, ctx.q(), QBase{2, false}, order);
    }
    return out;
  }
  const int uorder = 2 * order;
  USeries out = partition_series(ctx, uorder, 1, [&](int m) { return sp_nilpotent_pochhammer(ctx, m).inverse(); },
                                 /*sp_admissible_only=*/true);
  IrredCounts t = irred_counts(std::max(order, 1), ctx);
  for (int d = 1; d <= order; ++d) {
    USeries b = partition_series(ctx, uorder, 2 * d, [&](int m) { return selfdual_pochhammer(ctx, d, m).inverse(); });
    USeries c = partition_series(ctx, uorder, 2 * d, [&](int m) { return pochhammer(ctx, d, Sign::plus, m).inverse(); });
    out *= power_by_count(b, t.nbar[d]);
    out *= power_by_count(c, t.mbar[d]);
  }
  return even_part_in_v(out);
}

USeries sp_nilpotent_series(const QContext& ctx, int order, Backend backend) {
  require_odd_q(ctx, "sp_nilpotent_series");
  check_backend(backend);
  if (backend == Backend::gen_fn) {
    USeries out = USeries::one(ctx, order);
    QCoeff scale = ctx.q().inverse();
    for (int i = 1; i <= order; ++i) {
      USeries plus = USeries::one(ctx, order) + USeries::monomial(ctx.one(), i, order);
      out *= plus * euler_sum(i, scale, QBase{2, false}, order);
    }
    return out;
  }
  USeries u = partition_series(ctx, 2 * order, 1, [&](int m) {
    return (sp_nilpotent_pochhammer(ctx, m) * ctx.q_power(m / 2)).inverse();
  }, /*sp_admissible_only=*/true);
  return even_part_in_v(u);
}

QCoeff commuting_pairs_sp(int n, const QContext& ctx, Backend backend) {
  return scaled_coefficient(group_order_sp(n, ctx), sp_pairs_series(ctx, n, backend), n,
                            "sp pairs n=" + std::to_string(n) + " (" + to_string(backend) + ")");
}

QCoeff nilpotent_pairs_sp(int n, const QContext& ctx, Backend backend) {
  return scaled_coefficient(group_order_sp(n, ctx), sp_nilpotent_series(ctx, n, backend), n,
                            "sp nilpotent pairs n=" + std::to_string(n) + " (" + to_string(backend) + ")");
}

}  // namespace commlie
