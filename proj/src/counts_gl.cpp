#include "commlie/counts_gl.hpp"

#include "commlie/class_sums.hpp"
#include "commlie/error.hpp"

namespace commlie {

namespace {

void check_formula_backend(Backend b) {
  if (b == Backend::oracle) throw UsageError("oracle counts come from the brute-force module");
}

// q^{dΣλ′²} ∏_i (1/q^d)_{m_i}
QCoeff stabilizer_factor(const Assignment& a, const QContext& ctx) {
  QCoeff f = ctx.q_power(static_cast<long>(a.degree) * a.lambda.sum_sq_conjugate());
  for (auto [part, m] : a.lambda.multiplicities()) f *= pochhammer(ctx, a.degree, Sign::plus, m);
  return f;
}

}  // namespace

QCoeff group_order_gl(int n, const QContext& ctx) {
  if (n < 0) throw UsageError("n must be non-negative");
  QCoeff g = ctx.q_power(static_cast<long>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) g *= ctx.q_power(i) - ctx.one();
  return g;
}

QCoeff centralizer_size_mat(const CanonicalData& data, const QContext& ctx) {
  long e = 0;
  for (const auto& a : data.assignments) e += a.degree * a.lambda.sum_sq_conjugate();
  return ctx.q_power(e);
}

QCoeff class_size(int n, const CanonicalData& data, const QContext& ctx) {
  if (data.weight() != n) {
    throw UsageError("canonical data " + data.to_string() + " has weight " + std::to_string(data.weight()) +
                     ", expected " + std::to_string(n));
  }
  QCoeff denom = ctx.one();
  for (const auto& a : data.assignments) denom *= stabilizer_factor(a, ctx);
  QCoeff size = group_order_gl(n, ctx) / denom;
  require_integral(size, "gl class " + data.to_string());
  if (!size.is_symbolic() && size.rational() <= 0) {
    throw IntegralityError("gl class " + data.to_string() + " has non-positive size " + size.to_string());
  }
  return size;
}

USeries gl_pairs_series(const QContext& ctx, int order, Backend backend) {
  check_formula_backend(backend);
  USeries out = USeries::one(ctx, order);
  if (backend == Backend::gen_fn) {
    for (int i = 1; i <= order; ++i) out *= euler_sum(i, ctx.q(), QBase{1, false}, order);
    return out;
  }
  for (int d = 1; d <= order; ++d) {
    USeries f = partition_series(ctx, order, d, [&](int m) { return pochhammer(ctx, d, Sign::plus, m).inverse(); });
    out *= power_by_count(f, count_irreducible(d, ctx));
  }
  return out;
}

USeries gl_nilpotent_series(const QContext& ctx, int order, Backend backend) {
  check_formula_backend(backend);
  if (backend == Backend::gen_fn) {
    USeries out = USeries::one(ctx, order);
    QCoeff scale = ctx.q().inverse();
    for (int i = 1; i <= order; ++i) out *= euler_sum(i, scale, QBase{1, false}, order);
    return out;
  }
  return partition_series(ctx, order, 1, [&](int m) {
    return (pochhammer(ctx, 1, Sign::plus, m) * ctx.q_power(m)).inverse();
  });
}

QCoeff commuting_pairs_gl(int n, const QContext& ctx, Backend backend) {
  return scaled_coefficient(group_order_gl(n, ctx), gl_pairs_series(ctx, n, backend), n,
                            "gl pairs n=" + std::to_string(n) + " (" + to_string(backend) + ")");
}

QCoeff nilpotent_pairs_gl(int n, const QContext& ctx, Backend backend) {
  return scaled_coefficient(group_order_gl(n, ctx), gl_nilpotent_series(ctx, n, backend), n,
                            "gl nilpotent pairs n=" + std::to_string(n) + " (" + to_string(backend) + ")");
}

}  // namespace commlie
