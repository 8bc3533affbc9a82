#include "commlie/counts_u.hpp"

#include "commlie/class_sums.hpp"
#include "commlie/error.hpp"
#include "commlie/fault.hpp"

namespace commlie {

namespace {

Sign degree_sign(int d) { return d % 2 == 1 ? Sign::minus : Sign::plus; }

// The class sums honour the fault hook; orbit sizes do not.
Sign class_sum_sign(int d) {
  if (d % 2 == 1 && fault::flip_u_odd_sign()) return Sign::plus;
  return degree_sign(d);
}

}  // namespace

QCoeff group_order_gu(int n, const QContext& ctx) {
  if (n < 0) throw UsageError("n must be non-negative");
  QCoeff g = ctx.q_power(static_cast<long>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) g *= ctx.q_power(i) - ctx.integer(i % 2 == 0 ? 1 : -1);
  return g;
}

QCoeff centralizer_size_u(const CanonicalData& data, const QContext& ctx) {
  long e = 0;
  for (const auto& a : data.assignments) e += a.degree * a.lambda.sum_sq_conjugate();
  return ctx.q_power(e);
}

QCoeff orbit_size_u(int n, const CanonicalData& data, const QContext& ctx) {
  if (data.weight() != n) {
    throw UsageError("canonical data " + data.to_string() + " has weight " + std::to_string(data.weight()) +
                     ", expected " + std::to_string(n));
  }
  QCoeff denom = ctx.one();
  for (const auto& a : data.assignments) {
    denom *= ctx.q_power(static_cast<long>(a.degree) * a.lambda.sum_sq_conjugate());
    for (auto [part, m] : a.lambda.multiplicities()) denom *= pochhammer(ctx, a.degree, degree_sign(a.degree), m);
  }
  QCoeff size = group_order_gu(n, ctx) / denom;
  require_integral(size, "u orbit " + data.to_string());
  if (!size.is_symbolic() && size.rational() <= 0) {
    throw IntegralityError("u orbit " + data.to_string() + " has non-positive size " + size.to_string());
  }
  return size;
}

USeries u_pairs_series(const QContext& ctx, int order, Backend backend) {
  if (backend == Backend::oracle) throw UsageError("oracle counts come from the brute-force module");
  USeries out = USeries::one(ctx, order);
  if (backend == Backend::gen_fn) {
    for (int i = 1; i <= order; ++i) out *= euler_sum(i, ctx.q(), QBase{1, true}, order);
    return out;
  }
  for (int d = 1; d <= order; ++d) {
    const Sign s = class_sum_sign(d);
    USeries f = partition_series(ctx, order, d, [&](int m) { return pochhammer(ctx, d, s, m).inverse(); });
    out *= power_by_count(f, count_irreducible(d, ctx));
  }
  return out;
}

USeries u_nilpotent_series(const QContext& ctx, int order, Backend backend) {
  if (backend == Backend::oracle) throw UsageError("oracle counts come from the brute-force module");
  if (backend == Backend::gen_fn) {
    USeries out = USeries::one(ctx, order);
    QCoeff scale = ctx.q().inverse();
    for (int i = 1; i <= order; ++i) out *= euler_sum(i, scale, QBase{1, true}, order);
    return out;
  }
  const Sign s = class_sum_sign(1);
  return partition_series(ctx, order, 1, [&](int m) { return (pochhammer(ctx, 1, s, m) * ctx.q_power(m)).inverse(); });
}

QCoeff commuting_pairs_u(int n, const QContext& ctx, Backend backend) {
  return scaled_coefficient(group_order_gu(n, ctx), u_pairs_series(ctx, n, backend), n,
                            "u pairs n=" + std::to_string(n) + " (" + to_string(backend) + ")");
}

QCoeff nilpotent_pairs_u(int n, const QContext& ctx, Backend backend) {
  return scaled_coefficient(group_order_gu(n, ctx), u_nilpotent_series(ctx, n, backend), n,
                            "u nilpotent pairs n=" + std::to_string(n) + " (" + to_string(backend) + ")");
}

}  // namespace commlie
