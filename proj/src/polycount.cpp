#include "commlie/polycount.hpp"

#include <algorithm>

#include "commlie/error.hpp"

namespace commlie {

int mobius(int n) {
  if (n < 1) throw UsageError("mobius needs a positive argument");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

QCoeff count_irreducible(int d, const QContext& ctx) {
  if (d < 1) throw UsageError("polynomial degree must be positive");
  QCoeff sum = ctx.zero();
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = mobius(e);
    if (mu != 0) sum += ctx.integer(mu) * ctx.q_power(d / e);
  }
  return sum / ctx.integer(d);
}

IrredCounts irred_counts(int max_degree, const QContext& ctx) {
  if (max_degree < 0) throw UsageError("degree bound must be non-negative");
  IrredCounts t{ctx, max_degree, {}, {}, {}};
  t.N.assign(static_cast<std::size_t>(max_degree) + 1, ctx.zero());
  t.nbar = t.N;
  t.mbar = t.N;
  for (int n = 1; n <= max_degree; ++n) {
    t.N[n] = count_irreducible(n, ctx);
    QCoeff rhs = ctx.q_power(n) - ctx.one();
    QCoeff a = rhs;
    QCoeff b = rhs;
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      QCoeff w = ctx.integer(2 * d);
      if ((n / d) % 2 == 1) {
        a -= w * t.nbar[d];
      } else {
        b -= w * t.nbar[d];
      }
      b -= w * t.mbar[d];
    }
    t.nbar[n] = a / ctx.integer(2 * n);
    // n/d = 1 is odd, so a_n never enters the second identity.
    t.mbar[n] = b / ctx.integer(2 * n);
  }
  return t;
}

QCoeff count_selfdual(int two_d, const QContext& ctx) {
  if (two_d < 2 || two_d % 2 != 0) throw UsageError("self-dual degree must be a positive even integer");
  return irred_counts(two_d / 2, ctx).nbar[two_d / 2];
}

QCoeff count_dual_pairs(int d, const QContext& ctx) {
  if (d < 1) throw UsageError("polynomial degree must be positive");
  return irred_counts(d, ctx).mbar[d];
}

PolyOracle enumerate_polys_oracle(int d, int q) {
  if (d < 1 || d > 4 || q > 7) throw UsageError("polynomial oracle covers d <= 4, q <= 7 only");
  FiniteField f = FiniteField::of_order(q);
  PolyOracle out;
  out.irreducible = ffpoly::irreducibles_up_to(f, d, false)[d];
  for (const auto& phi : out.irreducible) {
    FFPoly bar = ffpoly::dual(f, phi);
    if (bar == phi) {
      out.selfdual.push_back(phi);
    } else if (phi < bar) {
      out.dual_pairs.emplace_back(phi, bar);
    }
  }
  return out;
}

}  // namespace commlie
