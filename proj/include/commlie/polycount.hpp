#pragma once

#include <utility>
#include <vector>

#include "commlie/ff_poly.hpp"
#include "commlie/qcoeff.hpp"

namespace commlie {

int mobius(int n);

/// N(d,q), the number of monic irreducibles of degree d over F_q.
QCoeff count_irreducible(int d, const QContext& ctx);
/// N̄(2d,q): monic irreducibles φ of degree 2d with φ = φ̄, where φ̄ = (−1)^{deg φ} φ(−x).
QCoeff count_selfdual(int two_d, const QContext& ctx);
/// M̄(d,q): unordered pairs {φ, φ̄} of degree d with φ ≠ φ̄.
QCoeff count_dual_pairs(int d, const QContext& ctx);

/// Tables indexed by degree 1..max_degree (index 0 unused).
struct IrredCounts {
  QContext ctx;
  int max_degree = 0;
  std::vector<QCoeff> N;
  /// nbar[d] = N̄(2d,q)
  std::vector<QCoeff> nbar;
  /// mbar[d] = M̄(d,q)
  std::vector<QCoeff> mbar;
};

/// N by Möbius inversion; N̄ and M̄ solved degree by degree from
///   ∏(1−u^d)^{−N̄(2d)} ∏(1−u^d)^{−M̄(d)} = (1−u)/(1−qu),
///   ∏(1+u^d)^{−N̄(2d)} ∏(1−u^d)^{−M̄(d)} = 1.
/// Taking logarithmic derivatives, with a_d = N̄(2d) and b_d = M̄(d):
///   Σ_{d|n, n/d odd} 2d·a_d = q^n − 1,   Σ_{d|n} d·b_d + Σ_{d|n, n/d even} d·a_d = (q^n − 1)/2.
IrredCounts irred_counts(int max_degree, const QContext& ctx);

struct PolyOracle {
  std::vector<FFPoly> irreducible;
  std::vector<FFPoly> selfdual;
  std::vector<std::pair<FFPoly, FFPoly>> dual_pairs;
};

/// Exhaustive lists for degree d over F_q by trial division; test oracle only.
/// Throws UsageError unless 1 <= d <= 4 and q is a prime power <= 7.
PolyOracle enumerate_polys_oracle(int d, int q);

}  // namespace commlie
