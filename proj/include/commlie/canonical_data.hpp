#pragma once

#include <string>
#include <vector>

#include "commlie/partitions.hpp"
#include "commlie/polycount.hpp"

namespace commlie {

/// One irreducible φ (identified by its degree and a slot number among the N(d,q)
/// polynomials of that degree) together with its partition λ_φ.
struct Assignment {
  int degree = 1;
  int slot = 0;
  Partition lambda;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Rational canonical form data: a partition for each of finitely many irreducibles.
/// Slot 0 of degree 1 stands for φ = x when nilpotent data is built.
struct CanonicalData {
  std::vector<Assignment> assignments;

  /// Σ d(φ)·|λ_φ|
  int weight() const;
  std::string to_string() const;
  /// Only φ = x, with partition λ.
  static CanonicalData nilpotent(const Partition& lambda);
};

/// Every canonical data of weight n with nonempty partitions, one entry per conjugacy class
/// (numeric q only; slots range over 0 .. N(d,q)-1).
std::vector<CanonicalData> enumerate_canonical_data(int n, const QContext& ctx);

/// Symplectic data: λ_x plus partitions on self-dual irreducibles (degree 2d) and on pairs
/// {φ, φ̄} (degree d each, weight 2d·|λ|).
struct SpData {
  Partition lambda_x;
  /// degree field holds d, so the polynomial has degree 2d.
  std::vector<Assignment> selfdual;
  std::vector<Assignment> pairs;

  /// |λ_x| + Σ 2d|λ| over self-duals and pairs; equals 2n for sp(2n).
  int weight() const;
  bool admissible() const { return lambda_x.sp_admissible(); }
  std::string to_string() const;
};

/// Every admissible symplectic data of weight 2n (numeric q only).
std::vector<SpData> enumerate_sp_data(int n, const QContext& ctx);

}  // namespace commlie
