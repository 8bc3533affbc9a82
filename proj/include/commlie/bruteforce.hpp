#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "commlie/fq_matrix.hpp"
#include "commlie/partitions.hpp"

namespace commlie {

enum class SpaceFamily { mat, gu, herm, sp };
std::string to_string(SpaceFamily f);

/// A Lie algebra given by an explicit basis over its base field F_q.
///  mat:  all n×n matrices over F_q (q prime or the square of a prime);
///  gu:   skew-Hermitian n×n matrices over F_{q²} (q prime), Ā^T = −A;
///  herm: Hermitian n×n matrices over F_{q²} (q prime);
///  sp:   2n×2n matrices over F_q with AJ symmetric, J = [[0, I], [−I, 0]].
class LieSpace {
 public:
  static LieSpace make(SpaceFamily family, int n, int q);

  SpaceFamily family() const { return family_; }
  /// The family parameter n (the matrix size is 2n for sp).
  int n() const { return n_; }
  int matrix_size() const { return size_; }
  /// Order of the base field.
  int q() const { return q_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const FiniteField& field() const { return field_; }
  const std::vector<FqMatrix>& basis() const { return basis_; }
  /// Codes of the base-field elements inside field().
  const std::vector<FqElem>& base_values() const { return base_values_; }
  /// Number of base-field coordinates per matrix entry (2 when F_{q²} sits over F_q).
  int coords_per_entry() const { return coords_per_entry_; }

  bool contains(const FqMatrix& a) const;
  /// Σ_k coords[k]·basis[k] for base-field coords.
  FqMatrix element(const std::vector<FqElem>& coords) const;
  /// A matrix flattened to base-field coordinates (entry by entry).
  std::vector<FqElem> flatten(const FqMatrix& a) const;
  /// θ with θ̄ = −θ, θ ≠ 0 (gu and herm only); θ·A maps skew-Hermitian to Hermitian.
  FqElem theta() const { return theta_; }

 private:
  LieSpace(SpaceFamily family, int n, int size, int q, FiniteField field);
  SpaceFamily family_;
  int n_;
  int size_;
  int q_;
  FiniteField field_;
  std::vector<FqMatrix> basis_;
  std::vector<FqElem> base_values_;
  int coords_per_entry_ = 1;
  FqElem theta_ = 0;
};

/// Rank over the base field of the flattened basis (equals dim() for a genuine basis).
int basis_rank(const LieSpace& space);

/// dim of {B in space : AB = BA}. Throws UsageError if A is not in the space.
int centralizer_nullity(const FqMatrix& a, const LieSpace& space);
/// A basis of {B in space : AB = BA}.
std::vector<FqMatrix> centralizer_basis(const FqMatrix& a, const LieSpace& space);

struct OracleOptions {
  /// Exceed the q^dim <= 2^22 guard.
  bool force = false;
  /// 0 picks hardware concurrency, capped by COMMLIE_THREADS.
  int threads = 0;
};

/// Threads actually used for a request (>= 1).
int worker_threads(int requested);
/// Throws GuardExceeded when q^dim > 2^22 and force is false.
void check_guard(const LieSpace& space, bool force);

/// hist[k] = #{A in space : centralizer nullity k}.
std::vector<std::uint64_t> nullity_histogram(const LieSpace& space, const OracleOptions& opts = {});
/// Σ_A q^{nullity(A)}.
mpz_class count_commuting_pairs(const LieSpace& space, const OracleOptions& opts = {});
/// #{(A, B) : A, B nilpotent, AB = BA}.
mpz_class count_nilpotent_pairs(const LieSpace& space, const OracleOptions& opts = {});
std::uint64_t count_nilpotent_elements(const LieSpace& space, const OracleOptions& opts = {});
/// Number of elements visited by the enumeration (q^dim).
std::uint64_t count_elements(const LieSpace& space, const OracleOptions& opts = {});

/// Elements grouped by rational canonical form fingerprint: each irreducible factor φ of the
/// characteristic polynomial (of θA for gu) with λ_φ read off the ranks of φ(A)^k.
struct CensusClass {
  std::vector<std::pair<FFPoly, Partition>> factors;
  std::uint64_t count = 0;
};
std::map<std::string, CensusClass> orbit_census(const LieSpace& space, const OracleOptions& opts = {});

/// Fingerprint of a single element, as used by orbit_census.
std::vector<std::pair<FFPoly, Partition>> canonical_fingerprint(const FqMatrix& a, const LieSpace& space);
std::string fingerprint_key(const std::vector<std::pair<FFPoly, Partition>>& fp);

}  // namespace commlie
