#pragma once

#include <vector>

#include "commlie/ff_poly.hpp"
#include "commlie/finite_field.hpp"

namespace commlie {

/// Square matrix over a FiniteField, row-major.
struct FqMatrix {
  int n = 0;
  std::vector<FqElem> a;

  FqMatrix() = default;
  explicit FqMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
  FqElem& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  FqElem operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
  friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;
};

namespace fqmat {

FqMatrix identity(int n);
bool is_zero(const FqMatrix& m);
FqMatrix add(const FiniteField& f, const FqMatrix& x, const FqMatrix& y);
FqMatrix sub(const FiniteField& f, const FqMatrix& x, const FqMatrix& y);
FqMatrix scale(const FiniteField& f, FqElem c, const FqMatrix& x);
FqMatrix mul(const FiniteField& f, const FqMatrix& x, const FqMatrix& y);
/// x·y − y·x
FqMatrix commutator(const FiniteField& f, const FqMatrix& x, const FqMatrix& y);
FqMatrix transpose(const FqMatrix& x);
/// Entrywise Frobenius, then transpose.
FqMatrix conj_transpose(const FiniteField& f, const FqMatrix& x);
/// x^n = 0 for n the matrix size, by repeated squaring.
bool is_nilpotent(const FiniteField& f, const FqMatrix& x);
/// φ(x) by Horner's rule.
FqMatrix evaluate(const FiniteField& f, const FFPoly& phi, const FqMatrix& x);
/// det(tI − x) by cofactor expansion over F[t]; sizes up to 6.
FFPoly characteristic_polynomial(const FiniteField& f, const FqMatrix& x);
int rank(const FiniteField& f, const FqMatrix& x);

}  // namespace fqmat

/// Rank of a dense rows × cols system over f (rows may be ragged-free vectors of equal length).
int rank_of_rows(const FiniteField& f, std::vector<std::vector<FqElem>> rows);
/// Basis of {c : Σ_k c_k · column_k = 0}, where columns[k] is the k-th column vector.
std::vector<std::vector<FqElem>> nullspace_of_columns(const FiniteField& f,
                                                      const std::vector<std::vector<FqElem>>& columns);

}  // namespace commlie
