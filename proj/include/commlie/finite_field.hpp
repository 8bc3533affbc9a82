#pragma once

#include <cstdint>
#include <vector>

namespace commlie {

/// Field element encoded as c0 + c1·p in the basis {1, x} of F_p[x]/(modulus).
/// Prime-field elements are exactly the codes 0 .. p-1.
using FqElem = std::uint8_t;

/// GF(p^k) for k in {1, 2}, with table-driven arithmetic.
class FiniteField {
 public:
  /// Throws UsageError if p is not prime, k is not 1 or 2, or p^k > 256.
  static FiniteField make(int p, int k);
  /// The field with q = p^k elements.
  static FiniteField of_order(int q);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int size() const { return size_; }
  /// Monic defining polynomial, lowest coefficient first ({c0, c1, 1}); empty for k = 1.
  const std::vector<int>& modulus() const { return modulus_; }

  FqElem add(FqElem a, FqElem b) const { return add_[a * size_ + b]; }
  FqElem sub(FqElem a, FqElem b) const { return add_[a * size_ + neg_[b]]; }
  FqElem mul(FqElem a, FqElem b) const { return mul_[a * size_ + b]; }
  FqElem neg(FqElem a) const { return neg_[a]; }
  /// Throws Error for 0.
  FqElem inv(FqElem a) const;
  /// a^p, the Frobenius map (the conjugation a ↦ ā on GF(p²)).
  FqElem frobenius(FqElem a) const { return frob_[a]; }
  FqElem from_int(long v) const;
  bool in_prime_field(FqElem a) const { return a < p_; }

 private:
  FiniteField() = default;
  int p_ = 0;
  int k_ = 0;
  int size_ = 0;
  std::vector<int> modulus_;
  std::vector<FqElem> add_, mul_, neg_, inv_, frob_;
};

/// Decomposes q = p^k; returns false if q is not a prime power.
bool prime_power(long q, int& p, int& k);
bool is_prime(long n);

}  // namespace commlie
