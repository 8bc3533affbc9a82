#pragma once

#include <vector>

#include "commlie/qcoeff.hpp"

namespace commlie {

/// Power series in u truncated at a fixed order N: all arithmetic is exact modulo u^(N+1).
class USeries {
 public:
  USeries(QContext ctx, int order);
  static USeries one(const QContext& ctx, int order);
  /// c·u^k (the zero series when k > order).
  static USeries monomial(const QCoeff& c, int k, int order);

  int order() const { return order_; }
  const QContext& context() const { return ctx_; }
  const QCoeff& operator[](int k) const { return coeffs_.at(k); }
  QCoeff& operator[](int k) { return coeffs_.at(k); }
  const std::vector<QCoeff>& coeffs() const { return coeffs_; }

  USeries& operator+=(const USeries& o);
  USeries& operator-=(const USeries& o);
  USeries& operator*=(const USeries& o);
  USeries& operator*=(const QCoeff& c);
  friend USeries operator+(USeries a, const USeries& b) { return a += b; }
  friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
  friend USeries operator*(const USeries& a, const USeries& b);
  friend USeries operator*(USeries a, const QCoeff& c) { return a *= c; }
  friend bool operator==(const USeries& a, const USeries& b);

  bool is_zero() const;
  /// Multiplicative inverse; throws NonUnitError unless the constant term is invertible.
  USeries recip() const;
  /// s^e by repeated squaring.
  USeries pow(unsigned long e) const;
  /// (1 + x)^c = Σ_k binom(c, k) x^k for a series with constant term exactly 1 and any
  /// coefficient-valued exponent c (e.g. a polynomial in q).
  USeries pow_general(const QCoeff& c) const;
  /// Coefficientwise evaluation at a numeric q.
  USeries at(const QContext& numeric_ctx) const;
  /// Same series viewed at a smaller truncation order.
  USeries truncated(int new_order) const;

 private:
  void check_compatible(const USeries& o) const;
  QContext ctx_;
  int order_;
  std::vector<QCoeff> coeffs_;
};

USeries series_mul(const USeries& a, const USeries& b);
USeries series_pow(const USeries& a, unsigned long e);
USeries series_recip(const USeries& a);

/// Rewrites a series in u whose odd coefficients vanish as a series in v = u²:
/// coefficient 2k becomes coefficient k. Throws MismatchError on a nonzero odd coefficient.
USeries even_part_in_v(const USeries& s);

enum class Sign { plus, minus };

/// The ratio b = ±q^exponent that a q-Pochhammer product is built on.
struct QBase {
  int exponent = 1;
  bool negate = false;
  /// (sign·q)^d: the base of (1/q^d)_r, or of (1/q^d)_{r, q↦−q} when sign is minus.
  static QBase substituted(int d, Sign sign) { return {d, sign == Sign::minus && d % 2 != 0}; }
};

/// ∏_{s=1}^{r} (1 − b^{−s}); equals 1 for r = 0.
QCoeff pochhammer(const QContext& ctx, QBase base, int r);
/// (1/q^d)_r, or (1/q^d)_{r, q↦−q} when sign is minus.
QCoeff pochhammer(const QContext& ctx, int d, Sign sign, int r);

/// Σ_{m=0}^{⌊N/i⌋} (scale·u^i)^m / (b)_m, the finite-per-coefficient form of
/// ∏_{l≥0} 1/(1 − scale·u^i/b^l).
USeries euler_sum(int i, const QCoeff& scale, QBase base, int order);

}  // namespace commlie
