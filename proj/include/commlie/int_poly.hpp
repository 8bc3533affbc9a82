#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace commlie {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first with no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c);  // NOLINT(google-explicit-constructor): constants convert freely
  IntPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  /// The monomial c·x^k.
  static IntPoly monomial(const mpz_class& c, int k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(int k) const;
  const mpz_class& leading() const;

  /// Non-negative gcd of the coefficients; 0 for the zero polynomial.
  mpz_class content() const;
  IntPoly primitive_part() const;

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact quotient a / b over Z[x]; throws Error if b does not divide a.
  static IntPoly divexact(const IntPoly& a, const IntPoly& b);
  /// Sparse pseudo-remainder: lc(b)^k·a mod b for the number k of reduction steps taken.
  static IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
  /// gcd in Z[x] with positive leading coefficient (gcd(0, 0) = 0).
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  /// Canonical rendering, descending powers with explicit signs: "q^6 + q^5 - q^3".
  std::string to_string(std::string_view var = "q") const;
  /// Inverse of to_string; throws UsageError on malformed input.
  static IntPoly parse(std::string_view text, std::string_view var = "q");

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

}  // namespace commlie
