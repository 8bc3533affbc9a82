#pragma once

#include <gmpxx.h>

#include <string>

#include "commlie/int_poly.hpp"

namespace commlie {

/// Reduced ratio of two integer polynomials in q.
///
/// Canonical form: numerator and denominator coprime in Z[q] (content included),
/// denominator with positive leading coefficient, zero stored as 0/1. Equality is
/// therefore equality of representation.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(IntPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(IntPoly num, IntPoly den);
  static RationalFunction from_rational(const mpq_class& c);
  /// q^e for any integer e.
  static RationalFunction q_power(long e);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == IntPoly(1); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  RationalFunction inverse() const;
  /// Value at q = x; throws Error if the denominator vanishes there.
  mpq_class evaluate(const mpz_class& x) const;

  std::string to_string(std::string_view var = "q") const;

 private:
  void normalize();
  IntPoly num_;
  IntPoly den_;
};

}  // namespace commlie
