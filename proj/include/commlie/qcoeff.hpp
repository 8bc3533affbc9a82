#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>

#include "commlie/int_poly.hpp"
#include "commlie/rational_function.hpp"

namespace commlie {

class QCoeff;

/// Coefficient mode: a fixed integer q >= 2 (exact rationals) or the indeterminate q
/// (reduced rational functions). Every QCoeff is created through a context.
class QContext {
 public:
  static QContext numeric(const mpz_class& q);
  static QContext numeric(long q) { return numeric(mpz_class(q)); }
  static QContext symbolic() { return QContext(); }

  bool is_symbolic() const { return !q_.has_value(); }
  /// Throws ModeMismatch in symbolic mode.
  const mpz_class& q_value() const;

  QCoeff zero() const;
  QCoeff one() const;
  QCoeff integer(const mpz_class& v) const;
  QCoeff rational(const mpq_class& v) const;
  QCoeff q() const;
  /// q^e for any integer e.
  QCoeff q_power(long e) const;
  /// Embeds a symbolic polynomial/rational function; in numeric mode it is evaluated at q.
  QCoeff from_function(const RationalFunction& f) const;

  /// "symbolic" or the decimal value of q.
  std::string label() const;

  friend bool operator==(const QContext&, const QContext&) = default;

 private:
  QContext() = default;
  explicit QContext(mpz_class q) : q_(std::move(q)) {}
  std::optional<mpz_class> q_;
};

/// A scalar in either coefficient mode. Mixing modes (or two different numeric q)
/// throws ModeMismatch.
class QCoeff {
 public:
  const QContext& context() const { return ctx_; }
  bool is_symbolic() const { return ctx_.is_symbolic(); }

  bool is_zero() const;
  bool is_one() const;
  /// Integer (numeric mode) or polynomial with integer coefficients (symbolic mode).
  bool is_integral() const;

  /// Numeric mode only.
  const mpq_class& rational() const;
  /// Numeric mode, integral values only.
  mpz_class as_integer() const;
  /// Symbolic mode only.
  const RationalFunction& function() const;
  /// Symbolic mode, integral values only.
  const IntPoly& as_polynomial() const;

  /// Value at a concrete q: evaluates symbolic values, checks numeric ones share that q.
  QCoeff at(const QContext& numeric_ctx) const;

  QCoeff operator-() const;
  QCoeff& operator+=(const QCoeff& o);
  QCoeff& operator-=(const QCoeff& o);
  QCoeff& operator*=(const QCoeff& o);
  QCoeff& operator/=(const QCoeff& o);
  friend QCoeff operator+(QCoeff a, const QCoeff& b) { return a += b; }
  friend QCoeff operator-(QCoeff a, const QCoeff& b) { return a -= b; }
  friend QCoeff operator*(QCoeff a, const QCoeff& b) { return a *= b; }
  friend QCoeff operator/(QCoeff a, const QCoeff& b) { return a /= b; }
  friend bool operator==(const QCoeff& a, const QCoeff& b);

  QCoeff inverse() const;
  /// Integer power; negative exponents need a nonzero value.
  QCoeff pow(long e) const;

  /// Exact decimal/rational or canonical polynomial text.
  std::string to_string() const;

 private:
  friend class QContext;
  QCoeff(QContext ctx, mpq_class v) : ctx_(std::move(ctx)), value_(std::move(v)) {}
  QCoeff(QContext ctx, RationalFunction f) : ctx_(std::move(ctx)), value_(std::move(f)) {}
  void check_mode(const QCoeff& o) const;

  QContext ctx_;
  std::variant<mpq_class, RationalFunction> value_;
};

/// Returns v unchanged when it is integral; otherwise throws IntegralityError naming the stratum.
const QCoeff& require_integral(const QCoeff& v, const std::string& stratum);

}  // namespace commlie
