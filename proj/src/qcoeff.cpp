#include "commlie/qcoeff.hpp"

#include "commlie/error.hpp"

namespace commlie {

QContext QContext::numeric(const mpz_class& q) {
  if (q < 2) throw UsageError("numeric q must be at least 2");
  return QContext(q);
}

const mpz_class& QContext::q_value() const {
  if (!q_) throw ModeMismatch("symbolic context has no numeric q");
  return *q_;
}

QCoeff QContext::zero() const { return integer(0); }
QCoeff QContext::one() const { return integer(1); }

QCoeff QContext::integer(const mpz_class& v) const { return rational(mpq_class(v)); }

QCoeff QContext::rational(const mpq_class& v) const {
  mpq_class c = v;
  c.canonicalize();  // callers may pass an unreduced num/den pair
  if (is_symbolic()) return QCoeff(*this, RationalFunction::from_rational(c));
  return QCoeff(*this, c);
}

QCoeff QContext::q() const { return q_power(1); }

QCoeff QContext::q_power(long e) const {
  if (is_symbolic()) return QCoeff(*this, RationalFunction::q_power(e));
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), q_->get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  mpq_class v = e < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
  return QCoeff(*this, v);
}

QCoeff QContext::from_function(const RationalFunction& f) const {
  if (is_symbolic()) return QCoeff(*this, f);
  return QCoeff(*this, f.evaluate(*q_));
}

std::string QContext::label() const { return q_ ? q_->get_str() : "symbolic"; }

void QCoeff::check_mode(const QCoeff& o) const {
  if (!(ctx_ == o.ctx_)) {
    throw ModeMismatch("coefficient mode mismatch: " + ctx_.label() + " vs " + o.ctx_.label());
  }
}

bool QCoeff::is_zero() const {
  if (const auto* r = std::get_if<mpq_class>(&value_)) return *r == 0;
  return std::get<RationalFunction>(value_).is_zero();
}

bool QCoeff::is_one() const {
  if (const auto* r = std::get_if<mpq_class>(&value_)) return *r == 1;
  return std::get<RationalFunction>(value_) == RationalFunction(IntPoly(1));
}

bool QCoeff::is_integral() const {
  if (const auto* r = std::get_if<mpq_class>(&value_)) return r->get_den() == 1;
  return std::get<RationalFunction>(value_).is_polynomial();
}

const mpq_class& QCoeff::rational() const {
  if (const auto* r = std::get_if<mpq_class>(&value_)) return *r;
  throw ModeMismatch("symbolic coefficient has no rational value");
}

mpz_class QCoeff::as_integer() const {
  const mpq_class& r = rational();
  if (r.get_den() != 1) throw IntegralityError("value " + r.get_str() + " is not an integer");
  return r.get_num();
}

const RationalFunction& QCoeff::function() const {
  if (const auto* f = std::get_if<RationalFunction>(&value_)) return *f;
  throw ModeMismatch("numeric coefficient has no symbolic value");
}

const IntPoly& QCoeff::as_polynomial() const {
  const RationalFunction& f = function();
  if (!f.is_polynomial()) throw IntegralityError("value " + f.to_string() + " is not a polynomial");
  return f.numerator();
}

QCoeff QCoeff::at(const QContext& numeric_ctx) const {
  if (numeric_ctx.is_symbolic()) {
    check_mode(numeric_ctx.zero());
    return *this;
  }
  if (is_symbolic()) return QCoeff(numeric_ctx, function().evaluate(numeric_ctx.q_value()));
  check_mode(numeric_ctx.zero());
  return *this;
}

QCoeff QCoeff::operator-() const {
  QCoeff r = *this;
  std::visit([](auto& v) { v = -v; }, r.value_);
  return r;
}

QCoeff& QCoeff::operator+=(const QCoeff& o) {
  check_mode(o);
  if (auto* r = std::get_if<mpq_class>(&value_)) {
    *r += std::get<mpq_class>(o.value_);
  } else {
    std::get<RationalFunction>(value_) += std::get<RationalFunction>(o.value_);
  }
  return *this;
}

QCoeff& QCoeff::operator-=(const QCoeff& o) {
  check_mode(o);
  if (auto* r = std::get_if<mpq_class>(&value_)) {
    *r -= std::get<mpq_class>(o.value_);
  } else {
    std::get<RationalFunction>(value_) -= std::get<RationalFunction>(o.value_);
  }
  return *this;
}

QCoeff& QCoeff::operator*=(const QCoeff& o) {
  check_mode(o);
  if (auto* r = std::get_if<mpq_class>(&value_)) {
    *r *= std::get<mpq_class>(o.value_);
  } else {
    std::get<RationalFunction>(value_) *= std::get<RationalFunction>(o.value_);
  }
  return *this;
}

QCoeff& QCoeff::operator/=(const QCoeff& o) {
  check_mode(o);
  if (o.is_zero()) throw Error("division by zero coefficient");
  if (auto* r = std::get_if<mpq_class>(&value_)) {
    *r /= std::get<mpq_class>(o.value_);
  } else {
    std::get<RationalFunction>(value_) /= std::get<RationalFunction>(o.value_);
  }
  return *this;
}

bool operator==(const QCoeff& a, const QCoeff& b) {
  a.check_mode(b);
  return a.value_ == b.value_;
}

QCoeff QCoeff::inverse() const { return ctx_.one() / *this; }

QCoeff QCoeff::pow(long e) const {
  QCoeff base = e < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  QCoeff result = ctx_.one();
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::string QCoeff::to_string() const {
  if (const auto* r = std::get_if<mpq_class>(&value_)) return r->get_str();
  return std::get<RationalFunction>(value_).to_string();
}

const QCoeff& require_integral(const QCoeff& v, const std::string& stratum) {
  if (!v.is_integral()) {
    throw IntegralityError(stratum + ": expected an exact integer, got " + v.to_string());
  }
  return v;
}

}  // namespace commlie
