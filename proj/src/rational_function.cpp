#include "commlie/rational_function.hpp"

#include "commlie/error.hpp"

namespace commlie {

RationalFunction::RationalFunction(IntPoly num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::from_rational(const mpq_class& c) {
  return RationalFunction(IntPoly(c.get_num()), IntPoly(c.get_den()));
}

RationalFunction RationalFunction::q_power(long e) {
  if (e >= 0) return RationalFunction(IntPoly::monomial(1, static_cast<int>(e)));
  RationalFunction r;
  r.num_ = IntPoly(1);
  r.den_ = IntPoly::monomial(1, static_cast<int>(-e));
  return r;
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  if (den_ == IntPoly(1)) return;
  IntPoly g = IntPoly::gcd(num_, den_);
  if (!(g == IntPoly(1))) {
    num_ = IntPoly::divexact(num_, g);
    den_ = IntPoly::divexact(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (num_.is_zero() || o.num_.is_zero()) {
    *this = RationalFunction();
    return *this;
  }
  // Both operands are reduced, so cross-cancelling keeps the product reduced.
  IntPoly g1 = IntPoly::gcd(num_, o.den_);
  IntPoly g2 = IntPoly::gcd(o.num_, den_);
  IntPoly n = IntPoly::divexact(num_, g1) * IntPoly::divexact(o.num_, g2);
  IntPoly d = IntPoly::divexact(den_, g2) * IntPoly::divexact(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error("inverse of the zero rational function");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.leading() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

mpq_class RationalFunction::evaluate(const mpz_class& x) const {
  mpz_class d = den_.evaluate(x);
  if (d == 0) throw Error("rational function has a pole at q = " + x.get_str());
  mpq_class r(num_.evaluate(x), d);
  r.canonicalize();
  return r;
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace commlie
