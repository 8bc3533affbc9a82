#include "commlie/series.hpp"

#include "commlie/error.hpp"

namespace commlie {

USeries::USeries(QContext ctx, int order) : ctx_(std::move(ctx)), order_(order) {
  if (order < 0) throw UsageError("series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, ctx_.zero());
}

USeries USeries::one(const QContext& ctx, int order) {
  USeries s(ctx, order);
  s.coeffs_[0] = ctx.one();
  return s;
}

USeries USeries::monomial(const QCoeff& c, int k, int order) {
  USeries s(c.context(), order);
  if (k >= 0 && k <= order) s.coeffs_[k] = c;
  return s;
}

void USeries::check_compatible(const USeries& o) const {
  if (!(ctx_ == o.ctx_)) throw ModeMismatch("series coefficient modes differ");
  if (order_ != o.order_) throw ModeMismatch("series truncation orders differ");
}

USeries& USeries::operator+=(const USeries& o) {
  check_compatible(o);
  for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

USeries& USeries::operator-=(const USeries& o) {
  check_compatible(o);
  for (int k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

USeries operator*(const USeries& a, const USeries& b) {
  a.check_compatible(b);
  USeries out(a.ctx_, a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

USeries& USeries::operator*=(const USeries& o) { return *this = *this * o; }

USeries& USeries::operator*=(const QCoeff& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const USeries& a, const USeries& b) {
  a.check_compatible(b);
  for (int k = 0; k <= a.order_; ++k) {
    if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
  }
  return true;
}

bool USeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

USeries USeries::recip() const {
  if (coeffs_[0].is_zero()) throw NonUnitError("series reciprocal needs a nonzero constant term");
  USeries out(ctx_, order_);
  QCoeff inv0 = coeffs_[0].inverse();
  out.coeffs_[0] = inv0;
  for (int k = 1; k <= order_; ++k) {
    QCoeff acc = ctx_.zero();
    for (int j = 1; j <= k; ++j) {
      if (coeffs_[j].is_zero()) continue;
      acc += coeffs_[j] * out.coeffs_[k - j];
    }
    out.coeffs_[k] = -(acc * inv0);
  }
  return out;
}

USeries USeries::pow(unsigned long e) const {
  USeries result = one(ctx_, order_);
  USeries base = *this;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

USeries USeries::pow_general(const QCoeff& c) const {
  if (!coeffs_[0].is_one()) throw NonUnitError("general power needs constant term 1");
  USeries x = *this;
  x.coeffs_[0] = ctx_.zero();
  USeries result = one(ctx_, order_);
  USeries xk = one(ctx_, order_);
  QCoeff binom = ctx_.one();
  for (int k = 1; k <= order_; ++k) {
    xk *= x;
    if (xk.is_zero()) break;
    binom *= (c - ctx_.integer(k - 1));
    binom /= ctx_.integer(k);
    result += xk * binom;
  }
  return result;
}

USeries USeries::at(const QContext& numeric_ctx) const {
  USeries out(numeric_ctx, order_);
  for (int k = 0; k <= order_; ++k) out.coeffs_[k] = coeffs_[k].at(numeric_ctx);
  return out;
}

USeries USeries::truncated(int new_order) const {
  if (new_order > order_) throw UsageError("cannot raise the truncation order of a series");
  USeries out(ctx_, new_order);
  for (int k = 0; k <= new_order; ++k) out.coeffs_[k] = coeffs_[k];
  return out;
}

USeries series_mul(const USeries& a, const USeries& b) { return a * b; }
USeries series_pow(const USeries& a, unsigned long e) { return a.pow(e); }
USeries series_recip(const USeries& a) { return a.recip(); }

USeries even_part_in_v(const USeries& s) {
  USeries out(s.context(), s.order() / 2);
  for (int k = 0; k <= s.order(); ++k) {
    if (k % 2 == 0) {
      out[k / 2] = s[k];
    } else if (!s[k].is_zero()) {
      throw MismatchError("odd u-coefficient " + std::to_string(k) + " is nonzero: " + s[k].to_string());
    }
  }
  return out;
}

QCoeff pochhammer(const QContext& ctx, QBase base, int r) {
  if (r < 0) throw UsageError("Pochhammer length must be non-negative");
  QCoeff result = ctx.one();
  for (int s = 1; s <= r; ++s) {
    // b^{-s} = (±1)^s q^{-exponent·s}
    QCoeff term = ctx.q_power(-static_cast<long>(base.exponent) * s);
    if (base.negate && s % 2 != 0) term = -term;
    result *= ctx.one() - term;
  }
  return result;
}

QCoeff pochhammer(const QContext& ctx, int d, Sign sign, int r) {
  return pochhammer(ctx, QBase::substituted(d, sign), r);
}

USeries euler_sum(int i, const QCoeff& scale, QBase base, int order) {
  if (i <= 0) throw UsageError("euler_sum needs a positive u-exponent");
  const QContext& ctx = scale.context();
  USeries out(ctx, order);
  QCoeff power = ctx.one();
  QCoeff poch = ctx.one();
  for (int m = 0; m * i <= order; ++m) {
    if (m > 0) {
      power *= scale;
      QCoeff term = ctx.q_power(-static_cast<long>(base.exponent) * m);
      if (base.negate && m % 2 != 0) term = -term;
      poch *= ctx.one() - term;
    }
    out[m * i] = power / poch;
  }
  return out;
}

}  // namespace commlie
