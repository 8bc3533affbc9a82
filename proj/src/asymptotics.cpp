#include "commlie/asymptotics.hpp"

#include <functional>

#include "commlie/counts_gl.hpp"
#include "commlie/counts_sp.hpp"
#include "commlie/counts_u.hpp"
#include "commlie/error.hpp"

namespace commlie {

namespace {

mpq_class inv_power(long q, int e) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  return mpq_class(mpz_class(1), d);
}

mpq_class rational_pow(const mpq_class& base, long e) {
  mpq_class b = e < 0 ? mpq_class(1) / base : base;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), k);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

// Factor k of the product as (1 − x)^{minus_exp}·(1 + x)^{plus_exp}, x = q^{−k}.
struct Exponents {
  long minus_exp;
  long plus_exp;
};

// Per-index log weights are bounded by slope·k + offset; the tail bound below relies on it.
struct Product {
  std::function<Exponents(int)> exponents;
  mpq_class slope;
  mpq_class offset;
};

Product product_for(Family family) {
  switch (family) {
    case Family::gl:
      return {[](int k) { return Exponents{-k, 0}; }, 1, 0};
    case Family::u:
      return {[](int k) { return Exponents{k % 2 == 1 ? -1 : -(k / 4), 0}; }, mpq_class(1, 4), 1};
    case Family::sp:
      return {[](int k) { return Exponents{-((k + 1) / 2), 1}; }, mpq_class(1, 2), mpq_class(3, 2)};
  }
  throw Error("unknown family");
}

Product unsimplified_u() {
  return {[](int k) {
            long a = -(k / 2 + 1) + (k % 2 == 0 ? 1 : 0);
            long b = -((k + 1) / 2) + (k % 2 == 1 ? 1 : 0);
            return Exponents{a, b};
          },
          1, 0};
}

// Using |log(1 ± x)| <= x/(1−x) termwise, the log of the omitted factors k > J is at most
//   T = Σ_{k>J} (slope·k + offset)·x^k / (1 − x^{J+1}),   x = 1/q,
// and |P·e^{t} − P| <= P·T/(1−T) whenever |t| <= T < 1.
mpq_class tail_bound(const Product& prod, long q, int J, const mpq_class& partial) {
  mpq_class x(1, q);
  mpq_class xj1 = inv_power(q, J + 1);
  mpq_class geo = xj1 / (1 - x);
  mpq_class arith = xj1 * ((J + 1) - J * x) / ((1 - x) * (1 - x));
  mpq_class t = (prod.slope * arith + prod.offset * geo) / (1 - xj1);
  if (t >= 1) return mpq_class(-1);
  return partial * t / (1 - t);
}

LimitConstant evaluate(Family family, long q, const Product& prod, const mpq_class& eps, int terms) {
  if (q < 2) throw UsageError("q must be at least 2");
  if (eps <= 0) throw UsageError("accuracy must be positive");
  if (family == Family::sp && q % 2 == 0) throw CharacteristicTwoError("limit_constant");
  LimitConstant out;
  out.family = family;
  out.q = q;
  out.value = 1;
  for (int k = 1;; ++k) {
    mpq_class x = inv_power(q, k);
    Exponents e = prod.exponents(k);
    if (e.minus_exp != 0) out.value *= rational_pow(1 - x, e.minus_exp);
    if (e.plus_exp != 0) out.value *= rational_pow(1 + x, e.plus_exp);
    mpq_class bound = tail_bound(prod, q, k, out.value);
    if (terms > 0 ? k == terms : (bound >= 0 && bound < eps)) {
      if (bound < 0) throw Error("tail bound unavailable at this truncation; raise the number of terms");
      out.terms = k;
      out.error_bound = bound;
      return out;
    }
  }
}

}  // namespace

LimitConstant limit_constant(Family family, long q, const mpq_class& eps, int terms) {
  return evaluate(family, q, product_for(family), eps, terms);
}

LimitConstant limit_constant_u_unsimplified(long q, const mpq_class& eps, int terms) {
  return evaluate(Family::u, q, unsimplified_u(), eps, terms);
}

std::vector<ConvergenceRow> convergence_report(Family family, long q, int n_max, const LimitConstant& constant) {
  if (n_max < 1) throw UsageError("n_max must be at least 1");
  QContext ctx = QContext::numeric(q);
  USeries s = family == Family::gl  ? gl_pairs_series(ctx, n_max, Backend::gen_fn)
              : family == Family::u ? u_pairs_series(ctx, n_max, Backend::gen_fn)
                                    : sp_pairs_series(ctx, n_max, Backend::gen_fn);
  std::vector<ConvergenceRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    QCoeff order = family == Family::gl  ? group_order_gl(n, ctx)
                   : family == Family::u ? group_order_gu(n, ctx)
                                         : group_order_sp(n, ctx);
    QCoeff count = order * s[n];
    require_integral(count, to_string(family) + " pairs n=" + std::to_string(n));
    const int e = family == Family::sp ? 2 * n * n + 2 * n : n * n + n;
    ConvergenceRow row;
    row.n = n;
    row.ratio = count.rational() * inv_power(q, e);
    row.distance = abs(row.ratio - constant.value);
    rows.push_back(row);
  }
  return rows;
}

mpq_class power_of_ten_inverse(int k) { return inv_power(10, k); }

std::string to_decimal(const mpq_class& v, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = v.get_num() * scale;
  mpz_class scaled;
  mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), v.get_den_mpz_t());
  std::string sign = (v < 0) ? "-" : "";
  if (scaled < 0) scaled = -scaled;
  std::string s = scaled.get_str();
  if (digits == 0) return sign + s;
  if (static_cast<int>(s.size()) <= digits) s = std::string(digits - s.size() + 1, '0') + s;
  return sign + s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
}

}  // namespace commlie
