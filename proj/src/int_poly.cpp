#include "commlie/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "commlie/error.hpp"

namespace commlie {

IntPoly::IntPoly(long c) : coeffs_{mpz_class(c)} { trim(); }
IntPoly::IntPoly(const mpz_class& c) : coeffs_{c} { trim(); }
IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const mpz_class& c, int k) {
  std::vector<mpz_class> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  IntPoly r = *this;
  if (g != 1) {
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return r;
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly IntPoly::divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error("inexact polynomial division");
  std::vector<mpz_class> rem = a.coeffs_;
  std::vector<mpz_class> quot(a.degree() - b.degree() + 1);
  const mpz_class& lb = b.leading();
  mpz_class r;
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const mpz_class& top = rem[k + b.degree()];
    if (top == 0) continue;
    mpz_tdiv_r(r.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    if (r != 0) throw Error("inexact polynomial division");
    mpz_class qk = top / lb;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= qk * b.coeffs_[j];
    quot[k] = qk;
  }
  if (std::any_of(rem.begin(), rem.end(), [](const mpz_class& c) { return c != 0; })) {
    throw Error("inexact polynomial division");
  }
  return IntPoly(std::move(quot));
}

IntPoly IntPoly::pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error("pseudo-remainder by zero");
  std::vector<mpz_class> rem = a.coeffs_;
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  int dr = a.degree();
  while (dr >= db && dr >= 0) {
    mpz_class top = rem[dr];
    for (auto& c : rem) c *= lb;
    for (int j = 0; j <= db; ++j) rem[dr - db + j] -= top * b.coeffs_[j];
    rem.resize(dr);  // leading term cancelled exactly
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    dr = static_cast<int>(rem.size()) - 1;
  }
  return IntPoly(std::move(rem));
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  mpz_class cont;
  {
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  if (x.leading() < 0) x = -x;
  x *= cont;
  return x;
}

std::string IntPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

IntPoly IntPoly::parse(std::string_view text, std::string_view var) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw UsageError("empty polynomial");
  IntPoly result;
  std::size_t i = 0;
  auto fail = [&]() { throw UsageError("malformed polynomial: " + std::string(text)); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    mpz_class coef = 1;
    bool have_digits = false;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      coef = mpz_class(s.substr(start, i - start));
      have_digits = true;
    }
    int power = 0;
    if (s.compare(i, var.size(), var) == 0 || (i < s.size() && s[i] == '*')) {
      if (s[i] == '*') {
        if (!have_digits) fail();
        ++i;
      }
      if (s.compare(i, var.size(), var) != 0) fail();
      i += var.size();
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t ps = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == ps) fail();
        power = std::stoi(s.substr(ps, i - ps));
      }
    } else if (!have_digits) {
      fail();
    }
    result += monomial(coef * sign, power);
  }
  return result;
}

}  // namespace commlie
