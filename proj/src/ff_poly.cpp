#include "commlie/ff_poly.hpp"

#include "commlie/error.hpp"

namespace commlie::ffpoly {

void trim(FFPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const FFPoly& a) { return static_cast<int>(a.size()) - 1; }

FFPoly mul(const FiniteField& f, const FFPoly& a, const FFPoly& b) {
  if (a.empty() || b.empty()) return {};
  FFPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

FFPoly rem(const FiniteField& f, const FFPoly& a, const FFPoly& b) {
  if (b.empty() || b.back() != 1) throw Error("ffpoly::rem needs a monic divisor");
  FFPoly r = a;
  trim(r);
  const int db = degree(b);
  while (degree(r) >= db) {
    FqElem top = r.back();
    int shift = degree(r) - db;
    for (int j = 0; j <= db; ++j) r[shift + j] = f.sub(r[shift + j], f.mul(top, b[j]));
    trim(r);
  }
  return r;
}

bool divides(const FiniteField& f, const FFPoly& b, const FFPoly& a, FFPoly& quotient) {
  if (b.empty() || b.back() != 1) throw Error("ffpoly::divides needs a monic divisor");
  FFPoly r = a;
  trim(r);
  const int db = degree(b);
  quotient.assign(std::max(0, degree(r) - db + 1), 0);
  while (degree(r) >= db) {
    FqElem top = r.back();
    int shift = degree(r) - db;
    quotient[shift] = top;
    for (int j = 0; j <= db; ++j) r[shift + j] = f.sub(r[shift + j], f.mul(top, b[j]));
    trim(r);
  }
  trim(quotient);
  return r.empty();
}

std::vector<FFPoly> monic_polys(const FiniteField& f, int degree, bool prime_subfield) {
  const int base = prime_subfield ? f.characteristic() : f.size();
  long total = 1;
  for (int i = 0; i < degree; ++i) total *= base;
  std::vector<FFPoly> out;
  out.reserve(static_cast<std::size_t>(total));
  for (long code = 0; code < total; ++code) {
    FFPoly p(static_cast<std::size_t>(degree) + 1, 0);
    long c = code;
    for (int i = 0; i < degree; ++i) {
      p[i] = static_cast<FqElem>(c % base);
      c /= base;
    }
    p[degree] = 1;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<FFPoly>> irreducibles_up_to(const FiniteField& f, int max_degree, bool prime_subfield) {
  std::vector<std::vector<FFPoly>> out(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 1; d <= max_degree; ++d) {
    for (auto& cand : monic_polys(f, d, prime_subfield)) {
      bool reducible = false;
      for (int e = 1; 2 * e <= d && !reducible; ++e) {
        for (const auto& g : out[e]) {
          if (rem(f, cand, g).empty()) {
            reducible = true;
            break;
          }
        }
      }
      if (!reducible) out[d].push_back(std::move(cand));
    }
  }
  return out;
}

FFPoly dual(const FiniteField& f, const FFPoly& phi) {
  FFPoly out = phi;
  const int d = degree(phi);
  for (int i = 0; i <= d; ++i) {
    if ((d + i) % 2 != 0) out[i] = f.neg(out[i]);
  }
  return out;
}

}  // namespace commlie::ffpoly
