#include "commlie/finite_field.hpp"

#include "commlie/error.hpp"

namespace commlie {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool prime_power(long q, int& p, int& k) {
  if (q < 2) return false;
  long d = 2;
  while (q % d != 0) ++d;
  long v = q;
  int e = 0;
  while (v % d == 0) {
    v /= d;
    ++e;
  }
  if (v != 1) return false;
  p = static_cast<int>(d);
  k = e;
  return true;
}

FiniteField FiniteField::make(int p, int k) {
  if (!is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
  if (k != 1 && k != 2) throw UsageError("only prime fields and quadratic extensions are supported");
  FiniteField f;
  f.p_ = p;
  f.k_ = k;
  f.size_ = k == 1 ? p : p * p;
  if (f.size_ > 256) throw UsageError("field too large for the brute-force oracle");

  if (k == 2) {
    // Lexicographically smallest monic irreducible x² + a·x + b: no root in F_p.
    for (int a = 0; a < p && f.modulus_.empty(); ++a) {
      for (int b = 0; b < p; ++b) {
        bool has_root = false;
        for (int x = 0; x < p && !has_root; ++x) has_root = (x * x + a * x + b) % p == 0;
        if (!has_root) {
          f.modulus_ = {b, a, 1};
          break;
        }
      }
    }
  }

  const int n = f.size_;
  f.add_.resize(n * n);
  f.mul_.resize(n * n);
  f.neg_.resize(n);
  f.inv_.assign(n, 0);
  f.frob_.resize(n);
  auto lo = [p](int e) { return e % p; };
  auto hi = [p](int e) { return e / p; };
  for (int a = 0; a < n; ++a) {
    f.neg_[a] = static_cast<FqElem>(((p - lo(a)) % p) + ((p - hi(a)) % p) * p);
    for (int b = 0; b < n; ++b) {
      int s0 = (lo(a) + lo(b)) % p;
      int s1 = (hi(a) + hi(b)) % p;
      f.add_[a * n + b] = static_cast<FqElem>(s0 + s1 * p);
      int c0 = lo(a) * lo(b);
      int c1 = lo(a) * hi(b) + hi(a) * lo(b);
      int c2 = hi(a) * hi(b);
      if (k == 2) {
        // x² = −a·x − b
        c0 -= c2 * f.modulus_[0];
        c1 -= c2 * f.modulus_[1];
      }
      c0 = ((c0 % p) + p) % p;
      c1 = ((c1 % p) + p) % p;
      f.mul_[a * n + b] = static_cast<FqElem>(c0 + c1 * p);
    }
  }
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b) {
      if (f.mul_[a * n + b] == 1) f.inv_[a] = static_cast<FqElem>(b);
    }
  }
  for (int a = 0; a < n; ++a) {
    FqElem r = 1;
    for (int i = 0; i < p; ++i) r = f.mul_[r * n + a];
    f.frob_[a] = r;
  }
  return f;
}

FiniteField FiniteField::of_order(int q) {
  int p = 0, k = 0;
  if (!prime_power(q, p, k)) throw UsageError(std::to_string(q) + " is not a prime power");
  return make(p, k);
}

FqElem FiniteField::inv(FqElem a) const {
  if (a == 0) throw Error("inverse of zero in a finite field");
  return inv_[a];
}

FqElem FiniteField::from_int(long v) const { return static_cast<FqElem>(((v % p_) + p_) % p_); }

}  // namespace commlie
