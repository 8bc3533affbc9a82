#include "commlie/bruteforce.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "commlie/error.hpp"

namespace commlie {

std::string to_string(SpaceFamily f) {
  switch (f) {
    case SpaceFamily::mat: return "mat";
    case SpaceFamily::gu: return "gu";
    case SpaceFamily::herm: return "herm";
    case SpaceFamily::sp: return "sp";
  }
  return "?";
}

LieSpace::LieSpace(SpaceFamily family, int n, int size, int q, FiniteField field)
    : family_(family), n_(n), size_(size), q_(q), field_(std::move(field)) {}

LieSpace LieSpace::make(SpaceFamily family, int n, int q) {
  if (n < 1) throw UsageError("brute-force spaces need n >= 1");
  int p = 0, k = 0;
  if (!prime_power(q, p, k) || k > 2) throw UsageError("q must be a prime or the square of a prime");
  const bool hermitian = family == SpaceFamily::gu || family == SpaceFamily::herm;
  if (hermitian && k != 1) throw UsageError("unitary oracle spaces need a prime q");
  if (family == SpaceFamily::sp && p == 2) throw CharacteristicTwoError("sp oracle");

  const int size = family == SpaceFamily::sp ? 2 * n : n;
  LieSpace s(family, n, size, q, hermitian ? FiniteField::make(p, 2) : FiniteField::make(p, k));
  const FiniteField& f = s.field_;
  s.coords_per_entry_ = hermitian ? 2 : 1;
  for (int v = 0; v < q; ++v) s.base_values_.push_back(static_cast<FqElem>(v));

  auto unit = [&](int i, int j, FqElem c) {
    FqMatrix m(size);
    m(i, j) = c;
    return m;
  };

  switch (family) {
    case SpaceFamily::mat:
      for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) s.basis_.push_back(unit(i, j, 1));
      }
      break;
    case SpaceFamily::gu:
    case SpaceFamily::herm: {
      for (int t = 1; t < f.size(); ++t) {
        if (f.frobenius(static_cast<FqElem>(t)) == f.neg(static_cast<FqElem>(t))) {
          s.theta_ = static_cast<FqElem>(t);
          break;
        }
      }
      const bool skew = family == SpaceFamily::gu;
      const FqElem alpha = static_cast<FqElem>(p);
      for (int i = 0; i < size; ++i) s.basis_.push_back(unit(i, i, skew ? s.theta_ : FqElem{1}));
      for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) {
          for (FqElem z : {FqElem{1}, alpha}) {
            FqMatrix m = unit(i, j, z);
            FqElem zbar = f.frobenius(z);
            m(j, i) = skew ? f.neg(zbar) : zbar;
            s.basis_.push_back(std::move(m));
          }
        }
      }
      break;
    }
    case SpaceFamily::sp: {
      // A = S·J^{-1} with S symmetric and J^{-1} = [[0, −I], [I, 0]].
      FqMatrix jinv(size);
      for (int i = 0; i < n; ++i) {
        jinv(i, n + i) = f.neg(1);
        jinv(n + i, i) = 1;
      }
      for (int i = 0; i < size; ++i) {
        for (int j = i; j < size; ++j) {
          FqMatrix sym = unit(i, j, 1);
          sym(j, i) = 1;
          s.basis_.push_back(fqmat::mul(f, sym, jinv));
        }
      }
      break;
    }
  }
  return s;
}

bool LieSpace::contains(const FqMatrix& a) const {
  if (a.n != size_) return false;
  switch (family_) {
    case SpaceFamily::mat:
      for (FqElem e : a.a) {
        if (e >= q_) return false;
      }
      return true;
    case SpaceFamily::gu: {
      FqMatrix neg(size_);
      for (std::size_t i = 0; i < a.a.size(); ++i) neg.a[i] = field_.neg(a.a[i]);
      return fqmat::conj_transpose(field_, a) == neg;
    }
    case SpaceFamily::herm:
      return fqmat::conj_transpose(field_, a) == a;
    case SpaceFamily::sp: {
      FqMatrix j(size_);
      for (int i = 0; i < n_; ++i) {
        j(i, n_ + i) = 1;
        j(n_ + i, i) = field_.neg(1);
      }
      FqMatrix aj = fqmat::mul(field_, a, j);
      return fqmat::transpose(aj) == aj;
    }
  }
  return false;
}

FqMatrix LieSpace::element(const std::vector<FqElem>& coords) const {
  FqMatrix m(size_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (coords[k] == 0) continue;
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = field_.add(m.a[i], field_.mul(coords[k], basis_[k].a[i]));
  }
  return m;
}

std::vector<FqElem> LieSpace::flatten(const FqMatrix& a) const {
  std::vector<FqElem> out;
  out.reserve(a.a.size() * coords_per_entry_);
  const int p = field_.characteristic();
  for (FqElem e : a.a) {
    if (coords_per_entry_ == 2) {
      out.push_back(static_cast<FqElem>(e % p));
      out.push_back(static_cast<FqElem>(e / p));
    } else {
      out.push_back(e);
    }
  }
  return out;
}

int basis_rank(const LieSpace& space) {
  std::vector<std::vector<FqElem>> rows;
  for (const auto& b : space.basis()) rows.push_back(space.flatten(b));
  return rank_of_rows(space.field(), std::move(rows));
}

namespace {

std::vector<std::vector<FqElem>> ad_columns(const FqMatrix& a, const LieSpace& space) {
  std::vector<std::vector<FqElem>> cols;
  cols.reserve(space.basis().size());
  for (const auto& b : space.basis()) cols.push_back(space.flatten(fqmat::commutator(space.field(), a, b)));
  return cols;
}

void require_member(const FqMatrix& a, const LieSpace& space) {
  if (!space.contains(a)) throw UsageError("matrix is not an element of the " + to_string(space.family()) + " space");
}

// Unchecked versions for the enumeration loops, where membership holds by construction.
int nullity_of(const FqMatrix& a, const LieSpace& space) {
  auto cols = ad_columns(a, space);
  const std::size_t nrows = cols.empty() ? 0 : cols[0].size();
  std::vector<std::vector<FqElem>> rows(nrows, std::vector<FqElem>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < nrows; ++r) rows[r][c] = cols[c][r];
  }
  return space.dim() - rank_of_rows(space.field(), std::move(rows));
}

std::vector<FqMatrix> centralizer_basis_of(const FqMatrix& a, const LieSpace& space) {
  std::vector<FqMatrix> out;
  for (const auto& v : nullspace_of_columns(space.field(), ad_columns(a, space))) out.push_back(space.element(v));
  return out;
}

// Visits every combination Σ c_k gens[k] with c_k in the base field, in lexicographic order
// of (c_0, ..., c_{m-1}) restricted to linear indices [begin, end), updating incrementally.
template <class Visit>
void walk(const LieSpace& space, const std::vector<FqMatrix>& gens, std::uint64_t begin, std::uint64_t end,
          Visit&& visit) {
  const FiniteField& f = space.field();
  const auto& vals = space.base_values();
  const std::uint64_t base = vals.size();
  const std::size_t m = gens.size();
  const int size = space.matrix_size();
  if (begin >= end) return;

  std::vector<std::size_t> digit(m, 0);
  std::uint64_t rest = begin;
  for (std::size_t k = m; k-- > 0;) {
    digit[k] = static_cast<std::size_t>(rest % base);
    rest /= base;
  }
  FqMatrix cur(size);
  for (std::size_t k = 0; k < m; ++k) {
    const FqElem c = vals[digit[k]];
    if (c == 0) continue;
    for (std::size_t i = 0; i < cur.a.size(); ++i) cur.a[i] = f.add(cur.a[i], f.mul(c, gens[k].a[i]));
  }
  if (m == 0) {
    visit(cur);
    return;
  }

  for (std::uint64_t idx = begin;;) {
    visit(cur);
    if (++idx == end) break;
    for (std::size_t k = m; k-- > 0;) {
      FqElem old = vals[digit[k]];
      digit[k] = (digit[k] + 1) % base;
      FqElem delta = f.sub(vals[digit[k]], old);
      const auto& g = gens[k].a;
      for (std::size_t i = 0; i < cur.a.size(); ++i) {
        if (g[i] != 0) cur.a[i] = f.add(cur.a[i], f.mul(delta, g[i]));
      }
      if (digit[k] != 0) break;
    }
  }
}

std::uint64_t element_total(const LieSpace& space) {
  std::uint64_t total = 1;
  for (int k = 0; k < space.dim(); ++k) total *= static_cast<std::uint64_t>(space.q());
  return total;
}

// Splits [0, q^dim) into fixed contiguous slices, processes them on a worker pool and returns
// the per-slice accumulators in slice order, so reductions do not depend on the thread count.
template <class Acc, class Visit>
std::vector<Acc> run_slices(const LieSpace& space, const OracleOptions& opts, const Visit& visit) {
  check_guard(space, opts.force);
  const std::uint64_t total = element_total(space);
  const std::uint64_t nslices = std::min<std::uint64_t>(total, 256);
  std::vector<Acc> results(nslices);
  std::atomic<std::uint64_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (std::uint64_t s = next++; s < nslices; s = next++) {
        std::uint64_t lo = total / nslices * s + std::min(s, total % nslices);
        std::uint64_t hi = lo + total / nslices + (s < total % nslices ? 1 : 0);
        walk(space, space.basis(), lo, hi, [&](const FqMatrix& a) { visit(a, results[s]); });
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next = nslices;
    }
  };
  const int nthreads = std::min<std::uint64_t>(worker_threads(opts.threads), nslices);
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

std::vector<std::vector<FFPoly>> base_irreducibles(const LieSpace& space) {
  return ffpoly::irreducibles_up_to(space.field(), space.matrix_size(), space.coords_per_entry() == 2);
}

std::vector<std::pair<FFPoly, Partition>> fingerprint_with(const FqMatrix& a, const LieSpace& space,
                                                           const std::vector<std::vector<FFPoly>>& irr) {
  const FiniteField& f = space.field();
  FqMatrix b = space.family() == SpaceFamily::gu ? fqmat::scale(f, space.theta(), a) : a;
  FFPoly cp = fqmat::characteristic_polynomial(f, b);
  for (FqElem c : cp) {
    if (c >= space.q()) throw Error("characteristic polynomial has a coefficient outside the base field");
  }
  std::vector<std::pair<FFPoly, Partition>> out;
  const int size = space.matrix_size();
  for (std::size_t d = 1; d < irr.size() && ffpoly::degree(cp) > 0; ++d) {
    for (const auto& phi : irr[d]) {
      int mult = 0;
      FFPoly quotient;
      while (ffpoly::degree(cp) > 0 && ffpoly::divides(f, phi, cp, quotient)) {
        cp = quotient;
        ++mult;
      }
      if (mult == 0) continue;
      FqMatrix p = fqmat::evaluate(f, phi, b);
      FqMatrix pk = fqmat::identity(size);
      int prev = size;
      std::vector<int> columns;
      for (int k = 1; k <= mult; ++k) {
        pk = fqmat::mul(f, pk, p);
        int r = fqmat::rank(f, pk);
        int drop = prev - r;
        if (drop % static_cast<int>(d) != 0) throw Error("rank drop not divisible by the factor degree");
        if (drop == 0) break;
        columns.push_back(drop / static_cast<int>(d));
        prev = r;
      }
      Partition lam = Partition(columns).conjugate();
      if (lam.size() != mult) throw Error("kernel ranks disagree with the characteristic polynomial");
      out.emplace_back(phi, lam);
    }
  }
  return out;
}

}  // namespace

int centralizer_nullity(const FqMatrix& a, const LieSpace& space) {
  require_member(a, space);
  return nullity_of(a, space);
}

std::vector<FqMatrix> centralizer_basis(const FqMatrix& a, const LieSpace& space) {
  require_member(a, space);
  return centralizer_basis_of(a, space);
}

int worker_threads(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("COMMLIE_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

void check_guard(const LieSpace& space, bool force) {
  const double bits = space.dim() * std::log2(static_cast<double>(space.q()));
  if (bits > 62) throw GuardExceeded("enumeration of q^" + std::to_string(space.dim()) + " elements is infeasible");
  if (!force && bits > 22.0 + 1e-9) {
    throw GuardExceeded(to_string(space.family()) + " space of dimension " + std::to_string(space.dim()) +
                        " over F_" + std::to_string(space.q()) + " exceeds the 2^22 enumeration guard (use --force)");
  }
}

std::vector<std::uint64_t> nullity_histogram(const LieSpace& space, const OracleOptions& opts) {
  auto slices = run_slices<std::vector<std::uint64_t>>(space, opts, [&](const FqMatrix& a, auto& acc) {
    if (acc.empty()) acc.assign(static_cast<std::size_t>(space.dim()) + 1, 0);
    ++acc[nullity_of(a, space)];
  });
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(space.dim()) + 1, 0);
  for (const auto& s : slices) {
    for (std::size_t k = 0; k < s.size(); ++k) hist[k] += s[k];
  }
  return hist;
}

mpz_class count_commuting_pairs(const LieSpace& space, const OracleOptions& opts) {
  auto hist = nullity_histogram(space, opts);
  mpz_class total = 0;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    if (hist[k] == 0) continue;
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(space.q()), k);
    total += term * mpz_class(static_cast<unsigned long>(hist[k]));
  }
  return total;
}

mpz_class count_nilpotent_pairs(const LieSpace& space, const OracleOptions& opts) {
  const FiniteField& f = space.field();
  auto slices = run_slices<std::uint64_t>(space, opts, [&](const FqMatrix& a, std::uint64_t& acc) {
    if (!fqmat::is_nilpotent(f, a)) return;
    auto gens = centralizer_basis_of(a, space);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < gens.size(); ++k) total *= static_cast<std::uint64_t>(space.q());
    walk(space, gens, 0, total, [&](const FqMatrix& b) {
      if (fqmat::is_nilpotent(f, b)) ++acc;
    });
  });
  mpz_class sum = 0;
  for (auto s : slices) sum += mpz_class(static_cast<unsigned long>(s));
  return sum;
}

std::uint64_t count_nilpotent_elements(const LieSpace& space, const OracleOptions& opts) {
  auto slices = run_slices<std::uint64_t>(space, opts, [&](const FqMatrix& a, std::uint64_t& acc) {
    if (fqmat::is_nilpotent(space.field(), a)) ++acc;
  });
  std::uint64_t sum = 0;
  for (auto s : slices) sum += s;
  return sum;
}

std::uint64_t count_elements(const LieSpace& space, const OracleOptions& opts) {
  auto slices = run_slices<std::uint64_t>(space, opts, [&](const FqMatrix& a, std::uint64_t& acc) {
    if (!space.contains(a)) throw Error("enumeration produced a matrix outside the space");
    ++acc;
  });
  std::uint64_t sum = 0;
  for (auto s : slices) sum += s;
  return sum;
}

std::vector<std::pair<FFPoly, Partition>> canonical_fingerprint(const FqMatrix& a, const LieSpace& space) {
  require_member(a, space);
  return fingerprint_with(a, space, base_irreducibles(space));
}

std::string fingerprint_key(const std::vector<std::pair<FFPoly, Partition>>& fp) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [phi, lam] : fp) {
    if (!first) os << ';';
    first = false;
    for (std::size_t i = phi.size(); i-- > 0;) os << static_cast<int>(phi[i]) << (i > 0 ? "." : "");
    os << ':' << lam.to_string();
  }
  return os.str();
}

std::map<std::string, CensusClass> orbit_census(const LieSpace& space, const OracleOptions& opts) {
  const auto irr = base_irreducibles(space);
  using Acc = std::map<std::string, CensusClass>;
  auto slices = run_slices<Acc>(space, opts, [&](const FqMatrix& a, Acc& acc) {
    auto fp = fingerprint_with(a, space, irr);
    auto& cls = acc[fingerprint_key(fp)];
    if (cls.count == 0) cls.factors = std::move(fp);
    ++cls.count;
  });
  Acc out;
  for (auto& s : slices) {
    for (auto& [key, cls] : s) {
      auto& dst = out[key];
      if (dst.count == 0) dst.factors = cls.factors;
      dst.count += cls.count;
    }
  }
  return out;
}

}  // namespace commlie
