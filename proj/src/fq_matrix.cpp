#include "commlie/fq_matrix.hpp"

#include "commlie/error.hpp"

namespace commlie {

namespace fqmat {

FqMatrix identity(int n) {
  FqMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool is_zero(const FqMatrix& m) {
  for (FqElem e : m.a) {
    if (e != 0) return false;
  }
  return true;
}

FqMatrix add(const FiniteField& f, const FqMatrix& x, const FqMatrix& y) {
  FqMatrix out(x.n);
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = f.add(x.a[i], y.a[i]);
  return out;
}

FqMatrix sub(const FiniteField& f, const FqMatrix& x, const FqMatrix& y) {
  FqMatrix out(x.n);
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = f.sub(x.a[i], y.a[i]);
  return out;
}

FqMatrix scale(const FiniteField& f, FqElem c, const FqMatrix& x) {
  FqMatrix out(x.n);
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = f.mul(c, x.a[i]);
  return out;
}

FqMatrix mul(const FiniteField& f, const FqMatrix& x, const FqMatrix& y) {
  const int n = x.n;
  FqMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      FqElem xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < n; ++j) out(i, j) = f.add(out(i, j), f.mul(xik, y(k, j)));
    }
  }
  return out;
}

FqMatrix commutator(const FiniteField& f, const FqMatrix& x, const FqMatrix& y) {
  return sub(f, mul(f, x, y), mul(f, y, x));
}

FqMatrix transpose(const FqMatrix& x) {
  FqMatrix out(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) out(j, i) = x(i, j);
  }
  return out;
}

FqMatrix conj_transpose(const FiniteField& f, const FqMatrix& x) {
  FqMatrix out(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) out(j, i) = f.frobenius(x(i, j));
  }
  return out;
}

bool is_nilpotent(const FiniteField& f, const FqMatrix& x) {
  FqMatrix p = x;
  for (int e = 1; e < x.n; e *= 2) {
    if (is_zero(p)) return true;
    p = mul(f, p, p);
  }
  return is_zero(p);
}

FqMatrix evaluate(const FiniteField& f, const FFPoly& phi, const FqMatrix& x) {
  FqMatrix out(x.n);
  for (auto it = phi.rbegin(); it != phi.rend(); ++it) {
    out = mul(f, out, x);
    for (int i = 0; i < x.n; ++i) out(i, i) = f.add(out(i, i), *it);
  }
  return out;
}

namespace {

FFPoly det_rec(const FiniteField& f, const std::vector<std::vector<FFPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  FFPoly total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].empty()) continue;
    std::vector<std::vector<FFPoly>> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) minor[r - 1].push_back(m[r][k]);
      }
    }
    FFPoly term = ffpoly::mul(f, m[0][c], det_rec(f, minor));
    if (c % 2 == 1) {
      for (auto& e : term) e = f.neg(e);
    }
    if (total.size() < term.size()) total.resize(term.size(), 0);
    for (std::size_t i = 0; i < term.size(); ++i) total[i] = f.add(total[i], term[i]);
    ffpoly::trim(total);
  }
  return total;
}

}  // namespace

FFPoly characteristic_polynomial(const FiniteField& f, const FqMatrix& x) {
  if (x.n == 0) return {1};
  if (x.n > 6) throw UsageError("characteristic polynomial by cofactor expansion is limited to size 6");
  std::vector<std::vector<FFPoly>> m(x.n, std::vector<FFPoly>(x.n));
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) {
      FFPoly e{f.neg(x(i, j))};
      if (i == j) e.push_back(1);
      ffpoly::trim(e);
      m[i][j] = e;
    }
  }
  return det_rec(f, m);
}

int rank(const FiniteField& f, const FqMatrix& x) {
  std::vector<std::vector<FqElem>> rows(x.n);
  for (int i = 0; i < x.n; ++i) rows[i].assign(x.a.begin() + i * x.n, x.a.begin() + (i + 1) * x.n);
  return rank_of_rows(f, std::move(rows));
}

}  // namespace fqmat

namespace {

// Reduces rows in place to row echelon form; returns pivot columns.
std::vector<std::size_t> echelon(const FiniteField& f, std::vector<std::vector<FqElem>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    FqElem inv = f.inv(rows[r][c]);
    for (std::size_t k = c; k < cols; ++k) rows[r][k] = f.mul(inv, rows[r][k]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      FqElem factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_of_rows(const FiniteField& f, std::vector<std::vector<FqElem>> rows) {
  return static_cast<int>(echelon(f, rows).size());
}

std::vector<std::vector<FqElem>> nullspace_of_columns(const FiniteField& f,
                                                      const std::vector<std::vector<FqElem>>& columns) {
  const std::size_t ncols = columns.size();
  if (ncols == 0) return {};
  const std::size_t nrows = columns[0].size();
  std::vector<std::vector<FqElem>> rows(nrows, std::vector<FqElem>(ncols));
  for (std::size_t c = 0; c < ncols; ++c) {
    for (std::size_t r = 0; r < nrows; ++r) rows[r][c] = columns[c][r];
  }
  std::vector<std::size_t> pivots = echelon(f, rows);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<FqElem>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FqElem> v(ncols, 0);
    v[free] = 1;
    // Reduced echelon form: pivot row i reads x_{p_i} + Σ_{free} a·x_free = 0.
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace commlie
