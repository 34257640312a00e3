#include "zonoforge/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace zonoforge {

Echelon rref(RatMatrix a, std::size_t ncols) {
  for (const auto& row : a) {
    if (row.size() != ncols) throw std::invalid_argument("row length does not match column count");
  }
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const Rat inv = Rat(1) / a[r][c];
    for (std::size_t j = c; j < ncols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const RatMatrix& a, std::size_t ncols) { return rref(a, ncols).pivots.size(); }

RatMatrix nullspace(const RatMatrix& a, std::size_t ncols) {
  const Echelon e = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(ncols, Rat(0));
    v[f] = Rat(1);
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis), ncols).rows;
}

RatMatrix intersect_rowspaces(const RatMatrix& u, const RatMatrix& v, std::size_t ncols) {
  RatMatrix perp = nullspace(u, ncols);
  RatMatrix pv = nullspace(v, ncols);
  perp.insert(perp.end(), pv.begin(), pv.end());
  return nullspace(perp, ncols);
}

bool in_rowspace(const Echelon& e, const RatVector& v) {
  RatVector w = v;
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const Rat f = w[e.pivots[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * e.rows[i][j];
  }
  for (const auto& x : w) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::size_t int_rank(IntMatrix a) {
  if (a.empty()) return 0;
  const std::size_t m = a.size();
  const std::size_t n = a[0].size();
  std::int64_t prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(a[r][c]) * a[i][j] -
                             static_cast<__int128>(a[i][c]) * a[r][j];
        a[i][j] = static_cast<std::int64_t>(num / prev);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

mpz_class int_det(const IntMatrix& in) {
  const std::size_t n = in.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (in[i].size() != n) throw std::invalid_argument("determinant of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(in[i][j]);
  }
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace zonoforge
