#include "zonoforge/activity.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace zonoforge {

namespace {

std::uint32_t to_mask(const std::vector<std::size_t>& idx) {
  std::uint32_t m = 0;
  for (std::size_t i : idx) m |= (1u << i);
  return m;
}

std::vector<std::size_t> from_mask(std::uint32_t m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i);
  }
  return out;
}

void require_basis(const EdgeMatrix& x, const Basis& b) {
  if (!is_basis(x, b)) throw std::invalid_argument("column set is not a basis");
}

void bases_dfs(const EdgeMatrix& x, std::size_t start, std::vector<std::size_t>& cur, std::vector<Basis>& out) {
  if (cur.size() == x.n) {
    out.push_back({cur});
    return;
  }
  const std::size_t need = x.n - cur.size();
  for (std::size_t j = start; j + need <= x.size(); ++j) {
    cur.push_back(j);
    if (x.rank_of(cur) == cur.size()) bases_dfs(x, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

long long TuttePoly::eval(long long s, long long t) const {
  long long total = 0;
  for (const auto& [e, c] : coeffs) {
    long long v = c;
    for (unsigned i = 0; i < e.first; ++i) v *= s;
    for (unsigned j = 0; j < e.second; ++j) v *= t;
    total += v;
  }
  return total;
}

TuttePoly TuttePoly::swapped() const {
  TuttePoly r;
  for (const auto& [e, c] : coeffs) r.coeffs[{e.second, e.first}] = c;
  return r;
}

std::vector<Basis> enumerate_bases(const EdgeMatrix& x) {
  if (x.size() > kMaxBasisColumns) throw std::invalid_argument("basis enumeration limited to 16 columns");
  if (x.rank() != x.n) throw std::invalid_argument("edge matrix is rank deficient");
  std::vector<Basis> out;
  std::vector<std::size_t> cur;
  bases_dfs(x, 0, cur, out);
  return out;
}

bool is_basis(const EdgeMatrix& x, const Basis& b) {
  if (b.indices.size() != x.n) return false;
  for (std::size_t i : b.indices) {
    if (i >= x.size()) return false;
  }
  return x.rank_of(b.indices) == x.n;
}

unsigned val(const EdgeMatrix& x, const Basis& b) {
  require_basis(x, b);
  unsigned count = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (std::binary_search(b.indices.begin(), b.indices.end(), j)) continue;
    std::vector<std::size_t> cols{j};
    for (std::size_t e : b.indices) {
      if (e < j) cols.push_back(e);
    }
    if (x.rank_of(cols) == cols.size()) ++count;
  }
  return count;
}

unsigned val_star(const EdgeMatrix& x, const Basis& b) {
  require_basis(x, b);
  unsigned count = 0;
  for (std::size_t e : b.indices) {
    std::vector<std::size_t> cols;
    for (std::size_t f : b.indices) {
      if (f != e) cols.push_back(f);
    }
    for (std::size_t j = e + 1; j < x.size(); ++j) {
      if (!std::binary_search(b.indices.begin(), b.indices.end(), j)) cols.push_back(j);
    }
    if (x.rank_of(cols) == x.n) ++count;
  }
  return count;
}

TuttePoly tutte(const EdgeMatrix& x) {
  TuttePoly t;
  const auto n = static_cast<unsigned>(x.n);
  for (const auto& b : enumerate_bases(x)) {
    t.coeffs[{n - val(x, b), n - val_star(x, b)}] += 1;
  }
  return t;
}

std::vector<Basis> maximal_bases(const EdgeMatrix& x) {
  std::vector<Basis> out;
  for (auto& b : enumerate_bases(x)) {
    if (val(x, b) == x.n) out.push_back(std::move(b));
  }
  return out;
}

std::vector<Basis> internal_bases(const EdgeMatrix& x) {
  std::vector<Basis> out;
  for (auto& b : enumerate_bases(x)) {
    if (val_star(x, b) == x.n) out.push_back(std::move(b));
  }
  return out;
}

std::vector<std::size_t> fundamental_cocircuit(const EdgeMatrix& x, const Basis& b, std::size_t elem) {
  require_basis(x, b);
  std::vector<std::size_t> rest;
  for (std::size_t f : b.indices) {
    if (f != elem) rest.push_back(f);
  }
  if (rest.size() + 1 != b.indices.size()) throw std::invalid_argument("element not in basis");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    std::vector<std::size_t> cols = rest;
    cols.push_back(j);
    if (x.rank_of(cols) == x.n) out.push_back(j);
  }
  return out;
}

std::vector<Basis> passive_bases(const EdgeMatrix& x) {
  std::vector<Basis> out;
  for (auto& b : enumerate_bases(x)) {
    bool passive = true;
    for (std::size_t e : b.indices) {
      if (fundamental_cocircuit(x, b, e).front() == e) {
        passive = false;
        break;
      }
    }
    if (passive) out.push_back(std::move(b));
  }
  return out;
}

std::vector<Cocircuit> cocircuits(const EdgeMatrix& x) {
  if (x.size() > kMaxBasisColumns) throw std::invalid_argument("cocircuit enumeration limited to 16 columns");
  const std::size_t m = x.size();
  std::set<std::uint32_t> seen;
  // Every hyperplane is spanned by some independent (n-1)-subset.
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) + 1 != x.n) continue;
    auto cols = from_mask(mask);
    if (x.rank_of(cols) + 1 != x.n) continue;
    std::uint32_t flat = 0;
    for (std::size_t j = 0; j < m; ++j) {
      auto ext = cols;
      ext.push_back(j);
      if (x.rank_of(ext) + 1 == x.n) flat |= (1u << j);
    }
    const std::uint32_t comp = ((1u << m) - 1u) & ~flat;
    seen.insert(comp);
  }
  std::vector<Cocircuit> out;
  for (std::uint32_t c : seen) out.push_back({from_mask(c)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Basis> minimal_transversals(std::size_t ncols, const std::vector<Basis>& family) {
  if (ncols > kMaxBasisColumns) throw std::invalid_argument("transversal search limited to 16 columns");
  std::vector<std::uint32_t> sets;
  for (const auto& b : family) sets.push_back(to_mask(b.indices));
  auto hits = [&](std::uint32_t m) {
    return std::all_of(sets.begin(), sets.end(), [m](std::uint32_t s) { return (s & m) != 0; });
  };
  std::vector<Basis> out;
  for (std::uint32_t m = 1; m < (1u << ncols); ++m) {
    if (!hits(m)) continue;
    bool minimal = true;
    for (std::uint32_t r = m; r && minimal; r &= r - 1) {
      if (hits(m & ~(r & (~r + 1)))) minimal = false;
    }
    if (minimal) out.push_back({from_mask(m)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> hilbert_from_bases(const EdgeMatrix& x) {
  std::vector<std::size_t> h(x.n + 1, 0);
  for (const auto& b : enumerate_bases(x)) ++h[val(x, b)];
  return h;
}

std::vector<std::size_t> internal_hilbert_from_bases(const EdgeMatrix& x) {
  std::vector<std::size_t> h(x.n + 1, 0);
  for (const auto& b : internal_bases(x)) ++h[val(x, b)];
  return h;
}

}  // namespace zonoforge
