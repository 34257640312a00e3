#include "zonoforge/spaces.hpp"

#include "zonoforge/concurrency.hpp"

#include <algorithm>
#include <stdexcept>

namespace zonoforge {

namespace {

void check_degree(unsigned degree) {
  if (degree > kMaxComponentDegree) throw std::invalid_argument("component degree limited to 12");
}

MPoly D(std::size_t n, std::size_t i) {
  // D_0 = 0 by convention.
  return i == 0 ? MPoly(n) : MPoly::variable(n, i - 1);
}

MPoly ones_form(std::size_t n, std::size_t i, std::size_t j) {
  MPoly p(n);
  for (std::size_t k = i; k <= j; ++k) p += MPoly::variable(n, k - 1);
  return p;
}

GradedComponent from_rows(std::size_t nvars, unsigned degree, const RatMatrix& rows) {
  GradedComponent c{nvars, degree, {}};
  for (const auto& r : rows) c.basis.push_back(from_coordinates(nvars, degree, r));
  return c;
}

RatMatrix rows_of(const GradedComponent& c) {
  RatMatrix m;
  for (const auto& b : c.basis) m.push_back(coordinates(b, c.degree));
  return m;
}

std::size_t ncoords(std::size_t nvars, unsigned degree) { return monomials_of_degree(nvars, degree).size(); }

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = start; j + (k - cur.size()) <= m; ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

bool GradedComponent::contains(const MPoly& p) const {
  if (p.nvars() != nvars) throw std::invalid_argument("variable-count mismatch");
  if (p.is_zero()) return true;
  if (!p.is_homogeneous() || total_degree(p.terms().begin()->first) != degree) return false;
  const Echelon e = rref(rows_of(*this), ncoords(nvars, degree));
  return in_rowspace(e, coordinates(p, degree));
}

MPoly column_product(const EdgeMatrix& x, const std::vector<std::size_t>& cols) {
  MPoly p = MPoly::constant(x.n, Rat(1));
  for (std::size_t c : cols) p = p * x.form(c);
  return p;
}

OperatorFamily cocircuit_ideal_ops(const EdgeMatrix& x) {
  OperatorFamily f{"cocircuit", x.n, {}};
  for (const auto& c : cocircuits(x)) f.ops.push_back(column_product(x, c.indices));
  return f;
}

OperatorFamily internal_ideal_ops(const EdgeMatrix& x) {
  OperatorFamily f{"internal-cocircuit", x.n, {}};
  for (const auto& c : minimal_transversals(x.size(), passive_bases(x))) f.ops.push_back(column_product(x, c.indices));
  return f;
}

OperatorFamily bw_central_ops(std::size_t n) {
  const EdgeMatrix x = edge_matrix(broken_wheel(n));
  OperatorFamily f{"bw-central", n, {}};
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      std::vector<std::size_t> cols{2 * i - 2};  // x_{2i-1}
      for (std::size_t r = i; r <= j; ++r) cols.push_back(2 * r - 1);  // radii x_{2r}
      if (j < n) cols.push_back(2 * j);  // x_{2j+1}
      f.ops.push_back(column_product(x, cols));
    }
  }
  return f;
}

OperatorFamily bw_internal_ops(std::size_t n) {
  const EdgeMatrix x = edge_matrix(broken_wheel(n));
  OperatorFamily f{"bw-internal", n, {}};
  for (std::size_t i = 1; i < n; ++i) f.ops.push_back(column_product(x, {2 * i - 1, 2 * i}));
  f.ops.push_back(column_product(x, {2 * n - 1}));
  return f;
}

OperatorFamily bw_pcentral_ops(std::size_t n) {
  OperatorFamily f{"bw-p-central", n, {}};
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) f.ops.push_back(ones_form(n, i, j).pow(static_cast<unsigned>(j - i + 3)));
  for (std::size_t i = 1; i <= n; ++i) f.ops.push_back(ones_form(n, i, n).pow(static_cast<unsigned>(n - i + 2)));
  return f;
}

OperatorFamily bw_pinternal_ops(std::size_t n) {
  OperatorFamily f{"bw-p-internal", n, {}};
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) f.ops.push_back(ones_form(n, i, j).pow(static_cast<unsigned>(j - i + 2)));
  for (std::size_t i = 1; i <= n; ++i) f.ops.push_back(ones_form(n, i, n).pow(static_cast<unsigned>(n - i + 1)));
  return f;
}

OperatorFamily step_quadratic_ops(std::size_t n) {
  OperatorFamily f{"step-quadratic", n, {}};
  for (std::size_t i = 1; i <= n; ++i) f.ops.push_back(D(n, i) * (D(n, i) - D(n, i - 1)));
  return f;
}

OperatorFamily interval_chain_ops(std::size_t n) {
  OperatorFamily f{"interval-chain", n, {}};
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      MPoly op = D(n, j + 1) - D(n, j);
      for (std::size_t k = i; k <= j; ++k) op = op * D(n, k);
      f.ops.push_back(op * (D(n, i) - D(n, i - 1)));
    }
  }
  return f;
}

OperatorFamily full_chain_ops(std::size_t n) {
  OperatorFamily f{"full-chain", n, {}};
  MPoly all = MPoly::constant(n, Rat(1));
  for (std::size_t k = 1; k <= n; ++k) all = all * D(n, k);
  for (std::size_t i = 1; i <= n; ++i) f.ops.push_back(all * (D(n, i) - D(n, i - 1)));
  return f;
}

RatVector coordinates(const MPoly& p, unsigned degree) {
  const auto ms = monomials_of_degree(p.nvars(), degree);
  RatVector v(ms.size(), Rat(0));
  for (const auto& [s, c] : p.terms()) {
    if (total_degree(s) != degree) throw std::invalid_argument("polynomial has a term of the wrong degree");
    const auto it = std::lower_bound(ms.begin(), ms.end(), s);
    v[static_cast<std::size_t>(it - ms.begin())] = c;
  }
  return v;
}

MPoly from_coordinates(std::size_t nvars, unsigned degree, const RatVector& v) {
  const auto ms = monomials_of_degree(nvars, degree);
  if (v.size() != ms.size()) throw std::invalid_argument("coordinate vector has the wrong length");
  MPoly p(nvars);
  for (std::size_t i = 0; i < ms.size(); ++i) p.add_term(ms[i], v[i]);
  return p;
}

GradedComponent span_component(std::size_t nvars, unsigned degree, const std::vector<MPoly>& gens) {
  check_degree(degree);
  RatMatrix m;
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("variable-count mismatch");
    if (!g.is_zero()) m.push_back(coordinates(g, degree));
  }
  return from_rows(nvars, degree, rref(std::move(m), ncoords(nvars, degree)).rows);
}

GradedComponent annihilator_kernel(const OperatorFamily& fam, unsigned degree) {
  check_degree(degree);
  const std::size_t n = fam.nvars;
  const auto ms = monomials_of_degree(n, degree);
  // One constraint row per (operator, image monomial); columns index the degree-d monomials.
  RatMatrix constraints;
  for (const auto& op : fam.ops) {
    if (op.nvars() != n) throw std::invalid_argument("operator variable-count mismatch");
    std::map<Exponent, std::size_t> row_of;
    RatMatrix block;
    for (std::size_t col = 0; col < ms.size(); ++col) {
      const MPoly img = apply_diff(op, MPoly::monomial(ms[col]));
      for (const auto& [s, c] : img.terms()) {
        auto [it, inserted] = row_of.try_emplace(s, block.size());
        if (inserted) block.emplace_back(ms.size(), Rat(0));
        block[it->second][col] = c;
      }
    }
    for (auto& r : block) constraints.push_back(std::move(r));
  }
  return from_rows(n, degree, nullspace(constraints, ms.size()));
}

bool annihilates(const OperatorFamily& fam, const MPoly& p) {
  return std::all_of(fam.ops.begin(), fam.ops.end(), [&](const MPoly& op) { return apply_diff(op, p).is_zero(); });
}

GradedComponent pspace_component(const EdgeMatrix& x, unsigned degree) {
  check_degree(degree);
  std::vector<MPoly> gens;
  if (degree <= x.size()) {
    for (const auto& r : subsets_of_size(x.size(), degree)) {
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (!std::binary_search(r.begin(), r.end(), j)) rest.push_back(j);
      if (x.rank_of(rest) == x.n) gens.push_back(column_product(x, r));
    }
  }
  return span_component(x.n, degree, gens);
}

GradedComponent intersect(const GradedComponent& a, const GradedComponent& b) {
  if (a.nvars != b.nvars || a.degree != b.degree) throw std::invalid_argument("components differ in shape");
  const std::size_t m = ncoords(a.nvars, a.degree);
  return from_rows(a.nvars, a.degree, intersect_rowspaces(rows_of(a), rows_of(b), m));
}

GradedComponent pinternal_component(const EdgeMatrix& x, unsigned degree) {
  check_degree(degree);
  GradedComponent acc{x.n, degree, {}};
  bool first = true;
  for (std::size_t drop = 0; drop < x.size(); ++drop) {
    EdgeMatrix y;
    y.n = x.n;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (j != drop) y.columns.push_back(x.columns[j]);
    const GradedComponent c = pspace_component(y, degree);
    acc = first ? c : intersect(acc, c);
    first = false;
    if (acc.dim() == 0) break;
  }
  return acc;
}

bool is_monomial_space(const GradedComponent& c, const std::set<Exponent>& candidate) {
  std::size_t count = 0;
  for (const auto& s : candidate) {
    if (s.size() != c.nvars) throw std::invalid_argument("candidate exponent has the wrong length");
    if (total_degree(s) != c.degree) continue;
    ++count;
    if (!c.contains(MPoly::monomial(s))) return false;
  }
  return count == c.dim();
}

std::vector<std::size_t> hilbert_series(const EdgeMatrix& x, SpaceKind kind) {
  const OperatorFamily fam = kind == SpaceKind::central ? cocircuit_ideal_ops(x) : internal_ideal_ops(x);
  return parallel_map(x.n + 1, [&](std::size_t j) { return annihilator_kernel(fam, static_cast<unsigned>(j)).dim(); });
}

std::vector<std::size_t> p_hilbert_series(const EdgeMatrix& x, SpaceKind kind) {
  return parallel_map(x.n + 1, [&](std::size_t j) {
    const auto d = static_cast<unsigned>(j);
    return (kind == SpaceKind::central ? pspace_component(x, d) : pinternal_component(x, d)).dim();
  });
}

std::map<Exponent, MPoly> monic_basis(const EdgeMatrix& x, const std::vector<Exponent>& parking, bool internal) {
  const OperatorFamily fam = internal ? internal_ideal_ops(x) : cocircuit_ideal_ops(x);
  std::map<unsigned, std::vector<Exponent>> by_degree;
  for (const auto& s : parking) {
    if (s.size() != x.n) throw std::invalid_argument("parking vector has the wrong length");
    by_degree[total_degree(s)].push_back(s);
  }
  std::map<Exponent, MPoly> out;
  for (auto& [d, group] : by_degree) {
    std::sort(group.begin(), group.end());
    const std::set<Exponent> cand(group.begin(), group.end());
    const GradedComponent p = internal ? pinternal_component(x, d) : pspace_component(x, d);
    if (!is_monomial_space(p, cand)) throw std::runtime_error("P-space is not spanned by the given parking monomials");
    const GradedComponent k = annihilator_kernel(fam, d);
    const std::size_t m = group.size();
    if (k.dim() != m) throw std::runtime_error("singular monic system: dimension mismatch");
    // Augmented system: rows = parking coordinates, columns = kernel basis, right side = identity.
    RatMatrix aug(m, RatVector(2 * m, Rat(0)));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) aug[r][c] = coeff_of(k.basis[c], group[r]);
      aug[r][m + r] = Rat(1);
    }
    const Echelon e = rref(aug, 2 * m);
    if (e.pivots.size() < m || e.pivots[m - 1] != m - 1) throw std::runtime_error("singular monic system");
    // e.rows[c][m + r] is the weight of kernel vector c in the monic polynomial for group[r].
    for (std::size_t r = 0; r < m; ++r) {
      MPoly poly(x.n);
      for (std::size_t c = 0; c < m; ++c) poly += k.basis[c] * e.rows[c][m + r];
      out.emplace(group[r], std::move(poly));
    }
  }
  return out;
}

std::vector<GradedComponent> derivative_closure(const MPoly& f) {
  const int deg = f.degree();
  if (deg < 0) return {};
  if (!f.is_homogeneous()) throw std::invalid_argument("derivative closure expects a homogeneous polynomial");
  const std::size_t n = f.nvars();
  std::vector<GradedComponent> out;
  for (int j = deg; j >= 0; --j) {
    std::vector<MPoly> gens;
    for (const auto& s : monomials_of_degree(n, static_cast<unsigned>(deg - j))) gens.push_back(differentiate(f, s));
    out.push_back(span_component(n, static_cast<unsigned>(j), gens));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace zonoforge
