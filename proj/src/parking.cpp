#include "zonoforge/parking.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zonoforge {

namespace {

std::vector<std::size_t> non_root_vertices(const DirectedMultigraph& g, std::size_t root) {
  if (root > g.n) throw std::invalid_argument("root out of range");
  std::vector<std::size_t> vs;
  for (std::size_t v = 0; v <= g.n; ++v) {
    if (v != root) vs.push_back(v);
  }
  return vs;
}

// Subset condition for all nonempty U drawn from vs[0..upto) that contain vs[upto-1].
bool subsets_ok(const DirectedMultigraph& g, const std::vector<std::size_t>& vs, const Exponent& s,
                std::size_t upto, bool only_with_last) {
  if (upto > 30) throw std::invalid_argument("too many vertices for subset check");
  const std::uint32_t full = (1u << upto) - 1u;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (only_with_last && !(mask & (1u << (upto - 1)))) continue;
    std::vector<bool> inside(g.n + 1, false);
    for (std::size_t b = 0; b < upto; ++b) {
      if (mask & (1u << b)) inside[vs[b]] = true;
    }
    bool found = false;
    for (std::size_t b = 0; b < upto && !found; ++b) {
      if ((mask & (1u << b)) && s[b] < out_degree(g, vs[b], inside)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::size_t degree_of(const DirectedMultigraph& g, std::size_t v) {
  std::size_t d = 0;
  for (const auto& e : g.edges) {
    if (e.tail == e.head) continue;
    if (e.tail == v || e.head == v) ++d;
  }
  return d;
}

}  // namespace

std::size_t out_degree(const DirectedMultigraph& g, std::size_t v, const std::vector<bool>& inside) {
  std::size_t d = 0;
  for (const auto& e : g.edges) {
    if (e.tail == v && !inside[e.head]) ++d;
    if (e.head == v && !inside[e.tail]) ++d;
  }
  return d;
}

bool is_gparking(const DirectedMultigraph& g, std::size_t root, const Exponent& s) {
  const auto vs = non_root_vertices(g, root);
  if (s.size() != vs.size()) return false;
  return subsets_ok(g, vs, s, vs.size(), false);
}

ParkingFunction::ParkingFunction(const DirectedMultigraph& g, std::size_t root, Exponent s) : s_(std::move(s)) {
  if (!is_gparking(g, root, s_)) throw std::invalid_argument("vector is not a parking function of the graph");
}

std::vector<ParkingFunction> enumerate_parking(const DirectedMultigraph& g, std::size_t root) {
  const auto vs = non_root_vertices(g, root);
  if (vs.size() > kMaxParkingVertices) throw std::invalid_argument("parking enumeration limited to 7 vertices");
  std::vector<ParkingFunction> out;
  Exponent s(vs.size(), 0);
  std::vector<std::size_t> cap(vs.size());
  for (std::size_t b = 0; b < vs.size(); ++b) cap[b] = degree_of(g, vs[b]);
  // Depth-first over positions; prefixes are pruned by the subsets they already determine.
  auto dfs = [&](auto&& self, std::size_t pos) -> void {
    if (pos == vs.size()) {
      ParkingFunction pf;
      pf.s_ = s;
      out.push_back(std::move(pf));
      return;
    }
    for (unsigned v = 0; v < cap[pos]; ++v) {
      s[pos] = v;
      if (subsets_ok(g, vs, s, pos + 1, true)) self(self, pos + 1);
    }
    s[pos] = 0;
  };
  if (vs.empty()) {
    out.push_back(ParkingFunction());
    return out;
  }
  dfs(dfs, 0);
  return out;
}

std::vector<ParkingFunction> maximal_parking(const DirectedMultigraph& g, std::size_t root) {
  std::vector<ParkingFunction> out;
  const std::size_t n = g.n;  // graphs here have n non-root vertices
  for (auto& p : enumerate_parking(g, root)) {
    if (p.degree() == n) out.push_back(std::move(p));
  }
  return out;
}

std::size_t bw_outdegree(std::size_t n, std::size_t i, std::size_t k, std::size_t j) {
  if (!(1 <= i && i <= k && k <= j && j <= n)) throw std::invalid_argument("need 1 <= i <= k <= j <= n");
  std::size_t d = 1;  // radius to 0
  if (k == 1 || k - 1 < i) d += 1;  // rim edge to k-1, or the doubled radius at vertex 1
  if (k < n && k + 1 > j) d += 1;
  return d;
}

bool bw_parking_interval(std::size_t n, const Exponent& s) {
  if (s.size() != n) throw std::invalid_argument("parking vector length must be n");
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      bool ok = false;
      for (std::size_t k = i; k <= j && !ok; ++k) ok = s[k - 1] < bw_outdegree(n, i, k, j);
      if (!ok) return false;
    }
  }
  return true;
}

bool bw_internal_parking(std::size_t n, const Exponent& s) {
  if (s.size() != n) throw std::invalid_argument("parking vector length must be n");
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      bool ok = false;
      for (std::size_t k = i; k < j && !ok; ++k) ok = s[k - 1] < bw_outdegree(n, i, k, j);
      if (!ok) ok = s[j - 1] + 1 < bw_outdegree(n, i, j, j);
      if (!ok) return false;
    }
  }
  return true;
}

MPoly bw_p0(std::size_t n) {
  MPoly p = MPoly::constant(n, Rat(1));
  for (std::size_t i = 1; i <= n; ++i) {
    MPoly f = MPoly::variable(n, i - 1);
    if (i >= 2) f += MPoly::variable(n, i - 2);
    p = p * f;
  }
  return p;
}

MPoly bw_p1(std::size_t n) {
  MPoly p = MPoly::constant(n, Rat(1));
  for (std::size_t i = 1; i <= n; ++i) {
    MPoly f = MPoly::constant(n, Rat(1)) + MPoly::variable(n, i - 1);
    if (i >= 2) f += MPoly::variable(n, i - 2);
    p = p * f;
  }
  return p;
}

MPoly bw_pminus(std::size_t n) {
  MPoly p = MPoly::constant(n, Rat(1));
  for (std::size_t i = 1; i < n; ++i) p = p * (MPoly::constant(n, Rat(1)) + MPoly::variable(n, i - 1));
  return p;
}

std::vector<Exponent> exponents(const std::vector<ParkingFunction>& fs) {
  std::vector<Exponent> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.values());
  return out;
}

SupportCharacterization support_characterizations(std::size_t n) {
  if (n < 1 || n > 8) throw std::invalid_argument("support characterizations need 1 <= n <= 8");
  SupportCharacterization r{bw_p0(n), bw_p1(n), bw_pminus(n)};
  std::set<Exponent> all;
  std::set<Exponent> maximal;
  std::set<Exponent> internal;
  // Candidates are bounded by vertex degree 3.
  Exponent s(n, 0);
  while (true) {
    if (bw_parking_interval(n, s)) {
      all.insert(s);
      if (total_degree(s) == n) maximal.insert(s);
    }
    if (bw_internal_parking(n, s)) internal.insert(s);
    std::size_t pos = n;
    while (pos > 0 && s[pos - 1] == 2) {
      s[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
    ++s[pos - 1];
  }
  if (n <= kMaxParkingVertices) {
    const auto g = broken_wheel(n);
    auto listed = exponents(enumerate_parking(g, 0));
    all = std::set<Exponent>(listed.begin(), listed.end());
    listed = exponents(maximal_parking(g, 0));
    maximal = std::set<Exponent>(listed.begin(), listed.end());
  }
  r.maximal_ok = support(r.p0) == maximal;
  r.all_ok = support(r.p1) == all;
  r.internal_ok = support(r.pminus) == internal;
  return r;
}

}  // namespace zonoforge
