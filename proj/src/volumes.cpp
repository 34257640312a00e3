#include "zonoforge/volumes.hpp"

#include "zonoforge/concurrency.hpp"
#include "zonoforge/rng.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

namespace zonoforge {

namespace {

void check_n(std::size_t n) {
  if (n < 1 || n > kMaxVolumeN) throw std::invalid_argument("volume computations support 1 <= n <= 12");
}

Rat exponent_factorial(const Exponent& s) {
  Rat f(1);
  for (unsigned e : s) f *= factorial(e);
  return f;
}

}  // namespace

CompositionSet composition_set(std::size_t n) {
  check_n(n);
  CompositionSet out{n, {}};
  Exponent k(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned used) -> void {
    if (pos == n - 1) {
      k[pos] = static_cast<unsigned>(n) - used;
      out.members.insert(k);
      return;
    }
    for (unsigned v = 0; used + v <= n; ++v) {
      if (used + v < pos + 1) continue;  // prefix sum through pos must reach pos + 1
      k[pos] = v;
      self(self, pos + 1, used + v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

MPoly stanley_pitman_q(std::size_t n) {
  MPoly q(n);
  for (const auto& k : composition_set(n).members) {
    q.add_term(Exponent(k.rbegin(), k.rend()), Rat(1) / exponent_factorial(k));
  }
  return q;
}

std::set<Exponent> sandpile_support(const RootedTree& t, const Orientation& k) {
  check_n(t.n());
  const auto g = gbw(t, k);
  std::vector<Edge> moves;
  for (const auto& e : g.edges) {
    if (e.tail != 0 && e.head != 0) moves.push_back(e);
  }
  std::set<Exponent> seen{weights(g)};
  std::deque<Exponent> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    Exponent w = queue.front();
    queue.pop_front();
    for (const auto& e : moves) {
      if (w[e.tail - 1] == 0) continue;
      Exponent v = w;
      --v[e.tail - 1];
      ++v[e.head - 1];
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  return seen;
}

MPoly q_tk(const RootedTree& t, const Orientation& k) {
  MPoly q(t.n());
  for (const auto& w : sandpile_support(t, k)) q += normalized_monomial(w);
  return q;
}

Exponent ref_monomial(const RootedTree& t, const Orientation& k) { return weights(gbw(t, k)); }

Chamber chamber(const RootedTree& t, const Orientation& k) {
  if (t.n() != k.size()) throw std::invalid_argument("tree and orientation lengths differ");
  Chamber c{t, k, {}};
  for (std::size_t j = 1; j <= t.n(); ++j) c.rows.push_back({t.subtree(j), k(j) == 1 ? Sense::leq : Sense::geq});
  return c;
}

bool HalfSpaceSystem::contains(const std::vector<double>& r) const {
  for (const auto& row : rows) {
    double lhs = 0;
    for (std::size_t i = 0; i < n; ++i) lhs += row.a[i] * r[i];
    const double rhs = row.rhs.to_double();
    if (row.sense == Sense::leq ? lhs > rhs : lhs < rhs) return false;
  }
  for (double v : r) {
    if (v < 0) return false;
  }
  return true;
}

int HalfSpaceSystem::classify(const std::vector<Rat>& r) const {
  bool strict = true;
  for (const Rat& v : r) {
    if (v.sign() < 0) return -1;
    if (v.is_zero()) strict = false;
  }
  for (const auto& row : rows) {
    Rat lhs(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (row.a[i]) lhs += Rat(row.a[i]) * r[i];
    }
    const auto cmp = lhs <=> row.rhs;
    if (row.sense == Sense::leq ? cmp > 0 : cmp < 0) return -1;
    if (cmp == 0) strict = false;
  }
  return strict ? 1 : 0;
}

bool HalfSpaceSystem::has_interior() const {
  // Strict system c.r < d; eliminate variables one at a time.
  struct Ineq {
    std::vector<Rat> c;
    Rat d;
  };
  std::vector<Ineq> sys;
  for (const auto& row : rows) {
    Ineq q{std::vector<Rat>(n), row.rhs};
    for (std::size_t i = 0; i < n; ++i) q.c[i] = Rat(row.a[i]);
    if (row.sense == Sense::geq) {
      for (auto& v : q.c) v = -v;
      q.d = -q.d;
    }
    sys.push_back(std::move(q));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Ineq q{std::vector<Rat>(n, Rat(0)), Rat(0)};
    q.c[i] = Rat(-1);
    sys.push_back(std::move(q));
  }
  for (std::size_t var = 0; var < n; ++var) {
    std::vector<Ineq> pos, neg, next;
    for (auto& q : sys) {
      const int sg = q.c[var].sign();
      (sg > 0 ? pos : sg < 0 ? neg : next).push_back(std::move(q));
    }
    for (const auto& p : pos) {
      for (const auto& m : neg) {
        const Rat a = p.c[var];
        const Rat b = -m.c[var];
        Ineq q{std::vector<Rat>(n), p.d * b + m.d * a};
        for (std::size_t i = 0; i < n; ++i) q.c[i] = p.c[i] * b + m.c[i] * a;
        next.push_back(std::move(q));
      }
    }
    sys = std::move(next);
  }
  return std::all_of(sys.begin(), sys.end(), [](const Ineq& q) { return q.d.sign() > 0; });
}

namespace {

Rat sum_of(const std::vector<Rat>& t) {
  Rat s(0);
  for (const auto& v : t) s += v;
  return s;
}

void check_params(const std::vector<Rat>& t) {
  if (t.empty()) throw std::invalid_argument("parameter vector must be nonempty");
  for (const auto& v : t) {
    if (v.sign() <= 0) throw std::invalid_argument("parameters must be positive");
  }
}

}  // namespace

HalfSpaceSystem chamber_system(const Chamber& c, const std::vector<Rat>& t) {
  check_params(t);
  if (t.size() != c.tree.n()) throw std::invalid_argument("parameter length differs from tree size");
  HalfSpaceSystem sys{t.size(), {}, sum_of(t)};
  for (const auto& row : c.rows) {
    HalfSpaceSystem::Row r{std::vector<int>(t.size(), 0), row.sense, Rat(0)};
    for (std::size_t v : row.vars) {
      r.a[v - 1] = 1;
      r.rhs += t[v - 1];
    }
    sys.rows.push_back(std::move(r));
  }
  return sys;
}

HalfSpaceSystem simplex_system(const std::vector<Rat>& t) {
  check_params(t);
  HalfSpaceSystem sys{t.size(), {}, sum_of(t)};
  sys.rows.push_back({std::vector<int>(t.size(), 1), Sense::leq, sum_of(t)});
  return sys;
}

HalfSpaceSystem q_system(const std::vector<Rat>& t) {
  check_params(t);
  const std::size_t n = t.size();
  HalfSpaceSystem sys{n, {}, sum_of(t)};
  for (std::size_t j = 0; j < n; ++j) {
    HalfSpaceSystem::Row r{std::vector<int>(n, 0), Sense::leq, Rat(0)};
    for (std::size_t i = j; i < n; ++i) {
      r.a[i] = 1;
      r.rhs += t[i];
    }
    sys.rows.push_back(std::move(r));
  }
  return sys;
}

McEstimate mc_volume(const HalfSpaceSystem& sys, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 10000) throw std::invalid_argument("Monte-Carlo volume needs at least 10^4 samples");
  const double box = sys.box.to_double();
  const std::size_t n = sys.n;
  const auto hits = parallel_map(kMcBlocks, [&](std::size_t b) {
    const CounterRng rng(seed, b);
    const std::uint64_t count = samples / kMcBlocks + (b < samples % kMcBlocks ? 1 : 0);
    std::vector<double> r(n);
    std::uint64_t h = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      for (std::size_t d = 0; d < n; ++d) r[d] = rng.uniform(i * n + d) * box;
      if (sys.contains(r)) ++h;
    }
    return h;
  });
  McEstimate e;
  e.samples = samples;
  for (auto h : hits) e.hits += h;
  if (e.hits == 0 && !sys.has_interior()) throw ZeroMeasureError("zero-measure system: no interior points");
  const double vol = std::pow(box, static_cast<double>(n));
  const double p = static_cast<double>(e.hits) / static_cast<double>(samples);
  e.estimate = p * vol;
  e.stderr_ = vol * std::sqrt(p * (1 - p) / static_cast<double>(samples));
  return e;
}

PartitionReport partition_check(const RootedTree& t, const std::vector<Rat>& params, std::size_t samples,
                                std::uint64_t seed) {
  const std::size_t n = t.n();
  if (n > 8) throw std::invalid_argument("partition check supports n <= 8");
  if (params.size() != n) throw std::invalid_argument("parameter length differs from tree size");
  check_params(params);
  PartitionReport rep;
  const auto ks = enumerate_orientations(n);

  MPoly total(n);
  std::map<Exponent, std::size_t> owner;
  rep.disjoint_ok = true;
  for (std::size_t idx = 0; idx < ks.size(); ++idx) {
    for (const auto& w : sandpile_support(t, ks[idx])) {
      total += normalized_monomial(w);
      auto [it, inserted] = owner.emplace(w, idx);
      if (!inserted && rep.disjoint_ok) {
        rep.disjoint_ok = false;
        std::ostringstream os;
        os << "exponent shared by orientations " << it->second << " and " << idx;
        rep.witness = os.str();
      }
    }
  }
  MPoly sum_t(n);
  for (std::size_t i = 0; i < n; ++i) sum_t += MPoly::variable(n, i);
  rep.sum_identity_ok = total == sum_t.pow(static_cast<unsigned>(n)) * (Rat(1) / factorial(static_cast<unsigned>(n)));
  if (!rep.sum_identity_ok && rep.witness.empty()) rep.witness = "sum of chamber volumes differs from the simplex volume";
  rep.union_size = owner.size();
  const auto all = monomials_of_degree(n, static_cast<unsigned>(n));
  rep.cover_ok = owner.size() == all.size();
  if (!rep.cover_ok && rep.witness.empty()) rep.witness = "sandpile supports do not cover every degree-n exponent";

  std::vector<HalfSpaceSystem> systems;
  for (const auto& k : ks) systems.push_back(chamber_system(chamber(t, k), params));
  const Rat total_t = sum_of(params);
  const Rat scale = total_t / Rat(1L << 24);
  rep.sampling_ok = true;
  for (std::size_t i = 0; i < samples; ++i) {
    const CounterRng rng(seed, i);
    std::vector<long> cuts(n);
    for (std::size_t d = 0; d < n; ++d) cuts[d] = static_cast<long>(rng.bits(d) >> 40);
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rat> r(n);
    long prev = 0;
    for (std::size_t d = 0; d < n; ++d) {
      r[d] = Rat(cuts[d] - prev) * scale;
      prev = cuts[d];
    }
    std::size_t inside = 0;
    std::size_t touching = 0;
    for (const auto& sys : systems) {
      const int c = sys.classify(r);
      if (c == 1) ++inside;
      if (c == 0) ++touching;
    }
    ++rep.sampled;
    if (inside == 1) {
      ++rep.interior_hits;
    } else if (inside == 0 && touching > 0) {
      ++rep.boundary_hits;
    } else if (rep.sampling_ok) {
      rep.sampling_ok = false;
      std::ostringstream os;
      os << "sample " << i << " lies in " << inside << " chamber interiors";
      if (rep.witness.empty()) rep.witness = os.str();
    }
  }
  return rep;
}

std::string PlaneBinaryTree::code() const {
  std::function<std::string(std::size_t)> rec = [&](std::size_t v) -> std::string {
    if (v == 0) return ".";
    return "(" + rec(nodes[v - 1].left) + rec(nodes[v - 1].right) + ")";
  };
  return rec(root);
}

namespace {

struct Shape {
  std::shared_ptr<const Shape> left;
  std::shared_ptr<const Shape> right;
};
using ShapePtr = std::shared_ptr<const Shape>;

std::vector<ShapePtr> shapes(std::size_t n, std::vector<std::vector<ShapePtr>>& memo) {
  if (!memo[n].empty() || n == 0) {
    if (n == 0 && memo[0].empty()) memo[0].push_back(nullptr);
    return memo[n];
  }
  std::vector<ShapePtr> out;
  for (std::size_t l = 0; l < n; ++l) {
    for (const auto& a : shapes(l, memo)) {
      for (const auto& b : shapes(n - 1 - l, memo)) out.push_back(std::make_shared<const Shape>(Shape{a, b}));
    }
  }
  memo[n] = out;
  return out;
}

// In-order labelling; returns the label of the subtree root (0 for a leaf).
std::size_t label(const ShapePtr& s, std::size_t& counter, PlaneBinaryTree& t) {
  if (!s) return 0;
  const std::size_t l = label(s->left, counter, t);
  const std::size_t me = ++counter;
  const std::size_t r = label(s->right, counter, t);
  t.nodes[me - 1].left = l;
  t.nodes[me - 1].right = r;
  if (l) t.nodes[l - 1].parent = me;
  if (r) t.nodes[r - 1].parent = me;
  return me;
}

}  // namespace

std::vector<PlaneBinaryTree> plane_binary_trees(std::size_t n) {
  if (n < 1 || n > kMaxPlaneTrees) throw std::invalid_argument("plane binary trees supported for 1 <= n <= 10");
  std::vector<std::vector<ShapePtr>> memo(n + 1);
  std::vector<PlaneBinaryTree> out;
  for (const auto& s : shapes(n, memo)) {
    PlaneBinaryTree t;
    t.nodes.resize(n);
    std::size_t counter = 0;
    t.root = label(s, counter, t);
    out.push_back(std::move(t));
  }
  return out;
}

Exponent kT(const PlaneBinaryTree& t) {
  Exponent k(t.size(), 0);
  for (std::size_t i = 1; i <= t.size(); ++i) {
    if (t.nodes[i - 1].left != 0) continue;
    unsigned r = 1;
    std::size_t cur = i;
    while (t.nodes[cur - 1].parent != 0 && t.nodes[t.nodes[cur - 1].parent - 1].left == cur) {
      cur = t.nodes[cur - 1].parent;
      ++r;
    }
    k[i - 1] = r;
  }
  return k;
}

WalkTree phi_walk(const std::vector<Rat>& x, const std::vector<Rat>& y, const Rat& s) {
  const std::size_t n = x.size();
  if (n == 0 || y.size() != n) throw std::invalid_argument("x and y must be nonempty and of equal length");
  Rat sx(0);
  std::vector<Rat> m(n + 1, Rat(0));  // m[i] is the valley after step i
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].sign() <= 0) throw std::invalid_argument("x entries must be positive");
    if (y[i].sign() < 0) throw std::invalid_argument("y entries must be nonnegative");
    sx += x[i];
    m[i + 1] = m[i] + x[i] - y[i];
    if (m[i + 1].sign() < 0) throw std::invalid_argument("prefix sums of y exceed those of x");
  }
  if (!(sx < s)) throw std::invalid_argument("need sum x < s");
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i].is_zero() || m[i + 1].is_zero()) throw DegenerateContour();
  }

  WalkTree w;
  w.shape.nodes.resize(n);
  w.internal_length.assign(n, Rat(0));
  w.leaf_length.assign(n + 1, Rat(0));
  // Branch points form the Cartesian tree of the valley heights.
  std::function<std::size_t(std::size_t, std::size_t, std::size_t)> build = [&](std::size_t lo, std::size_t hi,
                                                                                std::size_t parent) -> std::size_t {
    if (lo > hi) return 0;
    std::size_t best = lo;
    for (std::size_t i = lo + 1; i <= hi; ++i) {
      if (m[i] < m[best]) best = i;
    }
    for (std::size_t i = lo; i <= hi; ++i) {
      if (i != best && m[i] == m[best]) throw DegenerateContour();
    }
    auto& node = w.shape.nodes[best - 1];
    node.parent = parent;
    w.internal_length[best - 1] = parent ? m[best] - m[parent] : Rat(0);
    node.left = build(lo, best - 1, best);
    node.right = build(best + 1, hi, best);
    return best;
  };
  w.shape.root = build(1, n, 0);
  w.stem = m[w.shape.root];
  const Rat x_last = s - sx;
  w.leaf_length[0] = y[0];
  for (std::size_t j = 1; j < n; ++j) w.leaf_length[j] = std::min(x[j], y[j]);
  w.leaf_length[n] = x_last;
  return w;
}

Contour rewalk(const WalkTree& w) {
  const std::size_t n = w.shape.size();
  std::vector<Rat> h(n + 1, Rat(0));
  std::function<void(std::size_t, const Rat&)> down = [&](std::size_t v, const Rat& base) {
    if (v == 0) return;
    h[v] = base;
    const auto& node = w.shape.nodes[v - 1];
    if (node.left) down(node.left, base + w.internal_length[node.left - 1]);
    if (node.right) down(node.right, base + w.internal_length[node.right - 1]);
  };
  down(w.shape.root, w.stem);
  // Leaf j sits between internal vertices j and j + 1 of the in-order sequence.
  std::vector<Rat> peak(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    std::size_t parent = 0;
    if (j >= 1 && w.shape.nodes[j - 1].right == 0) parent = j;
    if (j < n && w.shape.nodes[j].left == 0) parent = j + 1;
    peak[j] = h[parent] + w.leaf_length[j];
  }
  Contour c;
  c.x.resize(n);
  c.y.resize(n);
  c.x[0] = peak[0];
  c.y[0] = peak[0] - h[1];
  for (std::size_t j = 1; j < n; ++j) {
    c.x[j] = peak[j] - h[j];
    c.y[j] = peak[j] - h[j + 1];
  }
  c.s = peak[n] - h[n];
  for (const auto& v : c.x) c.s += v;
  return c;
}

}  // namespace zonoforge
