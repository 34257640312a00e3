#include "zonoforge/graphs.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace zonoforge {

RootedTree::RootedTree(std::vector<std::size_t> parent) : parent_(std::move(parent)) {
  const std::size_t n = parent_.size();
  if (n == 0) throw std::invalid_argument("tree must have at least one vertex");
  if (parent_[0] != 0) throw std::invalid_argument("root 1 must have parent 0");
  children_.assign(n, {});
  for (std::size_t v = 2; v <= n; ++v) {
    const std::size_t p = parent_[v - 1];
    if (p < 1 || p > n || p == v) throw std::invalid_argument("invalid parent pointer");
    children_[p - 1].push_back(v);
  }
  for (std::size_t v = 2; v <= n; ++v) {
    std::size_t cur = v;
    std::size_t steps = 0;
    while (cur != 1) {
      cur = parent_[cur - 1];
      if (++steps > n) throw std::invalid_argument("parent pointers contain a cycle");
    }
  }
}

std::vector<std::size_t> RootedTree::subtree(std::size_t v) const {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{v};
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (std::size_t c : children(u)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string RootedTree::shape_code() const {
  std::function<std::string(std::size_t)> code = [&](std::size_t v) {
    std::vector<std::string> parts;
    for (std::size_t c : children(v)) parts.push_back(code(c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
  };
  return code(1);
}

RootedTree line_tree(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 1; i < n; ++i) p[i] = i;
  return RootedTree(std::move(p));
}

RootedTree star_tree(std::size_t n) {
  std::vector<std::size_t> p(n, 1);
  if (n > 0) p[0] = 0;
  return RootedTree(std::move(p));
}

Orientation::Orientation(std::vector<int> k) : k_(std::move(k)) {
  if (k_.empty()) throw std::invalid_argument("orientation must be nonempty");
  for (int v : k_) {
    if (v != 1 && v != -1) throw std::invalid_argument("orientation entries must be +1 or -1");
  }
  if (k_[0] != 1) throw std::invalid_argument("orientation must have k(1) = +1");
}

IntMatrix EdgeMatrix::submatrix(const std::vector<std::size_t>& cols) const {
  IntMatrix m(n, std::vector<std::int64_t>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = columns.at(cols[j])[i];
  }
  return m;
}

MPoly EdgeMatrix::form(std::size_t j) const { return MPoly::linear_form(columns.at(j)); }

std::size_t EdgeMatrix::rank_of(const std::vector<std::size_t>& cols) const {
  if (cols.empty()) return 0;
  return int_rank(submatrix(cols));
}

std::size_t EdgeMatrix::rank() const {
  std::vector<std::size_t> all(columns.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return rank_of(all);
}

DirectedMultigraph broken_wheel(std::size_t n) {
  if (n == 0) throw std::invalid_argument("broken wheel needs n >= 1");
  DirectedMultigraph g;
  g.n = n;
  for (std::size_t i = 1; i <= n; ++i) {
    g.edges.push_back({i - 1, i});
    g.edges.push_back({0, i});
  }
  return g;
}

DirectedMultigraph gbw(const RootedTree& t, const Orientation& k) {
  if (t.n() != k.size()) throw std::invalid_argument("tree and orientation lengths differ");
  DirectedMultigraph g;
  g.n = t.n();
  g.edges.push_back({0, 1});
  g.edges.push_back({0, 1});
  for (std::size_t i = 2; i <= t.n(); ++i) {
    const std::size_t p = t.parent(i);
    if (k(i) == 1) {
      g.edges.push_back({p, i});
    } else {
      g.edges.push_back({i, p});
    }
    g.edges.push_back({0, i});
  }
  return g;
}

Exponent weights(const DirectedMultigraph& g) {
  std::vector<long> indeg(g.n + 1, 0);
  for (const auto& e : g.edges) ++indeg.at(e.head);
  Exponent w(g.n);
  for (std::size_t i = 1; i <= g.n; ++i) {
    if (indeg[i] < 1) throw std::invalid_argument("vertex with zero indegree: not a GBW graph");
    w[i - 1] = static_cast<unsigned>(indeg[i] - 1);
  }
  return w;
}

EdgeMatrix edge_matrix(const DirectedMultigraph& g) {
  EdgeMatrix x;
  x.n = g.n;
  for (const auto& e : g.edges) {
    std::vector<int> col(g.n, 0);
    if (e.head > 0) col[e.head - 1] += 1;
    if (e.tail > 0) col[e.tail - 1] -= 1;
    x.columns.push_back(std::move(col));
  }
  return x;
}

std::vector<Orientation> enumerate_orientations(std::size_t n) {
  if (n == 0) throw std::invalid_argument("orientation length must be >= 1");
  if (n > 31) throw std::invalid_argument("orientation length too large");
  std::vector<Orientation> out;
  const std::size_t free = n - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << free); ++mask) {
    std::vector<int> k(n, 1);
    for (std::size_t pos = 0; pos < free; ++pos) {
      const std::size_t bit = free - 1 - pos;  // position 2 is the most significant
      k[pos + 1] = ((mask >> bit) & 1u) ? 1 : -1;
    }
    out.emplace_back(std::move(k));
  }
  return out;
}

namespace {

RootedTree tree_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(n + 1);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> parent(n, 0);
  std::vector<bool> seen(n + 1, false);
  std::vector<std::size_t> queue{1};
  seen[1] = true;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::size_t u = queue[h];
    for (std::size_t v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      parent[v - 1] = u;
      queue.push_back(v);
    }
  }
  return RootedTree(std::move(parent));
}

std::vector<std::pair<std::size_t, std::size_t>> pruefer_decode(std::size_t n,
                                                                const std::vector<std::size_t>& seq) {
  std::vector<std::size_t> degree(n + 1, 1);
  for (std::size_t x : seq) ++degree[x];
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t x : seq) {
    for (std::size_t leaf = 1; leaf <= n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  std::vector<std::size_t> rest;
  for (std::size_t v = 1; v <= n; ++v) {
    if (degree[v] == 1) rest.push_back(v);
  }
  edges.emplace_back(rest.at(0), rest.at(1));
  return edges;
}

}  // namespace

std::vector<RootedTree> enumerate_rooted_trees(std::size_t n, bool unlabeled) {
  if (n < 1 || n > 8) throw std::invalid_argument("tree enumeration supports 1 <= n <= 8");
  std::vector<RootedTree> out;
  if (n == 1) {
    out.push_back(line_tree(1));
    return out;
  }
  const std::size_t len = n - 2;
  std::vector<std::size_t> seq(len, 1);
  std::set<std::string> shapes;
  while (true) {
    RootedTree t = tree_from_edges(n, pruefer_decode(n, seq));
    if (!unlabeled || shapes.insert(t.shape_code()).second) out.push_back(std::move(t));
    std::size_t pos = len;
    while (pos > 0 && seq[pos - 1] == n) {
      seq[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) break;
    ++seq[pos - 1];
  }
  return out;
}

mpz_class spanning_tree_count(const DirectedMultigraph& g) {
  const std::size_t n = g.n;
  // Reduced Laplacian: delete the row and column of vertex 0.
  IntMatrix lap(n, std::vector<std::int64_t>(n, 0));
  for (const auto& e : g.edges) {
    const std::size_t a = e.tail;
    const std::size_t b = e.head;
    if (a == b) continue;
    if (a > 0) lap[a - 1][a - 1] += 1;
    if (b > 0) lap[b - 1][b - 1] += 1;
    if (a > 0 && b > 0) {
      lap[a - 1][b - 1] -= 1;
      lap[b - 1][a - 1] -= 1;
    }
  }
  return int_det(lap);
}

}  // namespace zonoforge
