#pragma once

#include "zonoforge/linalg.hpp"
#include "zonoforge/qpoly.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace zonoforge {

/// Rooted tree on vertices 1..n with root 1. parent[i-1] is the parent of vertex i; parent[0] = 0.
class RootedTree {
public:
  explicit RootedTree(std::vector<std::size_t> parent);

  std::size_t n() const { return parent_.size(); }
  std::size_t parent(std::size_t v) const { return parent_.at(v - 1); }
  const std::vector<std::size_t>& parents() const { return parent_; }
  const std::vector<std::size_t>& children(std::size_t v) const { return children_.at(v - 1); }

  /// Vertex set of the subtree hanging from v (v included), ascending.
  std::vector<std::size_t> subtree(std::size_t v) const;

  /// AHU encoding of the unlabeled rooted shape.
  std::string shape_code() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.parent_ == b.parent_; }

private:
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
};

RootedTree line_tree(std::size_t n);
RootedTree star_tree(std::size_t n);

/// Orientation vector k in {+1,-1}^n with k(1) = +1.
class Orientation {
public:
  explicit Orientation(std::vector<int> k);
  std::size_t size() const { return k_.size(); }
  int operator()(std::size_t v) const { return k_.at(v - 1); }
  const std::vector<int>& values() const { return k_; }
  friend bool operator==(const Orientation&, const Orientation&) = default;

private:
  std::vector<int> k_;
};

struct Edge {
  std::size_t tail;
  std::size_t head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Multigraph on vertices 0..n. Edge order matters for activity computations.
struct DirectedMultigraph {
  std::size_t n = 0;
  std::vector<Edge> edges;
  friend bool operator==(const DirectedMultigraph&, const DirectedMultigraph&) = default;
};

/// Columns e_head - e_tail in Z^n, with e_0 = 0.
struct EdgeMatrix {
  std::size_t n = 0;
  std::vector<std::vector<int>> columns;

  std::size_t size() const { return columns.size(); }
  /// n x |cols| integer matrix restricted to the chosen column indices (0-based).
  IntMatrix submatrix(const std::vector<std::size_t>& cols) const;
  /// Linear form sum_i c_i t_i of column j.
  MPoly form(std::size_t j) const;
  std::size_t rank() const;
  std::size_t rank_of(const std::vector<std::size_t>& cols) const;
};

DirectedMultigraph broken_wheel(std::size_t n);
DirectedMultigraph gbw(const RootedTree& t, const Orientation& k);

/// weights w(i) = indegree(i) - 1 for i = 1..n.
Exponent weights(const DirectedMultigraph& g);

EdgeMatrix edge_matrix(const DirectedMultigraph& g);

std::vector<Orientation> enumerate_orientations(std::size_t n);

/// Labeled trees on {1..n} rooted at 1, in Pruefer-sequence order. With `unlabeled`,
/// only the first tree of each rooted isomorphism class is kept.
std::vector<RootedTree> enumerate_rooted_trees(std::size_t n, bool unlabeled = false);

/// Number of spanning trees of the underlying undirected multigraph (matrix-tree theorem).
mpz_class spanning_tree_count(const DirectedMultigraph& g);

}  // namespace zonoforge
