#pragma once

#include "zonoforge/graphs.hpp"
#include "zonoforge/qpoly.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace zonoforge {

struct CompositionSet {
  std::size_t n = 0;
  std::set<Exponent> members;
};

constexpr std::size_t kMaxVolumeN = 12;

/// k in N^n with |k| = n and k_1 + ... + k_j >= j for j < n.
CompositionSet composition_set(std::size_t n);

/// Volume of Q_n(t) = {r >= 0 : r_j + ... + r_n <= t_j + ... + t_n}. Equals sum_{k in K_n} t^{rev k} / k!.
MPoly stanley_pitman_q(std::size_t n);

/// Weight vectors reachable from the GBW weights by unit moves along directed tree edges.
std::set<Exponent> sandpile_support(const RootedTree& t, const Orientation& k);
/// sum over the sandpile support of t^w / w!.
MPoly q_tk(const RootedTree& t, const Orientation& k);
Exponent ref_monomial(const RootedTree& t, const Orientation& k);

enum class Sense { leq, geq };

struct ChamberRow {
  std::vector<std::size_t> vars;  // 1-based vertices of the subtree
  Sense sense = Sense::leq;
  friend bool operator==(const ChamberRow&, const ChamberRow&) = default;
};

/// Q_{T_k}: r >= 0 and, for every vertex j, sum over the subtree at j of r compared with the same sum of t.
struct Chamber {
  RootedTree tree;
  Orientation k;
  std::vector<ChamberRow> rows;  // row j-1 belongs to vertex j
};

Chamber chamber(const RootedTree& t, const Orientation& k);

/// Rows a.r (<= or >=) rhs together with r >= 0.
struct HalfSpaceSystem {
  struct Row {
    std::vector<int> a;
    Sense sense = Sense::leq;
    Rat rhs;
  };
  std::size_t n = 0;
  std::vector<Row> rows;
  Rat box;  // sampling box [0, box]^n contains the region

  bool contains(const std::vector<double>& r) const;
  /// 1 for the open interior, 0 for the boundary, -1 outside.
  int classify(const std::vector<Rat>& r) const;
  /// Exact test for a nonempty open interior (Fourier-Motzkin on the strict system).
  bool has_interior() const;
};

HalfSpaceSystem chamber_system(const Chamber& c, const std::vector<Rat>& t);
HalfSpaceSystem simplex_system(const std::vector<Rat>& t);
HalfSpaceSystem q_system(const std::vector<Rat>& t);

struct McEstimate {
  double estimate = 0;
  double stderr_ = 0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

class ZeroMeasureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kMcBlocks = 64;

/// Rejection sampling from [0, box]^n with the pinned counter generator.
McEstimate mc_volume(const HalfSpaceSystem& sys, std::uint64_t samples, std::uint64_t seed);

struct PartitionReport {
  bool sum_identity_ok = false;
  bool disjoint_ok = false;
  bool cover_ok = false;
  bool sampling_ok = false;
  std::size_t union_size = 0;
  std::size_t sampled = 0;
  std::size_t interior_hits = 0;
  std::size_t boundary_hits = 0;
  std::string witness;

  bool partition_ok() const { return disjoint_ok && cover_ok && sampling_ok; }
  bool ok() const { return sum_identity_ok && partition_ok(); }
};

/// Checks the simplex partition by the 2^{n-1} chambers of t. `params` fixes t for the sampling part;
/// the polynomial identity and supports are checked symbolically.
PartitionReport partition_check(const RootedTree& t, const std::vector<Rat>& params, std::size_t samples = 200,
                                std::uint64_t seed = 1);

/// Internal nodes carry in-order labels 1..n; child label 0 means a leaf.
struct PlaneBinaryTree {
  struct Node {
    std::size_t left = 0;
    std::size_t right = 0;
    std::size_t parent = 0;
  };
  std::size_t root = 0;
  std::vector<Node> nodes;  // nodes[i-1] is the internal vertex labelled i

  std::size_t size() const { return nodes.size(); }
  std::string code() const;
  friend bool operator==(const PlaneBinaryTree& a, const PlaneBinaryTree& b) { return a.code() == b.code(); }
};

constexpr std::size_t kMaxPlaneTrees = 10;

std::vector<PlaneBinaryTree> plane_binary_trees(std::size_t n);
Exponent kT(const PlaneBinaryTree& t);

/// Plane binary tree with positive edge lengths, the output of the contour walk.
struct WalkTree {
  PlaneBinaryTree shape;
  std::vector<Rat> internal_length;  // edge from internal i to its parent; the root entry is unused
  std::vector<Rat> leaf_length;      // leaves left to right, n + 1 of them
  Rat stem;                          // removed root edge
};

class DegenerateContour : public std::runtime_error {
public:
  DegenerateContour() : std::runtime_error("degenerate contour") {}
};

/// Contour walk: up x_i, down y_i, then up s - sum x and down s - sum y.
WalkTree phi_walk(const std::vector<Rat>& x, const std::vector<Rat>& y, const Rat& s);

struct Contour {
  std::vector<Rat> x;
  std::vector<Rat> y;
  Rat s;
};

/// Reads (x, y, s) back off a walk tree.
Contour rewalk(const WalkTree& w);

}  // namespace zonoforge
