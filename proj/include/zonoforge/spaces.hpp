#pragma once

#include "zonoforge/activity.hpp"
#include "zonoforge/linalg.hpp"
#include "zonoforge/qpoly.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace zonoforge {

/// Homogeneous polynomials of one degree, stored as a reduced echelon basis.
struct GradedComponent {
  std::size_t nvars = 0;
  unsigned degree = 0;
  std::vector<MPoly> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const MPoly& p) const;
  friend bool operator==(const GradedComponent&, const GradedComponent&) = default;
};

struct OperatorFamily {
  std::string name;
  std::size_t nvars = 0;
  std::vector<MPoly> ops;
};

constexpr unsigned kMaxComponentDegree = 12;

/// Product of the linear forms of the chosen columns.
MPoly column_product(const EdgeMatrix& x, const std::vector<std::size_t>& cols);

OperatorFamily cocircuit_ideal_ops(const EdgeMatrix& x);
/// Products over the minimal transversals of the passive bases.
OperatorFamily internal_ideal_ops(const EdgeMatrix& x);

OperatorFamily bw_central_ops(std::size_t n);
OperatorFamily bw_internal_ops(std::size_t n);
OperatorFamily bw_pcentral_ops(std::size_t n);
OperatorFamily bw_pinternal_ops(std::size_t n);

/// D_i (D_i - D_{i-1}), i = 1..n, with D_0 = 0.
OperatorFamily step_quadratic_ops(std::size_t n);
/// (D_{j+1} - D_j)(D_i ... D_j)(D_i - D_{i-1}), 1 <= i <= j < n.
OperatorFamily interval_chain_ops(std::size_t n);
/// (D_1 ... D_n)(D_i - D_{i-1}), 1 <= i <= n.
OperatorFamily full_chain_ops(std::size_t n);

/// Coefficient vector of a homogeneous polynomial against monomials_of_degree(nvars, degree).
RatVector coordinates(const MPoly& p, unsigned degree);
MPoly from_coordinates(std::size_t nvars, unsigned degree, const RatVector& v);

/// Degree-d component spanned by arbitrary homogeneous polynomials.
GradedComponent span_component(std::size_t nvars, unsigned degree, const std::vector<MPoly>& gens);

GradedComponent annihilator_kernel(const OperatorFamily& fam, unsigned degree);
bool annihilates(const OperatorFamily& fam, const MPoly& p);

/// span{p_R : |R| = degree, X \ R of full rank}.
GradedComponent pspace_component(const EdgeMatrix& x, unsigned degree);
/// Intersection of P(X \ x) over all columns x.
GradedComponent pinternal_component(const EdgeMatrix& x, unsigned degree);

GradedComponent intersect(const GradedComponent& a, const GradedComponent& b);

bool is_monomial_space(const GradedComponent& c, const std::set<Exponent>& candidate);

enum class SpaceKind { central, internal };

/// Dimensions of the D-space components, degrees 0..n.
std::vector<std::size_t> hilbert_series(const EdgeMatrix& x, SpaceKind kind);
/// Dimensions of the P-space components, degrees 0..n.
std::vector<std::size_t> p_hilbert_series(const EdgeMatrix& x, SpaceKind kind);

/// s-monic polynomial for each parking s; throws std::runtime_error when the system is singular.
std::map<Exponent, MPoly> monic_basis(const EdgeMatrix& x, const std::vector<Exponent>& parking, bool internal);

/// Graded components of the span of all partial derivatives of f, degrees 0..deg f.
std::vector<GradedComponent> derivative_closure(const MPoly& f);

}  // namespace zonoforge
