#pragma once

#include "zonoforge/rational.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zonoforge {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct Echelon {
  RatMatrix rows;                   // nonzero rows of the reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form. Pivots are the leftmost nonzero column of each row.
Echelon rref(RatMatrix a, std::size_t ncols);

std::size_t rank(const RatMatrix& a, std::size_t ncols);

/// Basis of {v : a v = 0}, returned in reduced echelon form.
RatMatrix nullspace(const RatMatrix& a, std::size_t ncols);

/// Reduced echelon basis of the intersection of the row spaces of u and v.
RatMatrix intersect_rowspaces(const RatMatrix& u, const RatMatrix& v, std::size_t ncols);

bool in_rowspace(const Echelon& e, const RatVector& v);

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t int_rank(IntMatrix a);

/// Exact determinant of a square integer matrix (Bareiss over mpz).
mpz_class int_det(const IntMatrix& a);

}  // namespace zonoforge
