#pragma once

#include "zonoforge/graphs.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace zonoforge {

/// Column subset, 0-based and ascending. Printed 1-based as x_1, x_2, ...
struct Basis {
  std::vector<std::size_t> indices;
  friend bool operator==(const Basis&, const Basis&) = default;
  friend auto operator<=>(const Basis&, const Basis&) = default;
};

using Cocircuit = Basis;

/// Bivariate integer polynomial sum c_{ij} s^i t^j.
struct TuttePoly {
  std::map<std::pair<unsigned, unsigned>, long long> coeffs;

  long long eval(long long s, long long t) const;
  TuttePoly swapped() const;
  friend bool operator==(const TuttePoly&, const TuttePoly&) = default;
};

constexpr std::size_t kMaxBasisColumns = 16;

std::vector<Basis> enumerate_bases(const EdgeMatrix& x);
bool is_basis(const EdgeMatrix& x, const Basis& b);

unsigned val(const EdgeMatrix& x, const Basis& b);
unsigned val_star(const EdgeMatrix& x, const Basis& b);

TuttePoly tutte(const EdgeMatrix& x);

std::vector<Basis> maximal_bases(const EdgeMatrix& x);
std::vector<Basis> internal_bases(const EdgeMatrix& x);

/// Columns x_j with (B \ b) + x_j again a basis; b itself included.
std::vector<std::size_t> fundamental_cocircuit(const EdgeMatrix& x, const Basis& b, std::size_t elem);

/// Bases in which no element is the smallest of its fundamental cocircuit.
std::vector<Basis> passive_bases(const EdgeMatrix& x);

/// Complements of the rank-(n-1) flats, ascending.
std::vector<Cocircuit> cocircuits(const EdgeMatrix& x);

/// Inclusion-minimal column sets meeting every member of `family`, ascending by bitmask order.
std::vector<Basis> minimal_transversals(std::size_t ncols, const std::vector<Basis>& family);

/// Histogram of val over all bases, indices 0..n.
std::vector<std::size_t> hilbert_from_bases(const EdgeMatrix& x);

/// Histogram of val over the internal bases, indices 0..n.
std::vector<std::size_t> internal_hilbert_from_bases(const EdgeMatrix& x);

}  // namespace zonoforge
