#pragma once

#include "zonoforge/graphs.hpp"
#include "zonoforge/qpoly.hpp"

#include <cstddef>
#include <vector>

namespace zonoforge {

/// Out-degree of v to the complement of `inside` (multiplicity counted).
std::size_t out_degree(const DirectedMultigraph& g, std::size_t v, const std::vector<bool>& inside);

/// Subset-condition parking test. s is indexed by the non-root vertices in ascending order.
bool is_gparking(const DirectedMultigraph& g, std::size_t root, const Exponent& s);

/// A G-parking function; the constructor rejects vectors failing the subset condition.
class ParkingFunction {
public:
  ParkingFunction(const DirectedMultigraph& g, std::size_t root, Exponent s);
  const Exponent& values() const { return s_; }
  unsigned degree() const { return total_degree(s_); }
  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;

private:
  ParkingFunction() = default;
  friend std::vector<ParkingFunction> enumerate_parking(const DirectedMultigraph&, std::size_t);
  Exponent s_;
};

constexpr std::size_t kMaxParkingVertices = 7;

/// All G-parking functions in lexicographic order.
std::vector<ParkingFunction> enumerate_parking(const DirectedMultigraph& g, std::size_t root);
std::vector<ParkingFunction> maximal_parking(const DirectedMultigraph& g, std::size_t root);

/// Interval-only parking condition on BW_n.
bool bw_parking_interval(std::size_t n, const Exponent& s);
/// Interval-only internal parking condition on BW_n.
bool bw_internal_parking(std::size_t n, const Exponent& s);

/// out-degree d(i,k,j) of k relative to [i:j] in BW_n.
std::size_t bw_outdegree(std::size_t n, std::size_t i, std::size_t k, std::size_t j);

struct SupportCharacterization {
  MPoly p0;      // prod (t_{i-1} + t_i)
  MPoly p1;      // prod (1 + t_{i-1} + t_i)
  MPoly pminus;  // prod_{i<n} (1 + t_i)
  bool maximal_ok = false;
  bool all_ok = false;
  bool internal_ok = false;
};

MPoly bw_p0(std::size_t n);
MPoly bw_p1(std::size_t n);
MPoly bw_pminus(std::size_t n);

/// Builds the three product polynomials and compares their supports with enumerated parking sets.
SupportCharacterization support_characterizations(std::size_t n);

/// Exponents of an enumeration, for set comparisons.
std::vector<Exponent> exponents(const std::vector<ParkingFunction>& fs);

}  // namespace zonoforge
