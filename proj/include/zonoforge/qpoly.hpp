#pragma once

#include "zonoforge/rational.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace zonoforge {

/// Exponent vector s of the monomial t^s. Entry i belongs to t_{i+1}.
using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& s);

/// All exponents of total degree `degree` in `nvars` variables, ascending lexicographic.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Sparse polynomial over Q in a fixed number of variables.
///
/// Terms are kept in ascending lexicographic exponent order with no zero
/// coefficients. A polynomial doubles as a constant-coefficient differential
/// operator, t_i standing for d/dt_i (see apply_diff).
class MPoly {
public:
  using Terms = std::map<Exponent, Rat>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  MPoly(std::size_t nvars, Terms terms);

  static MPoly constant(std::size_t nvars, const Rat& c);
  static MPoly monomial(const Exponent& s, const Rat& c = Rat(1));
  /// t_{index+1}; `index` is 0-based.
  static MPoly variable(std::size_t nvars, std::size_t index);
  /// Linear form sum_i coeffs[i] t_{i+1}.
  static MPoly linear_form(std::span<const int> coeffs);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree, or -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  /// Adds c * t^s in place.
  void add_term(const Exponent& s, const Rat& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator-(MPoly a) { return a *= Rat(-1); }
  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  MPoly pow(unsigned k) const;

  /// Substitutes t_i -> t_{nvars+1-i}.
  MPoly reversed() const;
  /// Same polynomial viewed in `nvars` >= nvars() variables (new ones unused).
  MPoly embedded(std::size_t nvars) const;

  std::string str() const;

private:
  void check_same(const MPoly& o) const;

  std::size_t nvars_;
  Terms terms_;
};

MPoly add(const MPoly& a, const MPoly& b);
MPoly mul(const MPoly& a, const MPoly& b);

/// op(D) target, where each t_i in `op` is read as d/dt_i.
MPoly apply_diff(const MPoly& op, const MPoly& target);

/// Partial derivative D^s target.
MPoly differentiate(const MPoly& target, const Exponent& s);

std::set<Exponent> support(const MPoly& p);

/// t^s / s!, with s! = prod_i s(i)!.
MPoly normalized_monomial(const Exponent& s);

Rat eval(const MPoly& p, std::span<const Rat> point);

/// Raw coefficient of t^s (zero when absent).
Rat coeff_of(const MPoly& p, const Exponent& s);

}  // namespace zonoforge
