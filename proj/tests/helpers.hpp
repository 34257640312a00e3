#pragma once

#include "zonoforge/qpoly.hpp"

#include <initializer_list>
#include <random>
#include <utility>

namespace testutil {

using zonoforge::Exponent;
using zonoforge::MPoly;
using zonoforge::Rat;

inline MPoly poly(std::size_t nvars, std::initializer_list<std::pair<Exponent, Rat>> terms) {
  MPoly p(nvars);
  for (const auto& [s, c] : terms) p.add_term(s, c);
  return p;
}

inline MPoly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  MPoly p(nvars);
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    Exponent s(nvars, 0);
    const unsigned d = deg(rng);
    for (unsigned j = 0; j < d; ++j) ++s[var(rng)];
    p.add_term(s, Rat(num(rng), den(rng)));
  }
  return p;
}

inline std::vector<Rat> random_point(std::mt19937_64& rng, std::size_t nvars) {
  std::uniform_int_distribution<long> num(-7, 7);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rat> pt;
  for (std::size_t i = 0; i < nvars; ++i) pt.emplace_back(num(rng), den(rng));
  return pt;
}

}  // namespace testutil
