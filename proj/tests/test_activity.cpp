#include "doctest.h"

#include "zonoforge/activity.hpp"
#include "zonoforge/parking.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace zonoforge;

namespace {

EdgeMatrix bw(std::size_t n) { return edge_matrix(broken_wheel(n)); }

Basis B(std::initializer_list<std::size_t> one_based) {
  Basis b;
  for (std::size_t i : one_based) b.indices.push_back(i - 1);
  return b;
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Independent rank via rational elimination.
std::size_t rat_rank(const EdgeMatrix& x, const std::vector<std::size_t>& cols) {
  RatMatrix m;
  for (std::size_t c : cols) {
    RatVector row;
    for (int v : x.columns[c]) row.emplace_back(v);
    m.push_back(row);
  }
  return rank(m, x.n);
}

}  // namespace

TEST_CASE("enumerate_bases") {
  const auto b2 = enumerate_bases(bw(2));
  CHECK(b2 == std::vector<Basis>{B({1, 3}), B({1, 4}), B({2, 3}), B({2, 4}), B({3, 4})});
  CHECK(enumerate_bases(bw(1)).size() == 2);
  CHECK(enumerate_bases(bw(3)).size() == enumerate_parking(broken_wheel(3), 0).size());

  EdgeMatrix deficient;
  deficient.n = 2;
  deficient.columns = {{1, 0}, {1, 0}};
  CHECK_THROWS_AS(enumerate_bases(deficient), std::invalid_argument);
  EdgeMatrix wide;
  wide.n = 1;
  wide.columns.assign(17, {1});
  CHECK_THROWS_AS(enumerate_bases(wide), std::invalid_argument);
}

TEST_CASE("bases agree with a rational-rank oracle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto x = bw(n);
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << x.size()); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (mask & (1u << j)) cols.push_back(j);
      if (rat_rank(x, cols) == n) ++count;
    }
    CHECK(enumerate_bases(x).size() == count);
  }
}

TEST_CASE("val and val_star") {
  const auto x = bw(2);
  CHECK(val(x, B({3, 4})) == 2);
  CHECK(val(x, B({1, 3})) == 0);
  CHECK(val(x, B({2, 3})) == 1);
  CHECK(val_star(x, B({3, 4})) == 0);
  CHECK(val_star(x, B({1, 3})) == 2);
  CHECK(val_star(x, B({1, 4})) == 1);
  CHECK_THROWS_AS(val(x, B({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(val_star(x, B({1, 2})), std::invalid_argument);
}

TEST_CASE("tutte") {
  TuttePoly expected;
  expected.coeffs = {{{2, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{0, 1}, 1}, {{0, 2}, 1}};
  CHECK(tutte(bw(2)) == expected);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto t = tutte(bw(n));
    CHECK(t == t.swapped());
    CHECK(t.eval(1, 0) == (1LL << (n - 1)));
    CHECK(t.eval(0, 1) == (1LL << (n - 1)));
    CHECK(t.eval(1, 1) == static_cast<long long>(enumerate_bases(bw(n)).size()));
  }
}

TEST_CASE("property: Tutte specializations are invariant under column permutations") {
  std::mt19937_64 rng(4242);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto x = bw(n);
    const auto t = tutte(x);
    for (int rep = 0; rep < 20; ++rep) {
      EdgeMatrix y = x;
      std::shuffle(y.columns.begin(), y.columns.end(), rng);
      const auto u = tutte(y);
      REQUIRE(u.eval(1, 1) == t.eval(1, 1));
      REQUIRE(u.eval(1, 0) == t.eval(1, 0));
      REQUIRE(u.eval(0, 1) == t.eval(0, 1));
      REQUIRE(u.eval(2, 1) == t.eval(2, 1));
      REQUIRE(u.eval(1, 2) == t.eval(1, 2));
      REQUIRE(u.eval(2, 3) == t.eval(2, 3));
    }
  }
}

TEST_CASE("maximal_bases") {
  for (std::size_t n = 1; n <= 6; ++n) {
    // Product structure x {x_2i, x_2i+1} x {x_2n}.
    std::vector<Basis> expected;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      Basis b;
      for (std::size_t i = 1; i < n; ++i) b.indices.push_back((mask & (1u << (i - 1))) ? 2 * i : 2 * i - 1);
      b.indices.push_back(2 * n - 1);
      std::sort(b.indices.begin(), b.indices.end());
      expected.push_back(b);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(maximal_bases(bw(n)) == expected);
  }
  CHECK(maximal_bases(bw(2)) == std::vector<Basis>{B({2, 4}), B({3, 4})});
  CHECK(maximal_bases(bw(5)).size() == 16);
}

TEST_CASE("internal_bases") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Basis> expected;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      Basis b;
      for (std::size_t i = 1; i < n; ++i) b.indices.push_back((mask & (1u << (i - 1))) ? 2 * i - 1 : 2 * i - 2);
      b.indices.push_back(2 * n - 2);
      std::sort(b.indices.begin(), b.indices.end());
      expected.push_back(b);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(internal_bases(bw(n)) == expected);
    CHECK(internal_bases(bw(n)).size() == (std::size_t{1} << (n - 1)));
  }
  CHECK(internal_bases(bw(2)) == std::vector<Basis>{B({1, 3}), B({2, 3})});
  CHECK(internal_bases(bw(1)) == std::vector<Basis>{B({1})});
}

TEST_CASE("cocircuits") {
  CHECK(cocircuits(bw(2)) == std::vector<Cocircuit>{B({1, 2, 3}), B({1, 2, 4}), B({3, 4})});
  CHECK(cocircuits(bw(1)) == std::vector<Cocircuit>{B({1, 2})});
}

TEST_CASE("property: cocircuits meet every basis and are minimal") {
  auto check = [](const EdgeMatrix& x) {
    const auto bases = enumerate_bases(x);
    auto meets_all = [&](const std::vector<std::size_t>& c) {
      return std::all_of(bases.begin(), bases.end(), [&](const Basis& b) {
        return std::any_of(c.begin(), c.end(), [&](std::size_t e) {
          return std::binary_search(b.indices.begin(), b.indices.end(), e);
        });
      });
    };
    const auto cs = cocircuits(x);
    for (const auto& c : cs) {
      REQUIRE(meets_all(c.indices));
      for (std::size_t drop = 0; drop < c.indices.size(); ++drop) {
        auto smaller = c.indices;
        smaller.erase(smaller.begin() + static_cast<long>(drop));
        REQUIRE_FALSE(meets_all(smaller));
      }
    }
    // Matroid cocircuits are exactly the minimal transversals of the bases.
    REQUIRE(cs == minimal_transversals(x.size(), bases));
  };
  for (std::size_t n = 1; n <= 4; ++n) check(bw(n));
  for (const auto& t : enumerate_rooted_trees(4)) {
    for (const auto& k : enumerate_orientations(4)) check(edge_matrix(gbw(t, k)));
  }
  for (const auto& k : enumerate_orientations(3)) {
    const auto x = edge_matrix(gbw(RootedTree({0, 1, 1}), k));
    check(x);
  }
}

TEST_CASE("hilbert_from_bases") {
  CHECK(hilbert_from_bases(bw(2)) == std::vector<std::size_t>{1, 2, 2});
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto h = hilbert_from_bases(bw(n));
    CHECK(h[n] == (std::size_t{1} << (n - 1)));
    std::vector<std::size_t> graded(n + 1, 0);
    for (const auto& p : enumerate_parking(broken_wheel(n), 0)) ++graded[p.degree()];
    CHECK(h == graded);
  }
}

TEST_CASE("internal histogram is binomial") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto h = internal_hilbert_from_bases(bw(n));
    for (std::size_t j = 0; j <= n; ++j) CHECK(h[j] == static_cast<std::size_t>(binom(n - 1, j)));
    CHECK(passive_bases(bw(n)).size() == internal_bases(bw(n)).size());
  }
}

TEST_CASE("fundamental_cocircuit") {
  const auto x = bw(2);
  CHECK(fundamental_cocircuit(x, B({3, 4}), 2) == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(fundamental_cocircuit(x, B({3, 4}), 0), std::invalid_argument);
}
