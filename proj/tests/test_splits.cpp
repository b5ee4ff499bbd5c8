#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "vrsplit/splits.hpp"

using namespace vrsplit;

namespace {

distance_matrix<rational> two_point() { return fixtures::from_ints({{0, 1}, {1, 0}}); }

// Full circular split system on n points with unit weights: S_{ij} has one
// side {i, ..., j-1} in the cyclic order.
weighted_split_system<rational> circular_unit_system(int n) {
  weighted_split_system<rational> sys;
  sys.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::uint64_t mask = 0;
      for (int k = i; k < j; ++k) mask |= 1ull << k;
      sys.add(split(mask, n), rational(1));
    }
  sys.canonicalize();
  return sys;
}

weighted_split_system<rational> system_from_alpha(const distance_matrix<rational>& alpha) {
  int n = alpha.size();
  weighted_split_system<rational> sys;
  sys.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (alpha(i, j) == 0) continue;
      std::uint64_t mask = 0;
      for (int k = i; k < j; ++k) mask |= 1ull << k;
      sys.add(split(mask, n), alpha(i, j));
    }
  sys.canonicalize();
  return sys;
}

}  // namespace

TEST_SUITE_BEGIN("split-decomp");

TEST_CASE("beta coefficients") {
  auto hex = fixtures::hexagon();
  CHECK(beta(two_point(), 0, 0, 1, 1) == 2);
  CHECK(beta(hex, 1, 1, 0, 2) == 2);  // max{10,10,8} - 8
  SUBCASE("coincident pairs can vanish") {
    CHECK(beta(hex, 0, 1, 0, 1) == 0);
  }
  SUBCASE("beta is nonnegative") {
    std::mt19937 rng(3);
    for (int t = 0; t < 200; ++t) {
      int i = rng() % 6, j = rng() % 6, k = rng() % 6, l = rng() % 6;
      CHECK(beta(hex, i, j, k, l) >= 0);
    }
  }
}

TEST_CASE("isolation index") {
  CHECK(isolation_index(two_point(), split(0b01, 2)) == 1);
  SUBCASE("hexagon singleton split") {
    std::uint64_t side = 1ull << 1;  // {2} in one-based labels
    CHECK(isolation_index(fixtures::hexagon(), split(side, 6)) == 1);
  }
  SUBCASE("K_{2,3} has no d-splits") {
    auto m = fixtures::k23_metric();
    for (std::uint64_t mask = 1; mask < (1u << 4); ++mask)
      CHECK(isolation_index(m, split((~(mask << 1)) & 0x1f, 5)) == 0);
  }
}

TEST_CASE("enumerate_d_splits") {
  SUBCASE("prime metrics give empty systems") {
    CHECK(enumerate_d_splits(fixtures::k23_metric()).size() == 0);
    CHECK(enumerate_d_splits(fixtures::h3_metric()).size() == 0);
  }
  SUBCASE("hexagon yields the 15 unit circular splits") {
    auto sys = enumerate_d_splits(fixtures::hexagon());
    CHECK(sys.size() == 15);
    for (auto& [s, w] : sys.entries) CHECK(w == 1);
    CHECK(sys == circular_unit_system(6));
    CHECK(is_weakly_compatible(sys));
  }
  SUBCASE("split count never exceeds n choose 2") {
    std::mt19937 rng(17);
    for (int t = 0; t < 10; ++t) {
      int n = 4 + static_cast<int>(rng() % 3);
      distance_matrix<rational> m(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          m(i, j) = rational(4 + static_cast<long>(rng() % 5));
          m(j, i) = m(i, j);
        }
      auto sys = enumerate_d_splits(m);
      CHECK(static_cast<int>(sys.size()) <= n * (n - 1) / 2);
    }
  }
  SUBCASE("capacity error beyond the cap") {
    distance_matrix<rational> m(5);
    CHECK_THROWS_AS(enumerate_d_splits(m, 4), capacity_error);
  }
}

TEST_CASE("synthesize_metric reproduces tables") {
  CHECK(synthesize_metric(circular_unit_system(6)) == fixtures::hexagon());
  CHECK(synthesize_metric(system_from_alpha(fixtures::seven_point_alpha())) ==
        fixtures::seven_point_metric());
  SUBCASE("delta is zero within a side") {
    split s(0b0111, 4);
    CHECK(split_metric(s, 0, 1) == 0);
    CHECK(split_metric(s, 0, 3) == 1);
  }
}

TEST_CASE("residue and total decomposability") {
  SUBCASE("hexagon is totally decomposable") {
    auto hex = fixtures::hexagon();
    auto d0 = residue(hex, enumerate_d_splits(hex));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(d0(i, j) == 0);
    CHECK(is_totally_decomposable(hex));
  }
  SUBCASE("K_{2,3} residue is the metric itself") {
    auto m = fixtures::k23_metric();
    auto d0 = residue(m, enumerate_d_splits(m));
    CHECK(d0 == m);
    CHECK(!is_totally_decomposable(m));
  }
  SUBCASE("a split metric added to K_{2,3} decomposes partially") {
    auto m = fixtures::k23_metric();
    split s(0b00011, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) += rational(split_metric(s, i, j), 2);
    REQUIRE(validate_metric(m).empty());
    auto sys = enumerate_d_splits(m);
    CHECK(sys.size() > 0);
    auto d0 = residue(m, sys);
    bool nonzero = false;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (d0(i, j) != 0) nonzero = true;
    CHECK(nonzero);
  }
}

TEST_CASE("weak compatibility") {
  SUBCASE("empty and singleton systems") {
    weighted_split_system<rational> sys;
    sys.n = 4;
    CHECK(is_weakly_compatible(sys));
    sys.add(split(0b0011, 4), rational(1));
    CHECK(is_weakly_compatible(sys));
  }
  SUBCASE("full circular systems are weakly compatible") {
    CHECK(is_weakly_compatible(circular_unit_system(6)));
  }
  SUBCASE("the three crossing splits of a 4-set are not") {
    weighted_split_system<rational> sys;
    sys.n = 4;
    sys.add(split(0b0011, 4), rational(1));
    sys.add(split(0b0101, 4), rational(1));
    sys.add(split(0b1001, 4), rational(1));
    CHECK(!is_weakly_compatible(sys));
  }
  SUBCASE("octahedral systems are weakly compatible") {
    weighted_split_system<rational> sys;
    sys.n = 6;
    auto mk = [](std::initializer_list<int> side) {
      std::uint64_t m = 0;
      for (int s : side) m |= 1ull << s;
      return split(m, 6);
    };
    sys.add(mk({0, 1, 2}), rational(1));
    sys.add(mk({1, 2, 3}), rational(1));
    sys.add(mk({2, 3, 4}), rational(1));
    sys.add(mk({0, 2, 4}), rational(1));
    CHECK(is_weakly_compatible(sys));
  }
}

TEST_CASE("incompatibility components") {
  SUBCASE("pairwise compatible splits stay singletons") {
    // path metric on 4 colinear points: three nested cut splits
    weighted_split_system<rational> sys;
    sys.n = 4;
    sys.add(split(0b0001, 4), rational(1));
    sys.add(split(0b0011, 4), rational(1));
    sys.add(split(0b0111, 4), rational(1));
    auto comps = incompatibility_components(sys);
    CHECK(comps.size() == 3);
  }
  SUBCASE("full circular system on 5 points") {
    // Singleton splits are nested in every other split, hence compatible with
    // everything: they stay isolated. The five adjacent-pair splits cross
    // cyclically and form one component.
    auto sys = circular_unit_system(5);
    CHECK(sys.size() == 10);
    auto comps = incompatibility_components(sys);
    REQUIRE(comps.size() == 6);
    size_t biggest = 0;
    for (auto& c : comps) biggest = std::max(biggest, c.size());
    CHECK(biggest == 5);
  }
  SUBCASE("full circular hexagon: six leg components plus the core") {
    auto comps = incompatibility_components(enumerate_d_splits(fixtures::hexagon()));
    CHECK(comps.size() == 7);
  }
}

TEST_CASE("decomposition round trip") {
  // enumerate(synthesize(S)) must recover S exactly for weakly compatible S
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 5 + static_cast<int>(rng() % 4);
    weighted_split_system<rational> sys;
    sys.n = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 3 == 0) continue;  // random circular subset
        std::uint64_t mask = 0;
        for (int k = i; k < j; ++k) mask |= 1ull << k;
        sys.add(split(mask, n), rational(1 + static_cast<long>(rng() % 6), 1 + rng() % 3));
      }
    if (sys.size() == 0) continue;
    sys.canonicalize();
    REQUIRE(is_weakly_compatible(sys));
    auto recovered = enumerate_d_splits(synthesize_metric(sys));
    CHECK(recovered == sys);
  }
}

TEST_SUITE_END();
