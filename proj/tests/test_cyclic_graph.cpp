#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "vrsplit/circular.hpp"
#include "vrsplit/cyclic_graph.hpp"
#include "vrsplit/homology.hpp"

using namespace vrsplit;

namespace {

ugraph circulant(int n, int k) {
  ugraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= k; ++j) g.add_edge(i, (i + j) % n);
  return g;
}

std::vector<int> shift_M(int n, int k) {
  std::vector<int> M(n);
  for (int i = 0; i < n; ++i) M[i] = (i + k) % n;
  return M;
}

// VR skeleton of a random circular metric at a random critical radius; when
// require_star is set, rejection-samples until Property (star) holds so the
// skeleton is guaranteed cyclic.
ugraph random_cyclic(std::mt19937& rng, int n, rational& r_out, bool require_star) {
  for (int attempt = 0;; ++attempt) {
    distance_matrix<rational> alpha(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        long lo = attempt > 40 ? 2 : 1, hi = attempt > 40 ? 3 : 4;
        alpha(i, j) = rational(lo + static_cast<long>(rng() % (hi - lo + 1)));
        alpha(j, i) = alpha(i, j);
      }
    auto cd = fixtures::cd_from_alpha(alpha);
    if (require_star) {
      auto st = compute_sigma(cd);
      if (!st.undefined_set.empty()) continue;
      if (!compute_M(cd, st).star_holds) continue;
    }
    auto d = metric_from_alpha(cd);
    auto crit = d.critical_values();
    r_out = crit[rng() % crit.size()];
    return vr_graph(d, r_out, vr_convention::open);
  }
}

}  // namespace

TEST_SUITE_BEGIN("cyclic-complex");

TEST_CASE("orient_and_check") {
  SUBCASE("C_6 with the antipodal direction is cyclic") {
    auto rep = orient_and_check(circulant(6, 1), shift_M(6, 3));
    CHECK(rep.ok);
  }
  SUBCASE("the seven-point skeleton with edge {1,4} is not cyclic") {
    auto m = fixtures::seven_point_metric();
    auto g = vr_graph(m, rational(25, 2), vr_convention::open);
    REQUIRE(g.has_edge(0, 3));
    // the natural direction: M_r windows at r in (12,13), one-based (2,3,4,5,7,7,1)
    std::vector<int> M = {1, 2, 3, 4, 6, 6, 0};
    auto rep = orient_and_check(g, M);
    CHECK(!rep.ok);
  }
  SUBCASE("even complete graphs report the cone ambiguity") {
    auto rep = orient_and_check(circulant(6, 3), shift_M(6, 3));
    CHECK(!rep.ok);
    CHECK(rep.ambiguous);
  }
  SUBCASE("odd complete graphs are honest circulants") {
    CHECK(orient_and_check(circulant(5, 2), shift_M(5, 2)).ok);
  }
  SUBCASE("fixed points are rejected") {
    std::vector<int> M = {0, 2, 0};
    auto rep = orient_and_check(circulant(3, 1), M);
    CHECK(!rep.ok);
  }
}

TEST_CASE("dismantle") {
  SUBCASE("K_5 collapses to a vertex") {
    auto res = dismantle(circulant(5, 2));
    CHECK(res.kept.size() == 1);
  }
  SUBCASE("C_6^1 is terminal") {
    auto res = dismantle(circulant(6, 1));
    CHECK(res.kept.size() == 6);
    CHECK(res.removal_order.empty());
  }
  SUBCASE("C_7^2 is terminal") {
    auto res = dismantle(circulant(7, 2));
    CHECK(res.kept.size() == 7);
  }
  SUBCASE("each removal preserves clique homology") {
    std::mt19937 rng(29);
    for (int t = 0; t < 12; ++t) {
      rational r;
      auto g = random_cyclic(rng, 5 + static_cast<int>(rng() % 6), r, false);
      if (g.edge_count() == 0) continue;
      auto res = dismantle(g);
      std::vector<int> alive(g.n);
      for (int i = 0; i < g.n; ++i) alive[i] = i;
      auto reference = homology_ranks(clique_complex(g, 6), field_tag::gf(2));
      reference.resize(5, 0);
      for (int v : res.removal_order) {
        alive.erase(std::find(alive.begin(), alive.end(), v));
        auto betti = homology_ranks(clique_complex(g.induced(alive), 6), field_tag::gf(2));
        betti.resize(5, 0);
        for (int k = 0; k < 4; ++k) CHECK(betti[k] == reference[k]);
      }
    }
  }
}

TEST_CASE("winding_fraction") {
  SUBCASE("C_6^1 winds 1/6") {
    auto wf = winding_fraction(circulant(6, 1));
    REQUIRE(wf.kind == winding_fraction_t::fraction);
    CHECK(wf.k == 1);
    CHECK(wf.n == 6);
  }
  SUBCASE("C_6^2 winds 1/3") {
    auto wf = winding_fraction(circulant(6, 2));
    REQUIRE(wf.kind == winding_fraction_t::fraction);
    CHECK(wf.k == 1);
    CHECK(wf.n == 3);
    long l;
    CHECK(wf.critical(l));
    CHECK(l == 1);
  }
  SUBCASE("K_5 dismantles to a point") {
    auto wf = winding_fraction(circulant(5, 2));
    CHECK(wf.kind == winding_fraction_t::contractible_point);
  }
}

TEST_CASE("classify") {
  SUBCASE("named examples") {
    CHECK(classify(circulant(6, 1)) == homotopy_type{homotopy_type::odd_sphere, 0, 0, 0});
    CHECK(classify(circulant(6, 2)) ==
          homotopy_type{homotopy_type::wedge_even_spheres, 1, 1, 0});
    CHECK(classify(circulant(5, 2)) == homotopy_type{homotopy_type::contractible, 0, 0, 0});
    CHECK(classify(ugraph(4)) == homotopy_type{homotopy_type::discrete, 0, 4, 0});
  }
  SUBCASE("betti readings") {
    CHECK(betti(homotopy_type{homotopy_type::odd_sphere, 1, 0, 0}, 3) == 1);
    CHECK(betti(homotopy_type{homotopy_type::odd_sphere, 1, 0, 0}, 1) == 0);
    CHECK(betti(homotopy_type{homotopy_type::wedge_even_spheres, 1, 3, 0}, 2) == 3);
    CHECK(betti(homotopy_type{homotopy_type::contractible, 0, 0, 0}, 0) == 1);
    CHECK(betti(homotopy_type{homotopy_type::contractible, 0, 0, 0}, 2) == 0);
    CHECK(betti(homotopy_type{homotopy_type::discrete, 0, 5, 0}, 0) == 5);
  }
  SUBCASE("classification agrees with the oracle on random cyclic graphs") {
    std::mt19937 rng(31);
    for (int t = 0; t < 40; ++t) {
      rational r;
      auto g = random_cyclic(rng, 5 + static_cast<int>(rng() % 8), r, true);
      auto type = classify(g);
      auto c = clique_complex(g, std::min(g.n - 1, 6));
      auto betti_o = homology_ranks(c, field_tag::gf(2));
      for (int k = 0; k <= 4 && k < static_cast<int>(betti_o.size()) - 1; ++k)
        CHECK(type.betti(k) == betti_o[k]);
    }
  }
  SUBCASE("terminal winding fraction stays below 1/2") {
    std::mt19937 rng(37);
    for (int t = 0; t < 30; ++t) {
      rational r;
      auto g = random_cyclic(rng, 5 + static_cast<int>(rng() % 7), r, true);
      if (g.edge_count() == 0) continue;
      auto wf = winding_fraction(g);
      if (wf.kind == winding_fraction_t::fraction) CHECK(2 * wf.k < wf.n);
    }
  }
}

TEST_SUITE_END();
