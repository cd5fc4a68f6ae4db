#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"
#include "quiverlab/roots.hpp"

using namespace quiverlab;

TEST_CASE("positive root counts for the classical series") {
  // A_n has n(n+1)/2 positive roots, coordinates all 0/1
  for (int n = 1; n <= 8; ++n) {
    const auto roots = positive_roots(corpus::line_quiver(n));
    CHECK(static_cast<int>(roots.size()) == n * (n + 1) / 2);
    const auto brute = oracles::roots_in_box(corpus::line_quiver(n), 1);
    CHECK(roots == brute);  // both lex sorted
  }
  // D_n (star arms 1,1,n-3) has n(n-1) positive roots
  for (int n = 4; n <= 8; ++n) {
    const auto roots = positive_roots(corpus::star_quiver(1, 1, n - 3));
    CHECK(static_cast<int>(roots.size()) == n * (n - 1));
    auto brute = oracles::roots_in_box(corpus::star_quiver(1, 1, n - 3), 2);
    CHECK(roots == brute);
  }
}

TEST_CASE("positive root counts for the exceptional diagrams") {
  const auto e6 = positive_roots(corpus::star_quiver(1, 2, 2));
  CHECK(e6.size() == 36);
  CHECK(e6 == oracles::roots_in_box(corpus::star_quiver(1, 2, 2), 3));
  const auto e7 = positive_roots(corpus::star_quiver(1, 2, 3));
  CHECK(e7.size() == 63);
  CHECK(e7 == oracles::roots_in_box(corpus::star_quiver(1, 2, 3), 4));
  const auto e8 = positive_roots(corpus::star_quiver(1, 2, 4));
  CHECK(e8.size() == 120);
  CHECK(e8 == oracles::roots_in_box(corpus::star_quiver(1, 2, 4), 6));
}

TEST_CASE("root enumeration needs finite type") {
  CHECK(corpus::kind_of([] { positive_roots(corpus::kronecker_quiver()); }) ==
        ErrorKind::not_dynkin);
  CHECK(corpus::kind_of([] { positive_roots(corpus::star_quiver(1, 2, 5)); }) ==
        ErrorKind::not_dynkin);
  CHECK(corpus::kind_of([] { positive_roots(corpus::star_quiver(2, 2, 2)); }) ==
        ErrorKind::not_dynkin);
}

TEST_CASE("disconnected graphs take roots per component") {
  Quiver q = corpus::line_quiver(2);
  q.vertices.push_back("x");  // isolated A1 component
  const auto roots = positive_roots(q);
  CHECK(roots.size() == 4);  // 3 from A2 plus the isolated simple
  for (const auto& r : roots) {
    long long support = 0;
    for (size_t i = 0; i < 2; ++i) support += r[i];
    // no root mixes the components
    CHECK((support == 0) == (r[2] == 1));
  }
}

TEST_CASE("root representations are indecomposable of the right dimension") {
  PrimeField f5(5);
  Rationals qq;
  auto alg = build_algebra(corpus::star_quiver(1, 1, 1), {});  // D4
  for (const auto& d : positive_roots(alg->quiver)) {
    const auto M = root_representation(alg, f5, d);
    CHECK(M.dims == d);
    CHECK(satisfies_relations(M));
    const EndAnalysis e = end_analysis(M);
    REQUIRE(e.is_indecomposable.decided());
    CHECK(e.is_indecomposable.is_yes());
    CHECK(e.is_brick);  // finite type: indecomposables with q(d)=1 are bricks

    const auto Mq = root_representation(alg, qq, d);
    CHECK(Mq.dims == d);
    CHECK(end_analysis(Mq).dim_end == 1);
  }

  // the D4 highest root has the branch coordinate 2
  const auto roots = positive_roots(alg->quiver);
  std::vector<int> high(alg->num_vertices(), 1);
  high[0] = 2;  // hub is listed first in star_quiver
  CHECK(std::find(roots.begin(), roots.end(), high) != roots.end());
  CHECK(root_representation(alg, f5, high).dims == high);
}

TEST_CASE("non-roots are rejected") {
  PrimeField f(5);
  auto alg = build_algebra(corpus::line_quiver(3), {});
  CHECK(corpus::kind_of([&] { root_representation(alg, f, {1, 0, 1}); }) ==
        ErrorKind::not_a_root);
  CHECK(corpus::kind_of([&] { root_representation(alg, f, {2, 1, 0}); }) ==
        ErrorKind::not_a_root);
}

TEST_CASE("root representations cover every A3 orientation") {
  PrimeField f(2);
  // 1 -> 2 <- 3 and 1 <- 2 -> 3, mixing sources and sinks
  for (int variant = 0; variant < 2; ++variant) {
    Quiver q;
    q.name = "A3v";
    q.vertices = {"1", "2", "3"};
    if (variant == 0) {
      q.arrows.push_back({"u", "1", "2"});
      q.arrows.push_back({"w", "3", "2"});
    } else {
      q.arrows.push_back({"u", "2", "1"});
      q.arrows.push_back({"w", "2", "3"});
    }
    auto alg = build_algebra(q, {});
    for (const auto& d : positive_roots(q)) {
      const auto M = root_representation(alg, f, d);
      CHECK(M.dims == d);
      CHECK(oracles::indecomposable_brute(M));
    }
  }
}
