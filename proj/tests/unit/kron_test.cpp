#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "quiverlab/homology.hpp"
#include "quiverlab/kron.hpp"

using namespace quiverlab;

namespace {

template <class F>
std::vector<std::pair<ProjPoint<F>, int>> sorted_multiset(
    const F& f, std::vector<ProjPoint<F>> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return point_less(a, b); });
  std::vector<std::pair<ProjPoint<F>, int>> out;
  for (const auto& p : pts) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.push_back({p, 1});
  }
  return out;
}

}  // namespace

TEST_CASE("projective points parse and print") {
  PrimeField f(7);
  CHECK(point_str(f, ProjPoint<PrimeField>::finite(3)) == "3");
  CHECK(point_str(f, ProjPoint<PrimeField>::at_infinity()) == "inf");
  CHECK(parse_point(f, "5") == ProjPoint<PrimeField>::finite(5));
  CHECK(parse_point(f, "inf").infinite);
  CHECK(corpus::kind_of([&] { parse_point(f, "x"); }).has_value());

  Rationals q;
  CHECK(parse_point(q, "-1/2") == ProjPoint<Rationals>::finite(q.from_string("-1/2")));
  CHECK(point_str(q, parse_point(q, "inf")) == "inf");
}

TEST_CASE("regular simples are pairwise non-isomorphic bricks") {
  PrimeField f(5);
  auto alg = example_algebra_two();
  std::vector<ProjPoint<PrimeField>> pts;
  for (std::uint64_t v = 0; v < 5; ++v) pts.push_back(ProjPoint<PrimeField>::finite(v));
  pts.push_back(ProjPoint<PrimeField>::at_infinity());
  for (const auto& pt : pts) {
    const auto R = simple_regular(alg, f, pt);
    CHECK(R.dims == std::vector<int>{1, 1});
    CHECK(satisfies_relations(R));
    CHECK(hom_basis(R, R).dim() == 1);
  }
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      CHECK(!are_isomorphic(simple_regular(alg, f, pts[i]), simple_regular(alg, f, pts[j])));
      CHECK(hom_basis(simple_regular(alg, f, pts[i]), simple_regular(alg, f, pts[j])).dim() == 0);
    }
}

TEST_CASE("decompose_regular recovers multisets of points") {
  PrimeField f(7);
  auto alg = example_algebra_two();
  auto pt = [&](int v) { return ProjPoint<PrimeField>::finite(v); };
  const auto inf = ProjPoint<PrimeField>::at_infinity();

  const std::vector<ProjPoint<PrimeField>> multi = {pt(0), pt(0), pt(3), inf};
  std::vector<Representation<PrimeField>> parts;
  for (const auto& p : multi) parts.push_back(simple_regular(alg, f, p));
  const auto M = direct_sum(parts);

  const auto dec = decompose_regular(M);
  REQUIRE(dec.decomposed());
  CHECK(dec.points == sorted_multiset(f, multi));

  // invariant under base change
  std::mt19937 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto dec2 = decompose_regular(corpus::random_base_change(M, rng));
    REQUIRE(dec2.decomposed());
    CHECK(dec2.points == dec.points);
  }

  // zero module decomposes trivially
  CHECK(decompose_regular(zero_rep(alg, f)).decomposed());
  CHECK(decompose_regular(zero_rep(alg, f)).points.empty());
}

TEST_CASE("decompose_regular over the rationals") {
  Rationals q;
  auto alg = example_algebra_two();
  const std::vector<ProjPoint<Rationals>> multi = {
      ProjPoint<Rationals>::finite(q.from_string("-1/2")),
      ProjPoint<Rationals>::finite(q.from_int(2)), ProjPoint<Rationals>::at_infinity()};
  std::vector<Representation<Rationals>> parts;
  for (const auto& p : multi) parts.push_back(simple_regular(alg, q, p));
  const auto dec = decompose_regular(direct_sum(parts));
  REQUIRE(dec.decomposed());
  CHECK(dec.points == sorted_multiset(q, multi));
}

TEST_CASE("decompose_regular rejects the jordan block and singular pencils") {
  PrimeField f(7);
  auto alg = example_algebra_two();

  // non-split self-extension of R(0): alpha0 = I, alpha1 = nilpotent jordan block
  Representation<PrimeField> J = zero_rep(alg, f);
  J.dims = {2, 2};
  const int a0 = alg->quiver.arrow_index("alpha0");
  const int a1 = alg->quiver.arrow_index("alpha1");
  const int b = alg->quiver.arrow_index("beta");
  J.mats[a0] = identity_mat(f, 2);
  J.mats[a1] = Mat<PrimeField>(2, 2);
  J.mats[a1].at(0, 1) = 1;
  J.mats[b] = Mat<PrimeField>(2, 2);
  REQUIRE(satisfies_relations(J));
  CHECK(decompose_regular(J).status == RegularStatus::not_semisimple_regular);

  // unbalanced dimensions can never be regular
  CHECK(decompose_regular(simple_rep(alg, f, "0")).status == RegularStatus::not_regular);

  // balanced but everywhere singular
  Representation<PrimeField> Z = zero_rep(alg, f);
  Z.dims = {1, 1};
  for (int a : {a0, a1, b}) Z.mats[a] = Mat<PrimeField>(1, 1);
  CHECK(decompose_regular(Z).status == RegularStatus::not_regular);
}

TEST_CASE("membership in the nested subcategories") {
  PrimeField f(7);
  auto alg = example_algebra_two();
  auto R = [&](const ProjPoint<PrimeField>& p) { return simple_regular(alg, f, p); };
  const auto inf = ProjPoint<PrimeField>::at_infinity();
  const auto zero = ProjPoint<PrimeField>::finite(0);

  for (const auto& p : {zero, ProjPoint<PrimeField>::finite(3), inf}) {
    const auto m = membership(R(p));
    CHECK(m.in_c);
    CHECK(m.in_d);
  }

  // direct sums stay inside
  const auto m2 = membership(direct_sum<PrimeField>({R(zero), R(inf)}));
  CHECK(m2.in_d);
  CHECK(m2.trace_dims == std::vector<int>{1, 1});
  REQUIRE(m2.trace_points.size() == 1);
  CHECK(m2.trace_points[0].first.infinite);
  REQUIRE(m2.quotient_points.size() == 1);
  CHECK(!m2.quotient_points[0].first.infinite);

  // the jordan self-extension is not even in C
  Representation<PrimeField> J = zero_rep(alg, f);
  J.dims = {2, 2};
  J.mats[alg->quiver.arrow_index("alpha0")] = identity_mat(f, 2);
  J.mats[alg->quiver.arrow_index("alpha1")] = Mat<PrimeField>(2, 2);
  J.mats[alg->quiver.arrow_index("alpha1")].at(0, 1) = 1;
  J.mats[alg->quiver.arrow_index("beta")] = Mat<PrimeField>(2, 2);
  CHECK(!membership(J).in_c);
}

TEST_CASE("extension middle terms witness the D asymmetry") {
  PrimeField f(7);
  auto alg = example_algebra_two();
  const auto lam = simple_regular(alg, f, ProjPoint<PrimeField>::finite(1));
  const auto mu = simple_regular(alg, f, ProjPoint<PrimeField>::at_infinity());

  // every class of Ext^1(R(1), R(inf)) has its middle term inside D
  const Ext1Space<PrimeField> fwd = ext1(lam, mu);
  REQUIRE(fwd.dim == 1);
  for (std::uint64_t c = 0; c < f.modulus(); ++c)
    CHECK(membership(middle_term(fwd, {c}).middle).in_d);

  // in the other direction only the split class stays inside
  const Ext1Space<PrimeField> back = ext1(mu, lam);
  REQUIRE(back.dim == 1);
  CHECK(membership(middle_term(back, {0}).middle).in_d);
  for (std::uint64_t c = 1; c < f.modulus(); ++c)
    CHECK(!membership(middle_term(back, {c}).middle).in_d);
}

TEST_CASE("ext1_d pinned values") {
  PrimeField f7(7);
  auto alg = example_algebra_two();
  auto fin = [](std::uint64_t v) { return ProjPoint<PrimeField>::finite(v); };
  const auto inf = ProjPoint<PrimeField>::at_infinity();

  const ExtD fwd = ext1_d(alg, f7, fin(1), inf);
  CHECK(fwd.dim_d == 1);
  CHECK(fwd.subspace_verified);
  CHECK(fwd.dim_ambient == 1);

  const ExtD back = ext1_d(alg, f7, inf, fin(1));
  CHECK(back.dim_d == 0);
  CHECK(back.subspace_verified);

  const ExtD self = ext1_d(alg, f7, fin(0), fin(0));
  CHECK(self.dim_ambient == 2);
  CHECK(self.dim_d == 0);
  CHECK(self.subspace_verified);

  // ambient dimensions agree with the cocycle oracle
  CHECK(fwd.dim_ambient ==
        oracles::ext1_dim_cocycle(simple_regular(alg, f7, fin(1)), simple_regular(alg, f7, inf)));
  CHECK(self.dim_ambient ==
        oracles::ext1_dim_cocycle(simple_regular(alg, f7, fin(0)), simple_regular(alg, f7, fin(0))));

  // a tiny cap trips the guard
  CHECK(corpus::kind_of([&] { ext1_d(alg, f7, fin(0), fin(0), 4); }) == ErrorKind::guard_tripped);
}

TEST_CASE("verification report for example two") {
  const Report r7 = verify_example_two(7, {ProjPoint<PrimeField>::finite(0),
                                           ProjPoint<PrimeField>::finite(1),
                                           ProjPoint<PrimeField>::at_infinity()});
  CHECK(r7.all_passed());
  CHECK(!r7.has_skipped());
  CHECK(r7.checks.size() == 2 + 9);

  const Report r2 = verify_example_two(2, {ProjPoint<PrimeField>::finite(0),
                                           ProjPoint<PrimeField>::finite(1),
                                           ProjPoint<PrimeField>::at_infinity()});
  CHECK(r2.all_passed());

  CHECK(corpus::kind_of([] { verify_example_two(7, {}); }) == ErrorKind::bad_parameter);
}
