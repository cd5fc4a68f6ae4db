#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "quiverlab/rep.hpp"

using namespace quiverlab;

TEST_CASE("projectives of the example algebras have the right shapes") {
  PrimeField f(2);
  auto l3 = example_algebra_one(3);
  CHECK(projective_rep(l3, f, "1").dims == std::vector<int>{1, 0, 0});
  CHECK(projective_rep(l3, f, "2").dims == std::vector<int>{1, 1, 0});
  CHECK(projective_rep(l3, f, "3").dims == std::vector<int>{1, 1, 1});

  auto l2 = example_algebra_two();
  CHECK(projective_rep(l2, f, "0").dims == std::vector<int>{3, 1});
  CHECK(projective_rep(l2, f, "1").dims == std::vector<int>{6, 3});
  // total dimension of the regular module = dim of the algebra
  CHECK(projective_rep(l2, f, "0").total_dim() + projective_rep(l2, f, "1").total_dim() ==
        l2->dim());

  for (const auto& v : {"0", "1"}) CHECK(satisfies_relations(projective_rep(l2, f, v)));
}

TEST_CASE("explicit representations are validated") {
  PrimeField f(3);
  auto alg = example_algebra_one(3);
  // alpha, beta, gamma all 1x1; alpha*beta = 0 forces a zero product
  auto mk = [&](std::uint64_t a, std::uint64_t b, std::uint64_t g) {
    std::vector<Mat<PrimeField>> mats(3, Mat<PrimeField>(1, 1));
    mats[0].at(0, 0) = a;
    mats[1].at(0, 0) = b;
    mats[2].at(0, 0) = g;
    return explicit_rep(alg, f, {1, 1, 1}, std::move(mats));
  };
  CHECK(mk(1, 0, 1).total_dim() == 3);
  CHECK(mk(0, 2, 1).total_dim() == 3);
  CHECK(corpus::kind_of([&] { mk(1, 1, 0); }) == ErrorKind::relation_violated);
  CHECK(corpus::kind_of([&] {
          explicit_rep(alg, f, {1, 1}, {});
        }) == ErrorKind::shape_mismatch);
}

TEST_CASE("path matrices compose in function order") {
  PrimeField f(5);
  auto alg = build_algebra(corpus::line_quiver(3), {});
  Representation<PrimeField> M = zero_rep(alg, f);
  M.dims = {1, 1, 1};
  M.mats[0] = Mat<PrimeField>(1, 1);  // a2
  M.mats[1] = Mat<PrimeField>(1, 1);  // a3
  M.mats[0].at(0, 0) = 2;
  M.mats[1].at(0, 0) = 3;
  CHECK(path_matrix(M, PathWord{{"a2", "a3"}, ""}).at(0, 0) == 1);  // 2*3 = 6 = 1 mod 5
  CHECK(path_matrix(M, PathWord{{}, "2"}).at(0, 0) == 1);           // identity
}

TEST_CASE("hom dimensions match the brute force oracle") {
  PrimeField f2(2), f3(3);
  auto l3 = example_algebra_one(3);
  const auto mods2 = corpus::standard_modules(l3, f2);
  for (const auto& M : mods2)
    for (const auto& N : mods2) {
      const int lib = hom_basis(M, N).dim();
      CHECK(lib == oracles::hom_dim_brute(M, N));
      // every basis element really intertwines
      for (const auto& phi : hom_basis(M, N).basis)
        for (size_t a = 0; a < l3->quiver.arrows.size(); ++a) {
          const int s = l3->quiver.vertex_index(l3->quiver.arrows[a].source);
          const int t = l3->quiver.vertex_index(l3->quiver.arrows[a].target);
          CHECK(mat_mul(f2, phi[t], M.mats[a]) == mat_mul(f2, N.mats[a], phi[s]));
        }
    }

  auto kron = build_algebra(corpus::kronecker_quiver(), {});
  const auto modsk = corpus::standard_modules(kron, f3);
  for (const auto& M : modsk)
    for (const auto& N : modsk)
      CHECK(hom_basis(M, N).dim() == oracles::hom_dim_brute(M, N));
}

TEST_CASE("hom from a projective reads off the dimension at its vertex") {
  PrimeField f(5);
  for (auto alg : {example_algebra_one(4), example_algebra_two()}) {
    const auto mods = corpus::standard_modules(alg, f);
    for (int v = 0; v < alg->num_vertices(); ++v) {
      const auto P = projective_rep(alg, f, alg->quiver.vertices[v]);
      for (const auto& X : mods) CHECK(hom_basis(P, X).dim() == X.dims[v]);
    }
  }
}

TEST_CASE("endomorphism analysis") {
  PrimeField f(2);
  auto alg = example_algebra_one(3);
  const auto s1 = simple_rep(alg, f, "1");

  const EndAnalysis simple = end_analysis(s1);
  CHECK(simple.dim_end == 1);
  CHECK(simple.is_brick);
  CHECK(simple.is_schur.is_yes());
  CHECK(simple.is_indecomposable.is_yes());

  const EndAnalysis square = end_analysis(direct_sum<PrimeField>({s1, s1}));
  CHECK(square.dim_end == 4);
  CHECK(!square.is_brick);
  CHECK(square.is_schur.decided());
  CHECK(!square.is_schur.is_yes());
  CHECK(square.is_indecomposable.decided());
  CHECK(!square.is_indecomposable.is_yes());

  // End P(3) = e3 * Lambda * e3 = k, so P(3) is a brick
  const EndAnalysis p3 = end_analysis(projective_rep(alg, f, "3"));
  CHECK(p3.dim_end == 1);
  CHECK(p3.is_brick);

  // indecomposability agrees with the idempotent-count oracle on the corpus
  for (const auto& M : corpus::standard_modules(alg, f)) {
    const EndAnalysis e = end_analysis(M);
    REQUIRE(e.is_indecomposable.decided());
    CHECK(e.is_indecomposable.is_yes() == oracles::indecomposable_brute(M));
  }
}

TEST_CASE("endomorphism analysis when End is a field extension") {
  // alpha0 = I, alpha1 = companion matrix of an irreducible quadratic: End(M)
  // is the degree-2 extension, so M is schur and indecomposable but no brick
  auto kron = build_algebra(corpus::kronecker_quiver(), {});
  const int a0 = kron->quiver.arrow_index("alpha0");
  const int a1 = kron->quiver.arrow_index("alpha1");

  auto companion_module = [&](std::uint64_t p, std::uint64_t c0, std::uint64_t c1) {
    PrimeField f(p);
    Representation<PrimeField> M = zero_rep(kron, f);
    M.dims = {2, 2};
    M.mats[a0] = identity_mat(f, 2);
    M.mats[a1] = Mat<PrimeField>(2, 2);  // companion of x^2 - c1 x - c0
    M.mats[a1].at(0, 1) = c0;
    M.mats[a1].at(1, 0) = 1;
    M.mats[a1].at(1, 1) = c1;
    return M;
  };

  // x^2 + 1 over F3: p > dim End, decided through the radical quotient scan
  const EndAnalysis f9 = end_analysis(companion_module(3, 2, 0));
  CHECK(f9.dim_end == 2);
  CHECK(!f9.is_brick);
  CHECK(f9.is_schur.is_yes());
  REQUIRE(f9.is_indecomposable.decided());
  CHECK(f9.is_indecomposable.is_yes());

  // x^2 + x + 1 over F2: p <= dim End, decided through the full-End scan
  const EndAnalysis f4 = end_analysis(companion_module(2, 1, 1));
  CHECK(f4.dim_end == 2);
  CHECK(!f4.is_brick);
  CHECK(f4.is_schur.is_yes());
  REQUIRE(f4.is_indecomposable.decided());
  CHECK(f4.is_indecomposable.is_yes());
}

TEST_CASE("isomorphism testing") {
  PrimeField f(5);
  std::mt19937 rng(23);
  auto alg = example_algebra_one(3);
  const auto s1 = simple_rep(alg, f, "1");
  const auto s2 = simple_rep(alg, f, "2");
  CHECK(are_isomorphic(s1, s1));
  CHECK(!are_isomorphic(s1, s2));
  CHECK(!are_isomorphic(s1, direct_sum<PrimeField>({s1, s1})));

  for (const auto& M : corpus::standard_modules(alg, f))
    CHECK(are_isomorphic(M, corpus::random_base_change(M, rng)));

  // changing one structure constant on a projective breaks the isomorphism
  const auto p3 = projective_rep(alg, f, "3");
  auto other = p3;
  other.mats[2].at(0, 0) = 0;  // kill gamma
  CHECK(!are_isomorphic(p3, other));
}

TEST_CASE("subrepresentations and quotients") {
  PrimeField f(2);
  auto alg = example_algebra_one(3);
  const auto p3 = projective_rep(alg, f, "3");

  const auto rad = radical_spans(p3);
  const Subrep<PrimeField> sub = subrepresentation(p3, rad);
  CHECK(sub.rep.dims == std::vector<int>{1, 1, 0});
  CHECK(satisfies_relations(sub.rep));

  const QuotientRep<PrimeField> top = quotient_representation(p3, rad);
  CHECK(top.rep.dims == std::vector<int>{0, 0, 1});
  CHECK(are_isomorphic(top.rep, simple_rep(alg, f, "3")));

  // inclusion and projection really are module maps with the right ranks
  for (int v = 0; v < 3; ++v) {
    CHECK(rank_of(f, sub.inclusion[v]) == sub.rep.dims[v]);
    CHECK(rank_of(f, top.projection[v]) == top.rep.dims[v]);
  }

  // a span that is not arrow-stable is rejected: take the top coordinate at 3
  std::vector<Mat<PrimeField>> bad(3);
  bad[0] = zero_mat(f, 1, 0);
  bad[1] = zero_mat(f, 1, 0);
  bad[2] = identity_mat(f, 1);
  CHECK(corpus::kind_of([&] { subrepresentation(p3, bad); }) == ErrorKind::precondition_failed);

  // kernel of the cover P(3) ->> S(3)
  const auto s3 = simple_rep(alg, f, "3");
  std::vector<Mat<PrimeField>> phi = {zero_mat(f, 0, 1), zero_mat(f, 0, 1), identity_mat(f, 1)};
  const Subrep<PrimeField> ker = kernel_subrep(p3, s3, phi);
  CHECK(ker.rep.dims == std::vector<int>{1, 1, 0});
}

TEST_CASE("flatten and unflatten round trip") {
  PrimeField f(7);
  std::mt19937 rng(5);
  std::vector<Mat<PrimeField>> maps;
  std::vector<int> rows = {2, 0, 3}, cols = {1, 2, 3};
  for (int i = 0; i < 3; ++i) {
    Mat<PrimeField> m(rows[i], cols[i]);
    for (auto& e : m.a) e = rng() % 7;
    maps.push_back(m);
  }
  const Mat<PrimeField> flat = flatten_maps(f, maps);
  CHECK(flat.cols == 1);
  const auto back = unflatten_maps(f, flat, rows, cols);
  REQUIRE(back.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(back[i] == maps[i]);
}
