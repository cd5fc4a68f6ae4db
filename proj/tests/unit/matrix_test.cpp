#include <doctest.h>

#include <random>
#include <set>

#include "quiverlab/matrix.hpp"

using namespace quiverlab;

namespace {

Mat<PrimeField> from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
  Mat<PrimeField> m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

// rank over F2 independent of the library: size of the row span
int rank_brute_f2(const Mat<PrimeField>& m) {
  std::set<std::vector<std::uint64_t>> span;
  const int n = m.rows;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<std::uint64_t> v(m.cols, 0);
    for (int r = 0; r < n; ++r)
      if (mask & (1 << r))
        for (int c = 0; c < m.cols; ++c) v[c] ^= m.at(r, c);
    span.insert(v);
  }
  int rank = 0;
  while ((1u << rank) < span.size()) ++rank;
  return rank;
}

Mat<PrimeField> random_mat(const PrimeField& f, std::mt19937& rng, int r, int c) {
  Mat<PrimeField> m(r, c);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
  for (auto& e : m.a) e = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("rref rank matches brute force over F2") {
  PrimeField f2(2);
  for (int bits = 0; bits < (1 << 9); ++bits) {
    Mat<PrimeField> m(3, 3);
    for (int i = 0; i < 9; ++i) m.a[i] = (bits >> i) & 1;
    const Rref<PrimeField> red = reduce(f2, m);
    CHECK(red.rank == rank_brute_f2(m));
    CHECK(red.null_basis.cols == 3 - red.rank);
    CHECK(mat_is_zero(f2, mat_mul(f2, m, red.null_basis)));
  }
}

TEST_CASE("rref pinned example over Q") {
  Rationals q;
  Mat<Rationals> m(2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 8;
  const auto red = reduce(q, m);
  CHECK(red.rank == 2);
  REQUIRE(red.pivots == std::vector<int>{0, 2});
  // null space spanned by (-2, 1, 0)
  REQUIRE(red.null_basis.cols == 1);
  CHECK(red.null_basis.at(0, 0) == -2);
  CHECK(red.null_basis.at(1, 0) == 1);
  CHECK(red.null_basis.at(2, 0) == 0);
}

TEST_CASE("solve finds solutions and rejects inconsistent systems") {
  PrimeField f(7);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4, m = 1 + (trial / 4) % 4, k = 1 + trial % 3;
    const Mat<PrimeField> a = random_mat(f, rng, n, m);
    const Mat<PrimeField> x = random_mat(f, rng, m, k);
    const Mat<PrimeField> b = mat_mul(f, a, x);
    const auto sol = solve(f, a, b);
    REQUIRE(sol.has_value());
    CHECK(mat_mul(f, a, *sol) == b);
  }

  // 0*x = e is inconsistent
  Mat<PrimeField> zero(2, 2), b(2, 1);
  b.at(0, 0) = 1;
  CHECK(!solve(f, zero, b).has_value());
  // with no columns the system is consistent exactly when B = 0
  Mat<PrimeField> empty(2, 0);
  CHECK(solve(f, empty, zero_mat(f, 2, 1)).has_value());
  CHECK(!solve(f, empty, b).has_value());
}

TEST_CASE("inverse and invertibility") {
  PrimeField f(5);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 4;
    // random invertible: I plus a strictly upper triangle, times a permutation-ish shuffle
    Mat<PrimeField> a = identity_mat(f, n);
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c) a.at(r, c) = rng() % 5;
    for (int r = 1; r < n; ++r) a.at(r, 0) = f.add(a.at(r, 0), rng() % 5 == 0 ? 1 : 0);
    if (!is_invertible(f, a)) continue;
    const Mat<PrimeField> inv = inverse(f, a);
    CHECK(mat_mul(f, a, inv) == identity_mat(f, n));
    CHECK(mat_mul(f, inv, a) == identity_mat(f, n));
  }
  Mat<PrimeField> sing(2, 2);
  sing.at(0, 0) = 1; sing.at(0, 1) = 2; sing.at(1, 0) = 3; sing.at(1, 1) = 1;  // det = 1-6 = 0 mod 5
  CHECK(!is_invertible(f, sing));
}

TEST_CASE("stacking and blocks") {
  PrimeField f(3);
  const auto a = from_rows({{1, 2}});
  const auto b = from_rows({{2, 0}});
  const auto h = hconcat(a, b);
  CHECK(h.rows == 1);
  CHECK(h.cols == 4);
  CHECK(h.at(0, 2) == 2);
  const auto v = vconcat(a, b);
  CHECK(v.rows == 2);
  CHECK(v.at(1, 0) == 2);
  const auto d = block_diag(f, {a, b});
  CHECK(d.rows == 2);
  CHECK(d.cols == 4);
  CHECK(d.at(0, 0) == 1);
  CHECK(d.at(1, 2) == 2);
  CHECK(d.at(0, 2) == 0);
  CHECK(transpose(a).at(1, 0) == 2);
}

TEST_CASE("column space, complement, quotient") {
  PrimeField f(5);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4, m = trial % 5;
    const Mat<PrimeField> a = random_mat(f, rng, n, m);
    const Mat<PrimeField> basis = column_space_basis(f, a);
    CHECK(basis.cols == rank_of(f, a));
    CHECK(rank_of(f, basis) == basis.cols);  // independent columns
    CHECK(solve(f, basis, a).has_value());   // spans every original column

    const Mat<PrimeField> comp = complement_basis(f, basis, n);
    CHECK(basis.cols + comp.cols == n);
    CHECK(rank_of(f, hconcat(basis, comp)) == n);

    const Mat<PrimeField> pi = quotient_map(f, a, n);
    CHECK(pi.rows == n - basis.cols);
    CHECK(pi.cols == n);
    CHECK(mat_is_zero(f, mat_mul(f, pi, a)));
    CHECK(rank_of(f, pi) == pi.rows);  // surjective
  }
}

TEST_CASE("vectorize flattens to one column") {
  PrimeField f(7);
  auto m = from_rows({{1, 2}, {3, 4}});
  const auto v = vectorize(m);
  CHECK(v.rows == 4);
  CHECK(v.cols == 1);
}
