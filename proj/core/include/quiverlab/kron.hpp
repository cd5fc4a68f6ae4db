#ifndef QUIVERLAB_KRON_HPP
#define QUIVERLAB_KRON_HPP

#include "quiverlab/report.hpp"
#include "quiverlab/rep.hpp"

namespace quiverlab {

// A point of the projective line over the base field. Parameterizes the
// one-parameter family R(lambda) of two-dimensional modules of example two.
template <class F>
struct ProjPoint {
  bool infinite = false;
  typename F::Elt value{};  // meaningful only when finite

  static ProjPoint finite(typename F::Elt v) { return ProjPoint{false, std::move(v)}; }
  static ProjPoint at_infinity() { return ProjPoint{true, {}}; }

  bool operator==(const ProjPoint& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};

// finite points first (by field value), infinity last
template <class F>
bool point_less(const ProjPoint<F>& a, const ProjPoint<F>& b) {
  if (a.infinite != b.infinite) return b.infinite;
  if (a.infinite) return false;
  return a.value < b.value;
}

template <class F>
std::string point_str(const F& f, const ProjPoint<F>& pt);
// "inf" or a field scalar (as accepted by the field's from_string)
template <class F>
ProjPoint<F> parse_point(const F& f, const std::string& text);

// R(lambda): dims (1, 1), alpha0 = [1], alpha1 = [lambda], beta = 0;
// at infinity alpha0 = [0], alpha1 = [1].
template <class F>
Representation<F> simple_regular(AlgebraPtr alg, const F& f, const ProjPoint<F>& pt);

enum class RegularStatus { decomposed, not_regular, not_semisimple_regular };

const char* to_string(RegularStatus s);

// Verdict of decompose_regular. On success `points` lists the R(lambda)
// composition with multiplicities, sorted; `detail` carries the failure
// reason otherwise (or the probe that worked).
template <class F>
struct RegularDecomposition {
  RegularStatus status = RegularStatus::not_regular;
  std::vector<std::pair<ProjPoint<F>, int>> points;
  std::string detail;

  bool decomposed() const { return status == RegularStatus::decomposed; }
};

// Decide whether the restriction of M to the two parallel arrows is a direct
// sum of R(lambda)'s, and recover the multiset of points if so. Examines
// only the dimensions and the two alpha matrices; never throws on a valid
// representation, failures come back as a status plus reason.
//
// Method: probe the pencil c0*alpha0 + c1*alpha1 for an invertible member
// (all points of the projective line over F_p; degree+2 points over Q, which
// decide since the determinant form has degree <= dim). With P invertible
// and D an independent member, B = P^-1 D determines everything: the
// restriction is semisimple regular iff the minimal polynomial of B is
// squarefree with all eigenvalues in the base field, and each eigenvalue
// theta pulls back to the point (theta*c0 - d0)/(d1 - theta*c1) with
// multiplicity dim ker(B - theta). Over F_p a pencil with no invertible
// member among the p+1 rational probes reports not_regular: that is the
// correct answer relative to the base field.
template <class F>
RegularDecomposition<F> decompose_regular(const Representation<F>& M);

// Membership in the two nested subcategories of example two:
//   in_c: the restriction is semisimple regular (decompose_regular succeeds);
//   in_d: additionally the trace of R(inf) in M is a direct sum of copies of
//         R(inf) and the quotient by it is a direct sum of R(lambda) with
//         lambda finite (both with beta acting as zero).
// The trace is the canonical witness: any submodule isomorphic to R(inf)^s
// with the right quotient necessarily equals it.
template <class F>
struct Membership {
  bool in_c = false;
  bool in_d = false;
  std::string detail;
  std::vector<int> trace_dims;
  std::vector<std::pair<ProjPoint<F>, int>> trace_points;
  std::vector<std::pair<ProjPoint<F>, int>> quotient_points;
};

template <class F>
Membership<F> membership(const Representation<F>& M);

// dim of the subspace of Ext^1(R(lambda), R(mu)) whose middle terms lie in D,
// found by materializing every one of the p^dim classes and testing
// membership. subspace_verified reports whether the surviving coefficient
// set was confirmed to be an F_p-subspace (contains zero, closed under
// addition; scalar closure follows over a prime field). When it is, dim_d is
// its dimension; when the set is not closed, or is too large to check
// pairwise, dim_d falls back to the raw element count. Throws guard_tripped
// when p^dim exceeds scan_cap.
struct ExtD {
  int dim_ambient = 0;
  int dim_d = 0;
  bool subspace_verified = false;
};

ExtD ext1_d(AlgebraPtr alg, const PrimeField& f, const ProjPoint<PrimeField>& lam,
            const ProjPoint<PrimeField>& mu, std::uint64_t scan_cap = kScanCap);

// Verification battery for example two over F_p: algebra dimension, every
// sample point in D, and the full sample x sample grid of ext1_d values
// against the one-line prediction (one-dimensional exactly at (finite,
// infinity) cells, zero elsewhere, all subspace-verified). Guard-tripped
// cells are reported as skipped.
Report verify_example_two(std::uint64_t p, const std::vector<ProjPoint<PrimeField>>& sample);

}  // namespace quiverlab

#endif
