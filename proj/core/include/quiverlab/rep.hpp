#ifndef QUIVERLAB_REP_HPP
#define QUIVERLAB_REP_HPP

#include "quiverlab/matrix.hpp"
#include "quiverlab/quiver.hpp"

namespace quiverlab {

// Finite dimensional module over a bound quiver algebra, given as one matrix
// per arrow. Matrices act on column vectors, so the matrix of an arrow
// a : s -> t has shape dims[t] x dims[s], and a path word acts by the product
// of its arrow matrices taken in the stored (function composition) order.
template <class F>
struct Representation {
  AlgebraPtr alg;
  F field;
  std::vector<int> dims;       // by vertex index
  std::vector<Mat<F>> mats;    // by arrow index

  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }
  bool operator==(const Representation& o) const {
    return *alg == *o.alg && field == o.field && dims == o.dims && mats == o.mats;
  }
};

template <class F>
Representation<F> zero_rep(AlgebraPtr alg, const F& f);
template <class F>
Representation<F> simple_rep(AlgebraPtr alg, const F& f, const std::string& vertex);
// Indecomposable projective P(v): basis the paths with source v, arrows act
// by postcomposition.
template <class F>
Representation<F> projective_rep(AlgebraPtr alg, const F& f, const std::string& vertex);
template <class F>
Representation<F> direct_sum(const std::vector<Representation<F>>& parts);
// Validates shapes and all relations (throws shape_mismatch / relation_violated).
template <class F>
Representation<F> explicit_rep(AlgebraPtr alg, const F& f, std::vector<int> dims,
                               std::vector<Mat<F>> mats);

template <class F>
Mat<F> path_matrix(const Representation<F>& M, const PathWord& w);
template <class F>
bool satisfies_relations(const Representation<F>& M);

// check same algebra (structurally) and same field
template <class F>
void require_compatible(const Representation<F>& M, const Representation<F>& N);

// Basis of Hom(M, N): solutions of the intertwiner system
// phi_{t(a)} M_a = N_a phi_{s(a)} for every arrow a. Each element is one
// matrix per vertex; the basis is the deterministic null-space basis of the
// stacked system.
template <class F>
struct HomSpace {
  std::vector<std::vector<Mat<F>>> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

template <class F>
HomSpace<F> hom_basis(const Representation<F>& M, const Representation<F>& N);

// Per-vertex map tuples as flat coordinate columns (used to put hom spaces
// through the linear algebra); layout: vertices in order, entries row-major.
template <class F>
Mat<F> flatten_maps(const F& f, const std::vector<Mat<F>>& maps);
template <class F>
std::vector<Mat<F>> unflatten_maps(const F& f, const Mat<F>& column,
                                   const std::vector<int>& rows, const std::vector<int>& cols);

// three-valued verdict for guarded decisions
struct Verdict {
  enum Value { yes, no, unknown } value = unknown;
  std::string reason;  // set when unknown

  static Verdict of(bool b) { return Verdict{b ? yes : no, ""}; }
  static Verdict not_known(std::string why) { return Verdict{unknown, std::move(why)}; }
  bool decided() const { return value != unknown; }
  bool is_yes() const { return value == yes; }
};

// dim_end        dim_k End(M)
// is_brick       dim End(M) == 1
// is_schur       every nonzero endomorphism invertible (exhaustive scan over
//                F_p when p^dim_end <= 2^20; immediate for bricks)
// is_indecomposable  End(M) local, decided via the trace-form radical of
//                End(M) (valid over Q or when p > dim End) followed by an
//                idempotent scan in End/rad; when the radical is unavailable
//                the scan runs over all of End instead (both capped at 2^20
//                elements)
struct EndAnalysis {
  int dim_end = 0;
  bool is_brick = false;
  Verdict is_schur;
  Verdict is_indecomposable;
};

inline constexpr std::uint64_t kScanCap = 1ull << 20;

template <class F>
EndAnalysis end_analysis(const Representation<F>& M);

// Exhaustive isomorphism test: scans Hom(M, N) for a member that is
// invertible at every vertex. Guard: dims must match (fast false otherwise)
// and over F_p the scan size p^dim Hom(M,N) must stay within 2^20, else
// throws Error(undecidable). Over Q only the trivial cases are decided.
template <class F>
bool are_isomorphic(const Representation<F>& M, const Representation<F>& N);

// --- subquotient machinery -------------------------------------------------

// Subrepresentation spanned by the given per-vertex column spans (must be
// closed under the arrow action; throws precondition_failed otherwise).
template <class F>
struct Subrep {
  Representation<F> rep;
  std::vector<Mat<F>> inclusion;  // per vertex, ambient_dim x sub_dim
};
template <class F>
Subrep<F> subrepresentation(const Representation<F>& M, const std::vector<Mat<F>>& spans);

template <class F>
struct QuotientRep {
  Representation<F> rep;
  std::vector<Mat<F>> projection;  // per vertex, quot_dim x ambient_dim
};
template <class F>
QuotientRep<F> quotient_representation(const Representation<F>& M,
                                       const std::vector<Mat<F>>& spans);

// kernel / image of a module map phi : M -> N (phi given per vertex)
template <class F>
Subrep<F> kernel_subrep(const Representation<F>& M, const Representation<F>& N,
                        const std::vector<Mat<F>>& phi);
template <class F>
std::vector<Mat<F>> image_spans(const Representation<F>& M, const Representation<F>& N,
                                const std::vector<Mat<F>>& phi);

// radical spans: rad(M)_v = sum of images of all arrows into v
template <class F>
std::vector<Mat<F>> radical_spans(const Representation<F>& M);

}  // namespace quiverlab

#endif
