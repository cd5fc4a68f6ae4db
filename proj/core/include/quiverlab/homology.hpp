#ifndef QUIVERLAB_HOMOLOGY_HPP
#define QUIVERLAB_HOMOLOGY_HPP

#include "quiverlab/rep.hpp"

namespace quiverlab {

// Projective cover P -> M: one copy of P(v) per top generator at v, the epi
// sends each generator path to its image in M. Throws zero_module on M = 0.
template <class F>
struct Cover {
  Representation<F> proj;
  std::vector<int> tops;       // multiplicity of P(v), by vertex
  std::vector<Mat<F>> epi;     // per vertex, M_v x P_v
};

template <class F>
std::vector<int> top_dims(const Representation<F>& M);

template <class F>
Cover<F> projective_cover(const Representation<F>& M);

// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0.
// terms[i][v] = multiplicity of P(v) in P_i; maps[i] = the per-vertex
// matrices of P_{i+1} -> P_i. complete means the last kernel vanished, so
// pd M = terms.size() - 1; otherwise pd M is at least the cap.
template <class F>
struct Resolution {
  std::vector<std::vector<int>> terms;
  std::vector<std::vector<Mat<F>>> maps;
  bool complete = false;

  int length() const { return static_cast<int>(terms.size()) - 1; }
};

template <class F>
Resolution<F> min_resolution(const Representation<F>& M, int cap = 10);

// max projective dimension over the simple modules; exact == false means some
// simple did not resolve within the cap, so gldim is at least `value` (= cap)
struct GlobalDim {
  bool exact = false;
  int value = 0;
};

template <class F>
GlobalDim global_dimension(AlgebraPtr alg, const F& f, int cap = 10);

// A short exact sequence 0 -> N -> E -> M -> 0 realizing an extension class.
template <class F>
struct ShortExact {
  Representation<F> middle;
  std::vector<Mat<F>> inject;   // N -> E, per vertex
  std::vector<Mat<F>> project;  // E -> M, per vertex
};

// Ext^1(M, N) presented through one projective cover step K >-> P_0 ->> M:
// the space is coker(Hom(P_0, N) -> Hom(K, N)), and `cocycles` is a basis of
// a complement of the restriction image, so any class is a coefficient
// vector over it. middle_term() materializes a class as a pushout.
template <class F>
struct Ext1Space {
  Representation<F> source;  // M
  Representation<F> target;  // N
  int dim = 0;

  Representation<F> cover;                     // P_0
  Representation<F> syzygy;                    // K
  std::vector<Mat<F>> inclusion;               // K -> P_0
  std::vector<Mat<F>> epi;                     // P_0 -> M
  std::vector<std::vector<Mat<F>>> cocycles;   // each: K -> N, per vertex
};

template <class F>
Ext1Space<F> ext1(const Representation<F>& M, const Representation<F>& N);

// coeffs may be shorter than dim (missing entries are zero); the zero class
// gives E isomorphic to M (+) N
template <class F>
ShortExact<F> middle_term(const Ext1Space<F>& ext,
                          const std::vector<typename F::Elt>& coeffs);

// dim Ext^i(M, N) for i = 0, 1, 2 (i = 2 via the first syzygy)
template <class F>
int ext_dim(const Representation<F>& M, const Representation<F>& N, int i);

// Euler form matrix E = (C^{-1})^T of the Cartan matrix, so that
// <dM, dN> = dM^T E dN = sum_i (-1)^i dim Ext^i(M, N) when gldim is finite.
// Throws when the Cartan matrix is singular or its inverse is not integral.
std::vector<std::vector<long long>> euler_matrix(const BoundQuiverAlgebra& alg);

long long euler_pairing(const BoundQuiverAlgebra& alg, const std::vector<int>& dM,
                        const std::vector<int>& dN);

}  // namespace quiverlab

#endif
