#include "quiverlab/homology.hpp"

#include <algorithm>

namespace quiverlab {

template <class F>
std::vector<int> top_dims(const Representation<F>& M) {
  const F& f = M.field;
  const auto rad = radical_spans(M);
  std::vector<int> t(M.dims.size());
  for (size_t v = 0; v < M.dims.size(); ++v) t[v] = M.dims[v] - rank_of(f, rad[v]);
  return t;
}

template <class F>
Cover<F> projective_cover(const Representation<F>& M) {
  if (M.is_zero()) throw Error(ErrorKind::zero_module, "projective cover of 0");
  const F& f = M.field;
  const auto& alg = *M.alg;
  const int nv = alg.num_vertices();
  const auto rad = radical_spans(M);

  Cover<F> out;
  out.tops.assign(nv, 0);
  std::vector<Representation<F>> parts;
  std::vector<std::pair<int, Mat<F>>> gens;  // (vertex, generator vector in M_v)
  for (int v = 0; v < nv; ++v) {
    const Mat<F> comp = complement_basis(f, rad[v], M.dims[v]);
    out.tops[v] = comp.cols;
    for (int c = 0; c < comp.cols; ++c) {
      Mat<F> g = zero_mat(f, M.dims[v], 1);
      for (int r = 0; r < M.dims[v]; ++r) g.at(r, 0) = comp.at(r, c);
      gens.emplace_back(v, std::move(g));
      parts.push_back(projective_rep(M.alg, f, alg.quiver.vertices[v]));
    }
  }
  out.proj = direct_sum(parts);

  for (int u = 0; u < nv; ++u) {
    Mat<F> e = zero_mat(f, M.dims[u], out.proj.dims[u]);
    int off = 0;
    for (const auto& [v, g] : gens) {
      const auto& idxs = alg.basis_by_pair[v][u];
      for (size_t j = 0; j < idxs.size(); ++j) {
        const Mat<F> col = mat_mul(f, path_matrix(M, alg.basis[idxs[j]]), g);
        for (int r = 0; r < M.dims[u]; ++r) e.at(r, off + static_cast<int>(j)) = col.at(r, 0);
      }
      off += static_cast<int>(idxs.size());
    }
    out.epi.push_back(std::move(e));
  }
  return out;
}

template <class F>
Resolution<F> min_resolution(const Representation<F>& M, int cap) {
  if (cap < 1) throw Error(ErrorKind::bad_parameter, "cap must be >= 1");
  if (M.is_zero()) throw Error(ErrorKind::zero_module, "resolution of 0");
  const F& f = M.field;
  Resolution<F> out;
  Representation<F> cur = M;
  std::vector<Mat<F>> prev_incl;  // syzygy -> previous term
  for (int i = 0; i <= cap; ++i) {
    const auto cov = projective_cover(cur);
    out.terms.push_back(cov.tops);
    if (i > 0) {
      std::vector<Mat<F>> d;
      for (size_t v = 0; v < prev_incl.size(); ++v)
        d.push_back(mat_mul(f, prev_incl[v], cov.epi[v]));
      out.maps.push_back(std::move(d));
    }
    const auto ker = kernel_subrep(cov.proj, cur, cov.epi);
    cur = ker.rep;
    prev_incl = ker.inclusion;
    if (cur.is_zero()) {
      out.complete = true;
      break;
    }
  }
  return out;
}

template <class F>
GlobalDim global_dimension(AlgebraPtr alg, const F& f, int cap) {
  GlobalDim out;
  out.exact = true;
  for (const auto& v : alg->quiver.vertices) {
    const auto res = min_resolution(simple_rep(alg, f, v), cap);
    if (!res.complete) return {false, cap};
    out.value = std::max(out.value, res.length());
  }
  return out;
}

template <class F>
Ext1Space<F> ext1(const Representation<F>& M, const Representation<F>& N) {
  require_compatible(M, N);
  const F& f = M.field;
  Ext1Space<F> out;
  out.source = M;
  out.target = N;
  if (M.is_zero()) {
    out.cover = zero_rep<F>(M.alg, f);
    out.syzygy = zero_rep<F>(M.alg, f);
    for (size_t v = 0; v < M.dims.size(); ++v) {
      out.inclusion.push_back(zero_mat(f, 0, 0));
      out.epi.push_back(zero_mat(f, 0, 0));
    }
    return out;
  }

  const auto cov = projective_cover(M);
  const auto ker = kernel_subrep(cov.proj, M, cov.epi);
  out.cover = cov.proj;
  out.epi = cov.epi;
  out.syzygy = ker.rep;
  out.inclusion = ker.inclusion;
  if (out.syzygy.is_zero() || N.is_zero()) return out;  // M projective or nothing to extend by

  const HomSpace<F> homKN = hom_basis(out.syzygy, N);
  if (homKN.dim() == 0) return out;
  const HomSpace<F> homPN = hom_basis(out.cover, N);

  // flattened image of the restriction map Hom(P_0, N) -> Hom(K, N)
  int flat_rows = 0;
  for (size_t v = 0; v < M.dims.size(); ++v) flat_rows += N.dims[v] * out.syzygy.dims[v];
  Mat<F> W = zero_mat(f, flat_rows, 0);
  for (const auto& psi : homPN.basis) {
    std::vector<Mat<F>> restricted;
    for (size_t v = 0; v < M.dims.size(); ++v)
      restricted.push_back(mat_mul(f, psi[v], out.inclusion[v]));
    W = hconcat(W, flatten_maps(f, restricted));
  }
  int base_rank = rank_of(f, W);
  out.dim = homKN.dim() - base_rank;

  // pick hom basis members independent of the restriction image
  for (int b = 0; b < homKN.dim() && static_cast<int>(out.cocycles.size()) < out.dim; ++b) {
    const Mat<F> cand = hconcat(W, flatten_maps(f, homKN.basis[b]));
    const int r = rank_of(f, cand);
    if (r > base_rank) {
      out.cocycles.push_back(homKN.basis[b]);
      W = cand;
      base_rank = r;
    }
  }
  return out;
}

template <class F>
ShortExact<F> middle_term(const Ext1Space<F>& ext, const std::vector<typename F::Elt>& coeffs) {
  const F& f = ext.source.field;
  if (coeffs.size() > ext.cocycles.size())
    throw Error(ErrorKind::bad_parameter, "more coefficients than cocycles");
  const auto& M = ext.source;
  const auto& N = ext.target;
  const auto& K = ext.syzygy;

  // phi = sum coeffs[i] * cocycles[i] : K -> N
  std::vector<Mat<F>> phi;
  for (size_t v = 0; v < M.dims.size(); ++v) phi.push_back(zero_mat(f, N.dims[v], K.dims[v]));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (f.is_zero(coeffs[i])) continue;
    for (size_t v = 0; v < phi.size(); ++v)
      phi[v] = mat_add(f, phi[v], mat_scale(f, coeffs[i], ext.cocycles[i][v]));
  }

  // pushout along K >-> P_0: quotient N (+) P_0 by { (phi(k), -incl(k)) }
  const Representation<F> amb = direct_sum<F>({N, ext.cover});
  std::vector<Mat<F>> spans;
  for (size_t v = 0; v < M.dims.size(); ++v)
    spans.push_back(vconcat(phi[v], mat_neg(f, ext.inclusion[v])));
  auto quot = quotient_representation(amb, spans);

  ShortExact<F> seq;
  seq.middle = quot.rep;
  for (size_t v = 0; v < M.dims.size(); ++v) {
    const auto& pi = quot.projection[v];
    Mat<F> in = zero_mat(f, pi.rows, N.dims[v]);
    for (int i = 0; i < pi.rows; ++i)
      for (int j = 0; j < N.dims[v]; ++j) in.at(i, j) = pi.at(i, j);
    seq.inject.push_back(std::move(in));
    // the projection to M solves s * pi = [0 | epi]
    const Mat<F> zero_epi = hconcat(zero_mat(f, M.dims[v], N.dims[v]), ext.epi[v]);
    const auto st = solve(f, transpose(pi), transpose(zero_epi));
    if (!st) throw Error(ErrorKind::precondition_failed, "pushout projection did not factor");
    seq.project.push_back(transpose(*st));
  }
  return seq;
}

template <class F>
int ext_dim(const Representation<F>& M, const Representation<F>& N, int i) {
  require_compatible(M, N);
  switch (i) {
    case 0:
      return hom_basis(M, N).dim();
    case 1:
      return ext1(M, N).dim;
    case 2: {
      if (M.is_zero() || N.is_zero()) return 0;
      const auto cov = projective_cover(M);
      const auto omega = kernel_subrep(cov.proj, M, cov.epi).rep;
      if (omega.is_zero()) return 0;
      return ext1(omega, N).dim;
    }
    default:
      throw Error(ErrorKind::bad_parameter, "ext_dim supports i = 0, 1, 2");
  }
}

std::vector<std::vector<long long>> euler_matrix(const BoundQuiverAlgebra& alg) {
  const int n = alg.num_vertices();
  const Rationals f;
  Mat<Rationals> C = zero_mat(f, n, n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) C.at(v, w) = mpq_class(alg.cartan[v][w]);
  if (!is_invertible(f, C))
    throw Error(ErrorKind::precondition_failed, "Cartan matrix is singular");
  const Mat<Rationals> Einv = transpose(inverse(f, C));
  std::vector<std::vector<long long>> E(n, std::vector<long long>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      const mpq_class& x = Einv.at(v, w);
      if (x.get_den() != 1)
        throw Error(ErrorKind::precondition_failed, "Cartan inverse is not integral");
      E[v][w] = static_cast<long long>(x.get_num().get_si());
    }
  return E;
}

long long euler_pairing(const BoundQuiverAlgebra& alg, const std::vector<int>& dM,
                        const std::vector<int>& dN) {
  const auto E = euler_matrix(alg);
  const int n = alg.num_vertices();
  if (static_cast<int>(dM.size()) != n || static_cast<int>(dN.size()) != n)
    throw Error(ErrorKind::shape_mismatch, "dimension vector length");
  long long s = 0;
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) s += static_cast<long long>(dM[v]) * E[v][w] * dN[w];
  return s;
}

#define QUIVERLAB_INSTANTIATE_HOMOLOGY(F)                                                     \
  template std::vector<int> top_dims<F>(const Representation<F>&);                           \
  template Cover<F> projective_cover<F>(const Representation<F>&);                           \
  template Resolution<F> min_resolution<F>(const Representation<F>&, int);                   \
  template GlobalDim global_dimension<F>(AlgebraPtr, const F&, int);                         \
  template Ext1Space<F> ext1<F>(const Representation<F>&, const Representation<F>&);         \
  template ShortExact<F> middle_term<F>(const Ext1Space<F>&,                                 \
                                        const std::vector<typename F::Elt>&);                \
  template int ext_dim<F>(const Representation<F>&, const Representation<F>&, int);

QUIVERLAB_INSTANTIATE_HOMOLOGY(PrimeField)
QUIVERLAB_INSTANTIATE_HOMOLOGY(Rationals)

}  // namespace quiverlab
