#include "quiverlab/rep.hpp"

#include <algorithm>
#include <map>

namespace quiverlab {

template <class F>
Representation<F> zero_rep(AlgebraPtr alg, const F& f) {
  Representation<F> M;
  M.alg = alg;
  M.field = f;
  M.dims.assign(alg->num_vertices(), 0);
  for (int a = 0; a < alg->num_arrows(); ++a) M.mats.push_back(zero_mat(f, 0, 0));
  return M;
}

template <class F>
Representation<F> simple_rep(AlgebraPtr alg, const F& f, const std::string& vertex) {
  const int v = alg->quiver.vertex_index(vertex);
  if (v < 0) throw Error(ErrorKind::no_such_vertex, "'" + vertex + "'");
  Representation<F> M = zero_rep(alg, f);
  M.dims[v] = 1;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const int s = alg->quiver.vertex_index(alg->quiver.arrows[a].source);
    const int t = alg->quiver.vertex_index(alg->quiver.arrows[a].target);
    M.mats[a] = zero_mat(f, M.dims[t], M.dims[s]);
  }
  return M;
}

template <class F>
Representation<F> projective_rep(AlgebraPtr alg, const F& f, const std::string& vertex) {
  const int v = alg->quiver.vertex_index(vertex);
  if (v < 0) throw Error(ErrorKind::no_such_vertex, "'" + vertex + "'");
  const int nv = alg->num_vertices();

  // basis of P(v) at u: paths v -> u, in algebra basis order
  std::vector<std::vector<int>> pb(nv);
  std::vector<std::map<int, int>> pos(nv);  // basis index -> coordinate
  for (int u = 0; u < nv; ++u) {
    pb[u] = alg->basis_by_pair[v][u];
    for (size_t k = 0; k < pb[u].size(); ++k) pos[u][pb[u][k]] = static_cast<int>(k);
  }

  Representation<F> P;
  P.alg = alg;
  P.field = f;
  P.dims.assign(nv, 0);
  for (int u = 0; u < nv; ++u) P.dims[u] = static_cast<int>(pb[u].size());
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const int s = alg->quiver.vertex_index(alg->quiver.arrows[a].source);
    const int t = alg->quiver.vertex_index(alg->quiver.arrows[a].target);
    Mat<F> m = zero_mat(f, P.dims[t], P.dims[s]);
    for (size_t j = 0; j < pb[s].size(); ++j) {
      const PathWord& w = alg->basis[pb[s][j]];
      PathWord ext;
      ext.arrows.push_back(alg->quiver.arrows[a].name);
      ext.arrows.insert(ext.arrows.end(), w.arrows.begin(), w.arrows.end());
      const int bi = alg->basis_index(ext);
      if (bi >= 0) m.at(pos[t].at(bi), static_cast<int>(j)) = f.one();
    }
    P.mats.push_back(std::move(m));
  }
  return P;
}

template <class F>
Representation<F> direct_sum(const std::vector<Representation<F>>& parts) {
  if (parts.empty()) throw Error(ErrorKind::bad_parameter, "direct sum of nothing");
  Representation<F> M = parts[0];
  for (size_t k = 1; k < parts.size(); ++k) {
    require_compatible(M, parts[k]);
    for (size_t v = 0; v < M.dims.size(); ++v) M.dims[v] += parts[k].dims[v];
  }
  const F& f = M.field;
  for (int a = 0; a < M.alg->num_arrows(); ++a) {
    std::vector<Mat<F>> blocks;
    for (const auto& p : parts) blocks.push_back(p.mats[a]);
    M.mats[a] = block_diag(f, blocks);
  }
  return M;
}

template <class F>
Representation<F> explicit_rep(AlgebraPtr alg, const F& f, std::vector<int> dims,
                               std::vector<Mat<F>> mats) {
  if (static_cast<int>(dims.size()) != alg->num_vertices())
    throw Error(ErrorKind::shape_mismatch, "dimension vector length");
  if (static_cast<int>(mats.size()) != alg->num_arrows())
    throw Error(ErrorKind::shape_mismatch, "one matrix per arrow required");
  for (int d : dims)
    if (d < 0) throw Error(ErrorKind::shape_mismatch, "negative dimension");
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const int s = alg->quiver.vertex_index(alg->quiver.arrows[a].source);
    const int t = alg->quiver.vertex_index(alg->quiver.arrows[a].target);
    if (mats[a].rows != dims[t] || mats[a].cols != dims[s])
      throw Error(ErrorKind::shape_mismatch,
                  "matrix for arrow '" + alg->quiver.arrows[a].name + "' should be " +
                      std::to_string(dims[t]) + "x" + std::to_string(dims[s]));
  }
  Representation<F> M;
  M.alg = alg;
  M.field = f;
  M.dims = std::move(dims);
  M.mats = std::move(mats);
  for (const auto& r : alg->relations)
    if (!mat_is_zero(f, path_matrix(M, r)))
      throw Error(ErrorKind::relation_violated, "relation " + path_str(r) + " does not vanish");
  return M;
}

template <class F>
Mat<F> path_matrix(const Representation<F>& M, const PathWord& w) {
  const F& f = M.field;
  if (w.is_stationary()) {
    const int v = M.alg->quiver.vertex_index(w.vertex);
    if (v < 0) throw Error(ErrorKind::no_such_vertex, "'" + w.vertex + "'");
    return identity_mat(f, M.dims[v]);
  }
  const int a0 = M.alg->quiver.arrow_index(w.arrows[0]);
  if (a0 < 0) throw Error(ErrorKind::malformed_relation, "unknown arrow '" + w.arrows[0] + "'");
  Mat<F> acc = M.mats[a0];
  for (size_t i = 1; i < w.arrows.size(); ++i) {
    const int ai = M.alg->quiver.arrow_index(w.arrows[i]);
    if (ai < 0) throw Error(ErrorKind::malformed_relation, "unknown arrow '" + w.arrows[i] + "'");
    acc = mat_mul(f, acc, M.mats[ai]);
  }
  return acc;
}

template <class F>
bool satisfies_relations(const Representation<F>& M) {
  for (const auto& r : M.alg->relations)
    if (!mat_is_zero(M.field, path_matrix(M, r))) return false;
  return true;
}

template <class F>
void require_compatible(const Representation<F>& M, const Representation<F>& N) {
  if (M.alg.get() != N.alg.get() && !(*M.alg == *N.alg))
    throw Error(ErrorKind::algebra_mismatch, "representations over different algebras");
  if (M.field != N.field) throw Error(ErrorKind::field_mismatch, "representations over different fields");
}

template <class F>
Mat<F> flatten_maps(const F& f, const std::vector<Mat<F>>& maps) {
  int total = 0;
  for (const auto& m : maps) total += m.rows * m.cols;
  Mat<F> col = zero_mat(f, total, 1);
  int off = 0;
  for (const auto& m : maps)
    for (const auto& x : m.a) col.at(off++, 0) = x;
  return col;
}

template <class F>
std::vector<Mat<F>> unflatten_maps(const F& f, const Mat<F>& column, const std::vector<int>& rows,
                                   const std::vector<int>& cols) {
  std::vector<Mat<F>> out;
  int off = 0;
  for (size_t v = 0; v < rows.size(); ++v) {
    Mat<F> m = zero_mat(f, rows[v], cols[v]);
    for (auto& x : m.a) x = column.at(off++, 0);
    out.push_back(std::move(m));
  }
  if (off != column.rows) throw Error(ErrorKind::shape_mismatch, "unflatten size");
  return out;
}

template <class F>
HomSpace<F> hom_basis(const Representation<F>& M, const Representation<F>& N) {
  require_compatible(M, N);
  const F& f = M.field;
  const auto& alg = *M.alg;
  const int nv = alg.num_vertices();

  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + N.dims[v] * M.dims[v];
  const int unknowns = off[nv];

  int eqs = 0;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const int s = alg.quiver.vertex_index(alg.quiver.arrows[a].source);
    const int t = alg.quiver.vertex_index(alg.quiver.arrows[a].target);
    eqs += N.dims[t] * M.dims[s];
  }

  Mat<F> sys = zero_mat(f, eqs, unknowns);
  int row = 0;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const int s = alg.quiver.vertex_index(alg.quiver.arrows[a].source);
    const int t = alg.quiver.vertex_index(alg.quiver.arrows[a].target);
    // (phi_t M_a - N_a phi_s)[i][j] = 0  for i < N.dims[t], j < M.dims[s]
    for (int i = 0; i < N.dims[t]; ++i)
      for (int j = 0; j < M.dims[s]; ++j) {
        for (int k = 0; k < M.dims[t]; ++k)
          sys.at(row, off[t] + i * M.dims[t] + k) =
              f.add(sys.at(row, off[t] + i * M.dims[t] + k), M.mats[a].at(k, j));
        for (int k = 0; k < N.dims[s]; ++k)
          sys.at(row, off[s] + k * M.dims[s] + j) =
              f.sub(sys.at(row, off[s] + k * M.dims[s] + j), N.mats[a].at(i, k));
        ++row;
      }
  }

  const auto red = reduce(f, sys);
  HomSpace<F> out;
  std::vector<int> rows_(nv), cols_(nv);
  for (int v = 0; v < nv; ++v) rows_[v] = N.dims[v], cols_[v] = M.dims[v];
  for (int b = 0; b < red.null_basis.cols; ++b) {
    Mat<F> col = zero_mat(f, unknowns, 1);
    for (int i = 0; i < unknowns; ++i) col.at(i, 0) = red.null_basis.at(i, b);
    out.basis.push_back(unflatten_maps(f, col, rows_, cols_));
  }
  return out;
}

namespace {

template <class F>
std::vector<Mat<F>> compose_maps(const F& f, const std::vector<Mat<F>>& g,
                                 const std::vector<Mat<F>>& h) {
  std::vector<Mat<F>> out;
  for (size_t v = 0; v < g.size(); ++v) out.push_back(mat_mul(f, g[v], h[v]));
  return out;
}

template <class F>
bool maps_invertible(const F& f, const std::vector<Mat<F>>& g) {
  for (const auto& m : g)
    if (!is_invertible(f, m)) return false;
  return true;
}

// odometer over F_p^n, deterministic order; calls fn with each nonzero vector
template <class Fn>
void for_each_coeff_vector(std::uint64_t p, int n, Fn&& fn) {
  std::vector<std::uint64_t> c(n, 0);
  for (;;) {
    int i = 0;
    while (i < n) {
      if (++c[i] < p) break;
      c[i] = 0;
      ++i;
    }
    if (i == n) return;  // wrapped around to zero
    fn(c);
  }
}

template <class F>
std::vector<Mat<F>> combine(const F& f, const HomSpace<F>& H,
                            const std::vector<typename F::Elt>& coeff) {
  std::vector<Mat<F>> acc;
  for (size_t v = 0; v < H.basis[0].size(); ++v)
    acc.push_back(zero_mat(f, H.basis[0][v].rows, H.basis[0][v].cols));
  for (size_t i = 0; i < H.basis.size(); ++i) {
    if (f.is_zero(coeff[i])) continue;
    for (size_t v = 0; v < acc.size(); ++v)
      acc[v] = mat_add(f, acc[v], mat_scale(f, coeff[i], H.basis[i][v]));
  }
  return acc;
}

// p^e with saturation
inline std::uint64_t pow_sat(std::uint64_t p, int e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > cap / p) return cap + 1;
    r *= p;
  }
  return r;
}

}  // namespace

template <class F>
EndAnalysis end_analysis(const Representation<F>& M) {
  const F& f = M.field;
  EndAnalysis out;
  if (M.is_zero()) {
    out.is_schur = Verdict::of(false);
    out.is_indecomposable = Verdict::of(false);
    return out;
  }
  const HomSpace<F> H = hom_basis(M, M);
  const int e = H.dim();
  out.dim_end = e;
  out.is_brick = (e == 1);
  if (e == 1) {
    // End = k id, a division ring, and M cannot split
    out.is_schur = Verdict::of(true);
    out.is_indecomposable = Verdict::of(true);
    return out;
  }

  // structure constants: express phi_i phi_j in the hom basis
  std::vector<Mat<F>> flat;
  for (const auto& b : H.basis) flat.push_back(flatten_maps(f, b));
  Mat<F> B = flat[0];
  for (int i = 1; i < e; ++i) B = hconcat(B, flat[i]);
  Mat<F> prods = zero_mat(f, B.rows, e * e);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      const auto pij = flatten_maps(f, compose_maps(f, H.basis[i], H.basis[j]));
      for (int r = 0; r < B.rows; ++r) prods.at(r, i * e + j) = pij.at(r, 0);
    }
  const auto C = solve(f, B, prods);
  if (!C) throw Error(ErrorKind::precondition_failed, "endomorphism space not closed");

  // left regular representation L_i[k][j] = coefficient of phi_k in phi_i phi_j
  std::vector<Mat<F>> L;
  for (int i = 0; i < e; ++i) {
    Mat<F> Li = zero_mat(f, e, e);
    for (int k = 0; k < e; ++k)
      for (int j = 0; j < e; ++j) Li.at(k, j) = C->at(k, i * e + j);
    L.push_back(std::move(Li));
  }

  // identity endomorphism in hom coordinates
  std::vector<Mat<F>> id_maps;
  for (size_t v = 0; v < M.dims.size(); ++v) id_maps.push_back(identity_mat(f, M.dims[v]));
  const auto id_coords = solve(f, B, flatten_maps(f, id_maps));
  if (!id_coords) throw Error(ErrorKind::precondition_failed, "identity missing from End");

  // indecomposability: End local <=> End/rad has no idempotent besides 0, 1
  bool radical_valid = true;
  std::string radical_reason;
  if constexpr (F::is_finite) {
    if (f.modulus() <= static_cast<std::uint64_t>(e)) {
      radical_valid = false;
      radical_reason = "trace-form radical needs p > dim End";
    }
  }
  if (radical_valid) {
    Mat<F> G = zero_mat(f, e, e);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j) {
        auto t = f.zero();
        for (int k = 0; k < e; ++k)
          for (int m = 0; m < e; ++m) t = f.add(t, f.mul(L[i].at(k, m), L[j].at(m, k)));
        G.at(i, j) = t;
      }
    const auto rad = reduce(f, G).null_basis;  // e x r
    const int q = e - rad.cols;
    if (q == 1) {
      out.is_indecomposable = Verdict::of(true);
    } else {
      Mat<F> comp = complement_basis(f, rad, e);  // e x q
      Mat<F> basis_full = rad.cols ? hconcat(comp, rad) : comp;
      // quotient structure constants and the image of 1
      auto quotient_coords = [&](const Mat<F>& end_vec) {
        const auto y = solve(f, basis_full, end_vec);
        Mat<F> c = zero_mat(f, q, 1);
        for (int i = 0; i < q; ++i) c.at(i, 0) = y->at(i, 0);
        return c;
      };
      std::vector<Mat<F>> qprod(q * q);  // products of complement basis vectors, in quotient coords
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
          // complement basis vectors are standard e_k's; find their indices
          int bi = -1, bj = -1;
          for (int r = 0; r < e; ++r) {
            if (!f.is_zero(comp.at(r, i))) bi = r;
            if (!f.is_zero(comp.at(r, j))) bj = r;
          }
          Mat<F> pv = zero_mat(f, e, 1);
          for (int k = 0; k < e; ++k) pv.at(k, 0) = C->at(k, bi * e + bj);
          qprod[i * q + j] = quotient_coords(pv);
        }
      const Mat<F> one_q = quotient_coords(*id_coords);
      if constexpr (F::is_finite) {
        const std::uint64_t p = f.modulus();
        if (pow_sat(p, q, kScanCap) > kScanCap) {
          out.is_indecomposable = Verdict::not_known("idempotent scan cap exceeded");
        } else {
          bool found = false;
          for_each_coeff_vector(p, q, [&](const std::vector<std::uint64_t>& c) {
            if (found) return;
            // x * x in quotient coordinates
            Mat<F> sq = zero_mat(f, q, 1);
            for (int i = 0; i < q; ++i) {
              if (f.is_zero(c[i])) continue;
              for (int j = 0; j < q; ++j) {
                if (f.is_zero(c[j])) continue;
                const auto cij = f.mul(c[i], c[j]);
                for (int k = 0; k < q; ++k)
                  sq.at(k, 0) = f.add(sq.at(k, 0), f.mul(cij, qprod[i * q + j].at(k, 0)));
              }
            }
            bool is_idem = true, is_zero = true, is_one = true;
            for (int k = 0; k < q; ++k) {
              if (sq.at(k, 0) != c[k]) is_idem = false;
              if (!f.is_zero(c[k])) is_zero = false;
              if (c[k] != one_q.at(k, 0)) is_one = false;
            }
            // 0 and 1 are idempotent in any quotient; only others split M
            if (is_idem && !is_zero && !is_one) found = true;
          });
          out.is_indecomposable = Verdict::of(!found);
        }
      } else {
        out.is_indecomposable = Verdict::not_known("idempotent scan requires a finite field");
      }
    }
  } else if constexpr (F::is_finite) {
    // No radical available, but locality needs no quotient: scan all of End
    // for an idempotent besides 0 and 1 when the algebra is small enough.
    const std::uint64_t p = f.modulus();
    if (pow_sat(p, e, kScanCap) > kScanCap) {
      out.is_indecomposable = Verdict::not_known(radical_reason);
    } else {
      bool found = false;
      for_each_coeff_vector(p, e, [&](const std::vector<std::uint64_t>& c) {
        if (found) return;
        std::vector<typename F::Elt> sq(e, f.zero());
        for (int i = 0; i < e; ++i) {
          if (f.is_zero(c[i])) continue;
          for (int j = 0; j < e; ++j) {
            if (f.is_zero(c[j])) continue;
            const auto cij = f.mul(c[i], c[j]);
            for (int k = 0; k < e; ++k) sq[k] = f.add(sq[k], f.mul(cij, C->at(k, i * e + j)));
          }
        }
        bool is_idem = true, is_zero = true, is_one = true;
        for (int k = 0; k < e; ++k) {
          if (sq[k] != c[k]) is_idem = false;
          if (!f.is_zero(c[k])) is_zero = false;
          if (c[k] != id_coords->at(k, 0)) is_one = false;
        }
        if (is_idem && !is_zero && !is_one) found = true;
      });
      out.is_indecomposable = Verdict::of(!found);
    }
  } else {
    out.is_indecomposable = Verdict::not_known(radical_reason);
  }

  // Schur property by exhaustive scan
  if constexpr (F::is_finite) {
    const std::uint64_t p = f.modulus();
    if (pow_sat(p, e, kScanCap) > kScanCap) {
      if (out.is_indecomposable.value == Verdict::no)
        out.is_schur = Verdict::of(false);
      else
        out.is_schur = Verdict::not_known("endomorphism scan cap exceeded");
    } else {
      bool all_inv = true;
      for_each_coeff_vector(p, e, [&](const std::vector<std::uint64_t>& c) {
        if (!all_inv) return;
        std::vector<typename F::Elt> coeff(c.begin(), c.end());
        if (!maps_invertible(f, combine(f, H, coeff))) all_inv = false;
      });
      out.is_schur = Verdict::of(all_inv);
    }
  } else {
    if (out.is_indecomposable.value == Verdict::no)
      out.is_schur = Verdict::of(false);
    else
      out.is_schur = Verdict::not_known("endomorphism scan requires a finite field");
  }
  if (out.is_schur.value == Verdict::yes && !out.is_indecomposable.decided())
    out.is_indecomposable = Verdict::of(true);
  return out;
}

template <class F>
bool are_isomorphic(const Representation<F>& M, const Representation<F>& N) {
  require_compatible(M, N);
  const F& f = M.field;
  if (M.dims != N.dims) return false;
  if (M.is_zero()) return true;
  // per-arrow ranks are isomorphism invariants; cheap rejection
  for (size_t a = 0; a < M.mats.size(); ++a)
    if (rank_of(f, M.mats[a]) != rank_of(f, N.mats[a])) return false;
  const HomSpace<F> H = hom_basis(M, N);
  if (H.dim() == 0) return false;
  if (H.dim() == 1) return maps_invertible(f, H.basis[0]);
  if constexpr (F::is_finite) {
    const std::uint64_t p = f.modulus();
    if (pow_sat(p, H.dim(), kScanCap) > kScanCap)
      throw Error(ErrorKind::undecidable,
                  "isomorphism scan too large: p^" + std::to_string(H.dim()));
    bool found = false;
    for_each_coeff_vector(p, H.dim(), [&](const std::vector<std::uint64_t>& c) {
      if (found) return;
      std::vector<typename F::Elt> coeff(c.begin(), c.end());
      if (maps_invertible(f, combine(f, H, coeff))) found = true;
    });
    return found;
  } else {
    throw Error(ErrorKind::undecidable, "isomorphism scan requires a finite field");
  }
}

template <class F>
Subrep<F> subrepresentation(const Representation<F>& M, const std::vector<Mat<F>>& spans) {
  const F& f = M.field;
  const auto& alg = *M.alg;
  Subrep<F> out;
  out.rep.alg = M.alg;
  out.rep.field = f;
  out.rep.dims.assign(alg.num_vertices(), 0);
  for (int v = 0; v < alg.num_vertices(); ++v) {
    if (spans[v].rows != M.dims[v]) throw Error(ErrorKind::shape_mismatch, "span ambient dim");
    out.inclusion.push_back(column_space_basis(f, spans[v]));
    out.rep.dims[v] = out.inclusion[v].cols;
  }
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const int s = alg.quiver.vertex_index(alg.quiver.arrows[a].source);
    const int t = alg.quiver.vertex_index(alg.quiver.arrows[a].target);
    const auto X = solve(f, out.inclusion[t], mat_mul(f, M.mats[a], out.inclusion[s]));
    if (!X)
      throw Error(ErrorKind::precondition_failed,
                  "spans not closed under arrow '" + alg.quiver.arrows[a].name + "'");
    out.rep.mats.push_back(*X);
  }
  return out;
}

template <class F>
QuotientRep<F> quotient_representation(const Representation<F>& M,
                                       const std::vector<Mat<F>>& spans) {
  const F& f = M.field;
  const auto& alg = *M.alg;
  QuotientRep<F> out;
  out.rep.alg = M.alg;
  out.rep.field = f;
  out.rep.dims.assign(alg.num_vertices(), 0);
  for (int v = 0; v < alg.num_vertices(); ++v) {
    if (spans[v].rows != M.dims[v]) throw Error(ErrorKind::shape_mismatch, "span ambient dim");
    out.projection.push_back(quotient_map(f, spans[v], M.dims[v]));
    out.rep.dims[v] = out.projection[v].rows;
  }
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const int s = alg.quiver.vertex_index(alg.quiver.arrows[a].source);
    const int t = alg.quiver.vertex_index(alg.quiver.arrows[a].target);
    // X pi_s = pi_t M_a
    const auto Xt = solve(f, transpose(out.projection[s]),
                          transpose(mat_mul(f, out.projection[t], M.mats[a])));
    if (!Xt)
      throw Error(ErrorKind::precondition_failed,
                  "spans not invariant under arrow '" + alg.quiver.arrows[a].name + "'");
    out.rep.mats.push_back(transpose(*Xt));
  }
  return out;
}

template <class F>
Subrep<F> kernel_subrep(const Representation<F>& M, const Representation<F>& N,
                        const std::vector<Mat<F>>& phi) {
  const F& f = M.field;
  std::vector<Mat<F>> spans;
  for (size_t v = 0; v < M.dims.size(); ++v) spans.push_back(reduce(f, phi[v]).null_basis);
  return subrepresentation(M, spans);
}

template <class F>
std::vector<Mat<F>> image_spans(const Representation<F>& M, const Representation<F>& N,
                                const std::vector<Mat<F>>& phi) {
  (void)M;
  std::vector<Mat<F>> spans;
  for (size_t v = 0; v < N.dims.size(); ++v) spans.push_back(phi[v]);
  return spans;
}

template <class F>
std::vector<Mat<F>> radical_spans(const Representation<F>& M) {
  const F& f = M.field;
  const auto& alg = *M.alg;
  std::vector<Mat<F>> spans;
  for (int v = 0; v < alg.num_vertices(); ++v) spans.push_back(zero_mat(f, M.dims[v], 0));
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const int t = alg.quiver.vertex_index(alg.quiver.arrows[a].target);
    spans[t] = hconcat(spans[t], M.mats[a]);
  }
  return spans;
}

#define QUIVERLAB_INSTANTIATE_REP(F)                                                           \
  template Representation<F> zero_rep<F>(AlgebraPtr, const F&);                                \
  template Representation<F> simple_rep<F>(AlgebraPtr, const F&, const std::string&);          \
  template Representation<F> projective_rep<F>(AlgebraPtr, const F&, const std::string&);      \
  template Representation<F> direct_sum<F>(const std::vector<Representation<F>>&);             \
  template Representation<F> explicit_rep<F>(AlgebraPtr, const F&, std::vector<int>,           \
                                             std::vector<Mat<F>>);                             \
  template Mat<F> path_matrix<F>(const Representation<F>&, const PathWord&);                   \
  template bool satisfies_relations<F>(const Representation<F>&);                              \
  template void require_compatible<F>(const Representation<F>&, const Representation<F>&);     \
  template Mat<F> flatten_maps<F>(const F&, const std::vector<Mat<F>>&);                       \
  template std::vector<Mat<F>> unflatten_maps<F>(const F&, const Mat<F>&,                      \
                                                 const std::vector<int>&,                      \
                                                 const std::vector<int>&);                     \
  template HomSpace<F> hom_basis<F>(const Representation<F>&, const Representation<F>&);       \
  template EndAnalysis end_analysis<F>(const Representation<F>&);                              \
  template bool are_isomorphic<F>(const Representation<F>&, const Representation<F>&);         \
  template Subrep<F> subrepresentation<F>(const Representation<F>&, const std::vector<Mat<F>>&); \
  template QuotientRep<F> quotient_representation<F>(const Representation<F>&,                 \
                                                     const std::vector<Mat<F>>&);              \
  template Subrep<F> kernel_subrep<F>(const Representation<F>&, const Representation<F>&,      \
                                      const std::vector<Mat<F>>&);                             \
  template std::vector<Mat<F>> image_spans<F>(const Representation<F>&,                        \
                                              const Representation<F>&,                        \
                                              const std::vector<Mat<F>>&);                     \
  template std::vector<Mat<F>> radical_spans<F>(const Representation<F>&);

QUIVERLAB_INSTANTIATE_REP(PrimeField)
QUIVERLAB_INSTANTIATE_REP(Rationals)

}  // namespace quiverlab
