#include "quiverlab/roots.hpp"

#include <algorithm>
#include <set>

namespace quiverlab {

namespace {

// edge multiplicities of the underlying graph
std::vector<std::vector<int>> edge_counts(const Quiver& q) {
  const int n = static_cast<int>(q.vertices.size());
  std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
  for (const auto& a : q.arrows) {
    const int s = q.vertex_index(a.source), t = q.vertex_index(a.target);
    ++e[s][t];
    if (s != t) ++e[t][s];
  }
  return e;
}

// s_v(d): reflect at vertex v
std::vector<int> reflect(const std::vector<std::vector<int>>& e, const std::vector<int>& d,
                         int v) {
  std::vector<int> r = d;
  int s = 0;
  for (size_t w = 0; w < d.size(); ++w)
    if (static_cast<int>(w) != v) s += e[v][w] * d[w];
  r[v] = s - d[v];
  return r;
}

void require_dynkin(const Quiver& q) {
  for (const auto& a : q.arrows)
    if (a.source == a.target) throw Error(ErrorKind::not_dynkin, "loop at '" + a.source + "'");
  for (const auto& comp : connected_components(q)) {
    if (classify_underlying_graph(comp).verdict != GraphVerdict::finite)
      throw Error(ErrorKind::not_dynkin,
                  "component containing '" + comp.vertices[0] + "' is not of finite type");
  }
}

}  // namespace

std::vector<std::vector<int>> positive_roots(const Quiver& q) {
  require_dynkin(q);
  const int n = static_cast<int>(q.vertices.size());
  const auto e = edge_counts(q);

  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int v = 0; v < n; ++v) {
    std::vector<int> ev(n, 0);
    ev[v] = 1;
    roots.insert(ev);
    frontier.push_back(std::move(ev));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& d : frontier)
      for (int v = 0; v < n; ++v) {
        auto r = reflect(e, d, v);
        if (std::any_of(r.begin(), r.end(), [](int x) { return x < 0; })) continue;
        if (roots.insert(r).second) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

namespace {

// sink-first topological order: reflecting vertices in this order keeps each
// one a sink at its turn, and a full cycle restores the orientation
std::vector<int> sink_order(const Quiver& q) {
  const int n = static_cast<int>(q.vertices.size());
  std::vector<int> outdeg(n, 0);
  for (const auto& a : q.arrows) ++outdeg[q.vertex_index(a.source)];
  std::vector<bool> used(n, false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!used[v] && outdeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) throw Error(ErrorKind::not_dynkin, "orientation has a directed cycle");
    used[pick] = true;
    order.push_back(pick);
    for (const auto& a : q.arrows)
      if (q.vertex_index(a.target) == pick && !used[q.vertex_index(a.source)])
        --outdeg[q.vertex_index(a.source)];
  }
  return order;
}

Quiver reverse_at(const Quiver& q, int v) {
  Quiver r = q;
  for (auto& a : r.arrows)
    if (r.vertex_index(a.source) == v || r.vertex_index(a.target) == v)
      std::swap(a.source, a.target);
  return r;
}

// C^-_i for a source i of M's quiver: replace M_i by the cokernel of the
// stacked map M_i -> (+) M_{t(a)} over arrows a out of i; the new arrow
// matrices into i (in the reflected quiver) are the blocks of the projection.
template <class F>
Representation<F> reflection_down(const Representation<F>& M, int v, AlgebraPtr target_alg) {
  const F& f = M.field;
  const Quiver& q = M.alg->quiver;

  std::vector<int> out_arrows;
  for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
    if (q.vertex_index(q.arrows[a].target) == v)
      throw Error(ErrorKind::precondition_failed, "reflection vertex is not a source");
    if (q.vertex_index(q.arrows[a].source) == v) out_arrows.push_back(a);
  }

  int stacked_rows = 0;
  for (int a : out_arrows) stacked_rows += M.mats[a].rows;
  Mat<F> theta = zero_mat(f, stacked_rows, M.dims[v]);
  {
    int off = 0;
    for (int a : out_arrows) {
      for (int i = 0; i < M.mats[a].rows; ++i)
        for (int j = 0; j < M.mats[a].cols; ++j) theta.at(off + i, j) = M.mats[a].at(i, j);
      off += M.mats[a].rows;
    }
  }
  const Mat<F> pi = quotient_map(f, theta, stacked_rows);

  Representation<F> N;
  N.alg = target_alg;
  N.field = f;
  N.dims = M.dims;
  N.dims[v] = pi.rows;
  N.mats.resize(q.arrows.size(), zero_mat(f, 0, 0));
  {
    int off = 0;
    for (int a : out_arrows) {
      const int u = q.vertex_index(q.arrows[a].target);
      Mat<F> block = zero_mat(f, pi.rows, M.dims[u]);
      for (int i = 0; i < pi.rows; ++i)
        for (int j = 0; j < M.dims[u]; ++j) block.at(i, j) = pi.at(i, off + j);
      N.mats[a] = std::move(block);
      off += M.dims[u];
    }
  }
  for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
    if (std::find(out_arrows.begin(), out_arrows.end(), a) == out_arrows.end())
      N.mats[a] = M.mats[a];
  return N;
}

}  // namespace

template <class F>
Representation<F> root_representation(AlgebraPtr alg, const F& f, const std::vector<int>& d) {
  const Quiver& q0 = alg->quiver;
  const int n = static_cast<int>(q0.vertices.size());
  if (!alg->relations.empty())
    throw Error(ErrorKind::precondition_failed, "reflection functors need a relation-free algebra");
  if (static_cast<int>(d.size()) != n)
    throw Error(ErrorKind::shape_mismatch, "dimension vector length");
  if (!is_connected(q0)) throw Error(ErrorKind::disconnected, "quiver must be connected");
  require_dynkin(q0);

  std::vector<long long> dl(d.begin(), d.end());
  if (tits_form(q0, dl) != 1) throw Error(ErrorKind::not_a_root, "q(d) != 1");
  for (int x : d)
    if (x < 0) throw Error(ErrorKind::not_a_root, "negative coordinate");

  const auto e = edge_counts(q0);
  const auto order = sink_order(q0);

  // forward: reflect d down to a simple, remembering quivers and vertices
  std::vector<Quiver> quivers{q0};               // quivers[j] = Q_j
  std::vector<int> picks;                        // picks[j] = vertex reflected at step j+1
  std::vector<int> cur = d;
  int m = -1;
  constexpr int kStepCap = 10000;
  for (int step = 0; step < kStepCap; ++step) {
    const int v = order[step % n];
    std::vector<int> ev(n, 0);
    ev[v] = 1;
    if (cur == ev) {
      m = step;  // d_{m} would be negative; M over quivers[m] is S(v)
      break;
    }
    cur = reflect(e, cur, v);
    if (std::any_of(cur.begin(), cur.end(), [](int x) { return x < 0; }))
      throw Error(ErrorKind::not_a_root, "reflection left the positive cone");
    picks.push_back(v);
    quivers.push_back(reverse_at(quivers.back(), v));
  }
  if (m < 0) throw Error(ErrorKind::not_a_root, "reflection sequence did not terminate");

  // backward: start with the simple over Q_m and unreflect
  AlgebraPtr cur_alg = (m == 0) ? alg : build_algebra(quivers[m], {});
  Representation<F> M = simple_rep(cur_alg, f, q0.vertices[order[m % n]]);
  for (int j = m - 1; j >= 0; --j) {
    // picks[j] is a sink of Q_j, hence a source of Q_{j+1} where M lives
    AlgebraPtr prev_alg = (j == 0) ? alg : build_algebra(quivers[j], {});
    M = reflection_down(M, picks[j], prev_alg);
  }
  if (M.dims != d) throw Error(ErrorKind::precondition_failed, "reflection bookkeeping broke");
  return M;
}

template Representation<PrimeField> root_representation<PrimeField>(AlgebraPtr, const PrimeField&,
                                                                    const std::vector<int>&);
template Representation<Rationals> root_representation<Rationals>(AlgebraPtr, const Rationals&,
                                                                  const std::vector<int>&);

}  // namespace quiverlab
