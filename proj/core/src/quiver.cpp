#include "quiverlab/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <gmpxx.h>

#include "quiverlab/matrix.hpp"

namespace quiverlab {

int Quiver::vertex_index(const std::string& v) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& a) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == a) return static_cast<int>(i);
  return -1;
}

namespace {

bool bad_token(const std::string& s) {
  if (s.empty()) return true;
  for (char c : s)
    if (c == ' ' || c == '\t' || c == '*' || c == ':' || c == '=') return true;
  return false;
}

}  // namespace

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (bad_token(v)) throw Error(ErrorKind::bad_parameter, "bad vertex id '" + v + "'");
    if (!seen.insert(v).second)
      throw Error(ErrorKind::bad_parameter, "duplicate vertex id '" + v + "'");
  }
  std::set<std::string> aseen;
  for (const auto& a : arrows) {
    if (bad_token(a.name)) throw Error(ErrorKind::bad_parameter, "bad arrow name '" + a.name + "'");
    if (!aseen.insert(a.name).second)
      throw Error(ErrorKind::bad_parameter, "duplicate arrow name '" + a.name + "'");
    if (vertex_index(a.source) < 0 || vertex_index(a.target) < 0)
      throw Error(ErrorKind::bad_parameter,
                  "arrow '" + a.name + "' references an unknown vertex");
  }
}

bool PathWord::operator<(const PathWord& o) const {
  if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
  if (arrows != o.arrows) return arrows < o.arrows;
  return vertex < o.vertex;
}

std::string path_str(const PathWord& w) {
  if (w.is_stationary()) return "e(" + w.vertex + ")";
  std::string s;
  for (size_t i = 0; i < w.arrows.size(); ++i) {
    if (i) s += '*';
    s += w.arrows[i];
  }
  return s;
}

int BoundQuiverAlgebra::word_source(const PathWord& w) const {
  if (w.is_stationary()) {
    const int v = quiver.vertex_index(w.vertex);
    if (v < 0) throw Error(ErrorKind::no_such_vertex, "'" + w.vertex + "'");
    return v;
  }
  const int a = quiver.arrow_index(w.arrows.back());
  if (a < 0) throw Error(ErrorKind::malformed_relation, "unknown arrow '" + w.arrows.back() + "'");
  return quiver.vertex_index(quiver.arrows[a].source);
}

int BoundQuiverAlgebra::word_target(const PathWord& w) const {
  if (w.is_stationary()) return word_source(w);
  const int a = quiver.arrow_index(w.arrows.front());
  if (a < 0) throw Error(ErrorKind::malformed_relation, "unknown arrow '" + w.arrows.front() + "'");
  return quiver.vertex_index(quiver.arrows[a].target);
}

int BoundQuiverAlgebra::basis_index(const PathWord& w) const {
  if (w.is_stationary()) {
    const int v = quiver.vertex_index(w.vertex);
    if (v < 0) throw Error(ErrorKind::no_such_vertex, "'" + w.vertex + "'");
    return v;  // stationary paths come first, in vertex order
  }
  std::vector<int> idx;
  idx.reserve(w.arrows.size());
  for (const auto& name : w.arrows) {
    const int a = quiver.arrow_index(name);
    if (a < 0) throw Error(ErrorKind::malformed_relation, "unknown arrow '" + name + "'");
    idx.push_back(a);
  }
  const auto it = word_lookup_.find(idx);
  return it == word_lookup_.end() ? -1 : it->second;
}

namespace {

// word indices are in composition order; composability means
// source(word[i]) == target(word[i+1])
void check_composable(const Quiver& q, const std::vector<int>& word, const std::string& what) {
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    const Arrow& left = q.arrows[word[i]];
    const Arrow& right = q.arrows[word[i + 1]];
    if (left.source != right.target)
      throw Error(ErrorKind::malformed_relation,
                  what + ": '" + left.name + "' does not compose with '" + right.name + "'");
  }
}

bool suffix_matches(const std::vector<int>& word, const std::vector<int>& rel) {
  if (rel.size() > word.size()) return false;
  return std::equal(rel.begin(), rel.end(), word.end() - rel.size());
}

}  // namespace

AlgebraPtr build_algebra(const Quiver& q, const std::vector<PathWord>& relations, int cap) {
  q.validate();
  auto alg = std::make_shared<BoundQuiverAlgebra>();
  alg->quiver = q;
  alg->relations = relations;

  const int nv = static_cast<int>(q.vertices.size());
  const int na = static_cast<int>(q.arrows.size());
  if (cap <= 0) cap = 1 + na * nv;

  std::vector<std::vector<int>> rel_idx;
  for (const auto& r : relations) {
    if (r.length() < 2)
      throw Error(ErrorKind::malformed_relation, "relation '" + path_str(r) + "' shorter than 2");
    std::vector<int> w;
    for (const auto& name : r.arrows) {
      const int a = q.arrow_index(name);
      if (a < 0)
        throw Error(ErrorKind::malformed_relation, "relation references unknown arrow '" + name + "'");
      w.push_back(a);
    }
    check_composable(q, w, "relation " + path_str(r));
    rel_idx.push_back(std::move(w));
  }

  std::vector<int> arrow_src(na), arrow_tgt(na);
  for (int a = 0; a < na; ++a) {
    arrow_src[a] = q.vertex_index(q.arrows[a].source);
    arrow_tgt[a] = q.vertex_index(q.arrows[a].target);
  }
  std::vector<std::vector<int>> arrows_into_source(nv);  // arrows b with target(b) = v
  for (int a = 0; a < na; ++a) arrows_into_source[arrow_tgt[a]].push_back(a);

  // breadth-first extension at the right end (precomposition); a suffix check
  // against every relation suffices because shorter subwords were screened
  // when the prefix was generated
  std::vector<std::vector<int>> words;
  std::vector<std::vector<int>> frontier;
  for (int a = 0; a < na; ++a) frontier.push_back({a});
  int length = 1;
  while (!frontier.empty()) {
    if (length > cap)
      throw Error(ErrorKind::not_admissible,
                  "nonzero path longer than cap " + std::to_string(cap) +
                      "; algebra is infinite dimensional or the cap is too small");
    std::vector<std::vector<int>> next;
    for (auto& w : frontier) {
      const int src = arrow_src[w.back()];
      for (int b : arrows_into_source[src]) {
        std::vector<int> ext = w;
        ext.push_back(b);
        bool dead = false;
        for (const auto& r : rel_idx)
          if (suffix_matches(ext, r)) {
            dead = true;
            break;
          }
        if (!dead) next.push_back(std::move(ext));
      }
      words.push_back(std::move(w));
    }
    frontier = std::move(next);
    ++length;
  }
  std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  for (int v = 0; v < nv; ++v) {
    alg->basis.push_back(PathWord{{}, q.vertices[v]});
    alg->basis_source.push_back(v);
    alg->basis_target.push_back(v);
    alg->basis_arrows.push_back({});
  }
  for (const auto& w : words) {
    PathWord pw;
    for (int a : w) pw.arrows.push_back(q.arrows[a].name);
    alg->word_lookup_[w] = static_cast<int>(alg->basis.size());
    alg->basis.push_back(std::move(pw));
    alg->basis_source.push_back(arrow_src[w.back()]);
    alg->basis_target.push_back(arrow_tgt[w.front()]);
    alg->basis_arrows.push_back(w);
  }

  alg->basis_by_pair.assign(nv, std::vector<std::vector<int>>(nv));
  for (int i = 0; i < alg->dim(); ++i)
    alg->basis_by_pair[alg->basis_source[i]][alg->basis_target[i]].push_back(i);
  alg->cartan.assign(nv, std::vector<int>(nv, 0));
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w)
      alg->cartan[v][w] = static_cast<int>(alg->basis_by_pair[w][v].size());
  return alg;
}

long long tits_form(const Quiver& q, const std::vector<long long>& d) {
  if (d.size() != q.vertices.size())
    throw Error(ErrorKind::shape_mismatch, "dimension vector length");
  long long out = 0;
  for (long long x : d) out += x * x;
  for (const auto& a : q.arrows)
    out -= d[q.vertex_index(a.source)] * d[q.vertex_index(a.target)];
  return out;
}

bool is_connected(const Quiver& q) {
  const int n = static_cast<int>(q.vertices.size());
  if (n == 0) return true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : q.arrows) {
    const int s = q.vertex_index(a.source), t = q.vertex_index(a.target);
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

namespace {

enum class Definiteness { positive, semidefinite, indefinite };

// Symmetric Gaussian elimination over Q. A zero pivot is tolerated only when
// its whole residual row vanishes (true for any psd matrix); a negative pivot
// or a violated zero row certifies indefiniteness.
Definiteness symmetric_definiteness(const std::vector<std::vector<long long>>& S) {
  const int n = static_cast<int>(S.size());
  std::vector<std::vector<mpq_class>> W(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) W[i][j] = static_cast<long>(S[i][j]);  // gmpxx lacks long long
  bool zero_pivot = false;
  for (int i = 0; i < n; ++i) {
    const mpq_class d = W[i][i];
    if (sgn(d) < 0) return Definiteness::indefinite;
    if (sgn(d) == 0) {
      // Schur complement stays symmetric, so a zero row certifies the column too
      for (int j = i + 1; j < n; ++j)
        if (sgn(W[i][j]) != 0) return Definiteness::indefinite;
      zero_pivot = true;
      continue;
    }
    for (int r = i + 1; r < n; ++r) {
      if (sgn(W[r][i]) == 0) continue;
      const mpq_class t = W[r][i] / d;
      for (int c = i; c < n; ++c) W[r][c] -= t * W[i][c];
    }
    for (int c = i + 1; c < n; ++c) W[i][c] = 0;  // keep symmetry bookkeeping simple
  }
  return zero_pivot ? Definiteness::semidefinite : Definiteness::positive;
}

struct Shape {
  std::vector<std::vector<int>> mult;  // symmetric multiplicity, diagonal = loops
  std::vector<int> degree;             // sum of multiplicities to other vertices
  int loops = 0;
  int edges = 0;
  bool simple = true;
};

Shape graph_shape(const Quiver& q) {
  const int n = static_cast<int>(q.vertices.size());
  Shape s;
  s.mult.assign(n, std::vector<int>(n, 0));
  for (const auto& a : q.arrows) {
    const int u = q.vertex_index(a.source), v = q.vertex_index(a.target);
    if (u == v) {
      ++s.mult[u][u];
      ++s.loops;
    } else {
      ++s.mult[u][v];
      ++s.mult[v][u];
    }
    ++s.edges;
  }
  s.degree.assign(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) {
        s.degree[u] += s.mult[u][v];
        if (s.mult[u][v] > 1) s.simple = false;
      }
  if (s.loops) s.simple = false;
  return s;
}

// arm lengths of a tree seen from `hub`, descending
std::vector<int> arm_lengths(const Shape& s, int hub) {
  const int n = static_cast<int>(s.mult.size());
  std::vector<int> arms;
  for (int v = 0; v < n; ++v) {
    if (v == hub || s.mult[hub][v] == 0) continue;
    int len = 1, prev = hub, cur = v;
    for (;;) {
      int next = -1;
      for (int w = 0; w < n; ++w)
        if (w != prev && s.mult[cur][w] > 0) {
          next = w;
          break;
        }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.rbegin(), arms.rend());
  return arms;
}

std::string match_label(const Quiver& q, GraphVerdict verdict) {
  const Shape s = graph_shape(q);
  const int n = static_cast<int>(q.vertices.size());
  if (verdict == GraphVerdict::finite) {
    // positive definite and connected forces a simple tree with at most one
    // branch vertex of degree 3
    int deg3 = -1;
    for (int v = 0; v < n; ++v)
      if (s.degree[v] >= 3) deg3 = v;
    if (deg3 < 0) return "A" + std::to_string(n);
    const auto arms = arm_lengths(s, deg3);
    if (arms.size() == 3) {
      if (arms[1] == 1) return "D" + std::to_string(n);
      if (arms == std::vector<int>{2, 2, 1}) return "E6";
      if (arms == std::vector<int>{3, 2, 1}) return "E7";
      if (arms == std::vector<int>{4, 2, 1}) return "E8";
    }
    return "";
  }
  if (verdict == GraphVerdict::tame_affine) {
    if (n == 1 && s.loops == 1) return "A~0";
    if (n == 2 && !s.simple) return "A~1";
    if (s.simple) {
      bool all2 = true;
      for (int v = 0; v < n; ++v) all2 = all2 && s.degree[v] == 2;
      if (all2 && s.edges == n) return "A~" + std::to_string(n - 1);
      int n3 = 0, n4 = 0, hub = -1;
      for (int v = 0; v < n; ++v) {
        if (s.degree[v] == 3) ++n3, hub = v;
        if (s.degree[v] >= 4) ++n4, hub = v;
      }
      if (n4 == 1 && n3 == 0 && s.degree[hub] == 4 && n == 5) return "D~4";
      if (n4 == 0 && n3 == 2) return "D~" + std::to_string(n - 1);
      if (n4 == 0 && n3 == 1) {
        const auto arms = arm_lengths(s, hub);
        if (arms == std::vector<int>{2, 2, 2}) return "E~6";
        if (arms == std::vector<int>{3, 3, 1}) return "E~7";
        if (arms == std::vector<int>{5, 2, 1}) return "E~8";
      }
    }
    return "";
  }
  return "";
}

std::vector<long long> radical_generator(const Quiver& q,
                                         const std::vector<std::vector<long long>>& S) {
  const int n = static_cast<int>(S.size());
  Rationals QQ;
  Mat<Rationals> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = mpq_class(static_cast<long>(S[i][j]));
  const auto red = reduce(QQ, m);
  if (red.null_basis.cols != 1) return {};  // affine diagrams have a 1-dim radical
  mpz_class l(1);
  for (int i = 0; i < n; ++i) l = lcm(l, red.null_basis.at(i, 0).get_den());
  std::vector<mpz_class> v(n);
  mpz_class g(0);
  for (int i = 0; i < n; ++i) {
    v[i] = red.null_basis.at(i, 0).get_num() * (l / red.null_basis.at(i, 0).get_den());
    g = gcd(g, v[i]);
  }
  std::vector<long long> out(n);
  int sign = 0;
  for (int i = 0; i < n && !sign; ++i) sign = sgn(v[i]);
  for (int i = 0; i < n; ++i) {
    mpz_class x = v[i] / g;
    if (sign < 0) x = -x;
    out[i] = x.get_si();
  }
  return out;
}

}  // namespace

const char* to_string(GraphVerdict v) {
  switch (v) {
    case GraphVerdict::finite: return "finite";
    case GraphVerdict::tame_affine: return "tame-affine";
    case GraphVerdict::wild: return "wild";
  }
  return "?";
}

GraphClass classify_underlying_graph(const Quiver& q) {
  q.validate();
  if (q.vertices.empty()) throw Error(ErrorKind::bad_parameter, "empty quiver");
  if (!is_connected(q)) throw Error(ErrorKind::disconnected, "underlying graph is not connected");
  const int n = static_cast<int>(q.vertices.size());
  std::vector<std::vector<long long>> S(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) S[i][i] = 2;
  for (const auto& a : q.arrows) {
    const int u = q.vertex_index(a.source), v = q.vertex_index(a.target);
    if (u == v) {
      S[u][u] -= 2;
    } else {
      S[u][v] -= 1;
      S[v][u] -= 1;
    }
  }
  GraphClass out;
  switch (symmetric_definiteness(S)) {
    case Definiteness::positive:
      out.verdict = GraphVerdict::finite;
      break;
    case Definiteness::semidefinite:
      out.verdict = GraphVerdict::tame_affine;
      out.radical = radical_generator(q, S);
      break;
    case Definiteness::indefinite:
      out.verdict = GraphVerdict::wild;
      break;
  }
  out.label = match_label(q, out.verdict);
  return out;
}

AlgebraPtr example_algebra_one(int n) {
  if (n < 3) throw Error(ErrorKind::bad_parameter, "example 1 needs n >= 3");
  Quiver q;
  q.name = "example1_n" + std::to_string(n);
  for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
  q.arrows.push_back({"alpha", "2", "1"});
  q.arrows.push_back({"beta", "3", "2"});
  q.arrows.push_back({"gamma", "3", "1"});
  for (int i = 4; i <= n; ++i)
    q.arrows.push_back({"delta" + std::to_string(i), std::to_string(i), std::to_string(i - 1)});
  return build_algebra(q, {PathWord{{"alpha", "beta"}, ""}});
}

AlgebraPtr example_algebra_two() {
  Quiver q;
  q.name = "example2";
  q.vertices = {"0", "1"};
  q.arrows.push_back({"alpha0", "1", "0"});
  q.arrows.push_back({"alpha1", "1", "0"});
  q.arrows.push_back({"beta", "0", "1"});
  return build_algebra(q, {PathWord{{"beta", "alpha0", "beta"}, ""},
                           PathWord{{"beta", "alpha1", "beta"}, ""}});
}

Quiver delete_arrow(const Quiver& q, const std::string& arrow_name) {
  if (q.arrow_index(arrow_name) < 0)
    throw Error(ErrorKind::bad_parameter, "no arrow named '" + arrow_name + "'");
  Quiver out = q;
  out.name = q.name + "_minus_" + arrow_name;
  out.arrows.clear();
  for (const auto& a : q.arrows)
    if (a.name != arrow_name) out.arrows.push_back(a);
  return out;
}

std::vector<Quiver> connected_components(const Quiver& q) {
  const int n = static_cast<int>(q.vertices.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : q.arrows) {
    const int s = q.vertex_index(a.source), t = q.vertex_index(a.target);
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  int ncomp = 0;
  for (int v0 = 0; v0 < n; ++v0) {
    if (comp[v0] >= 0) continue;
    std::vector<int> stack{v0};
    comp[v0] = ncomp;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<Quiver> out(ncomp);
  for (int c = 0; c < ncomp; ++c) out[c].name = q.name + "_c" + std::to_string(c);
  for (int v = 0; v < n; ++v) out[comp[v]].vertices.push_back(q.vertices[v]);
  for (const auto& a : q.arrows) out[comp[q.vertex_index(a.source)]].arrows.push_back(a);
  return out;
}

}  // namespace quiverlab
