#ifndef QUIVERLAB_QUIVER_HPP
#define QUIVERLAB_QUIVER_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "quiverlab/error.hpp"

namespace quiverlab {

struct Arrow {
  std::string name;
  std::string source;
  std::string target;
  bool operator==(const Arrow& o) const = default;
};

struct Quiver {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& v) const;  // -1 when absent
  int arrow_index(const std::string& a) const;
  void validate() const;  // unique names, endpoints exist
  bool operator==(const Quiver& o) const = default;
};

// A path, written in function-composition order: arrows[0] is applied last,
// arrows.back() first. Stationary paths have empty `arrows` and carry the
// vertex instead.
struct PathWord {
  std::vector<std::string> arrows;
  std::string vertex;

  bool is_stationary() const { return arrows.empty(); }
  size_t length() const { return arrows.size(); }
  bool operator==(const PathWord& o) const = default;
  bool operator<(const PathWord& o) const;
};

std::string path_str(const PathWord& w);

// Path algebra of a quiver modulo monomial relations. The basis consists of
// all paths avoiding every relation as a contiguous subword; enumeration
// aborts past `cap` (a nonzero path longer than the cap means the algebra is
// infinite dimensional for every field, or the cap was set too low).
struct BoundQuiverAlgebra {
  Quiver quiver;
  std::vector<PathWord> relations;

  std::vector<PathWord> basis;  // sorted: stationary (vertex order), then by length, then lex
  std::vector<std::vector<int>> cartan;  // cartan[v][w] = #basis paths w -> v

  // caches filled by build_algebra
  std::vector<int> basis_source;  // vertex indices
  std::vector<int> basis_target;
  std::vector<std::vector<int>> basis_arrows;                // arrow index sequence per basis path
  std::vector<std::vector<std::vector<int>>> basis_by_pair;  // [source][target] -> basis indices

  int dim() const { return static_cast<int>(basis.size()); }
  int num_vertices() const { return static_cast<int>(quiver.vertices.size()); }
  int num_arrows() const { return static_cast<int>(quiver.arrows.size()); }
  int basis_index(const PathWord& w) const;  // -1 when not a basis path (i.e. zero)

  int word_source(const PathWord& w) const;
  int word_target(const PathWord& w) const;

  bool operator==(const BoundQuiverAlgebra& o) const {
    return quiver == o.quiver && relations == o.relations;
  }

 private:
  friend std::shared_ptr<const BoundQuiverAlgebra> build_algebra(const Quiver&,
                                                                 const std::vector<PathWord>&, int);
  std::map<std::vector<int>, int> word_lookup_;  // arrow index sequence -> basis index
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

// cap = 0 picks the default 1 + #arrows * #vertices.
AlgebraPtr build_algebra(const Quiver& q, const std::vector<PathWord>& relations, int cap = 0);

// Underlying-graph classification through the Tits form
// q(d) = sum d_v^2 - sum_{a} d_{s(a)} d_{t(a)}: positive definite -> finite
// representation type, positive semidefinite with radical -> tame affine,
// otherwise wild. ADE labels are attached by shape matching.
enum class GraphVerdict { finite, tame_affine, wild };

struct GraphClass {
  GraphVerdict verdict;
  std::string label;                 // "A3", "D5", "E8", "A~1", "E~8", ... ; empty for wild
  std::vector<long long> radical;    // primitive positive null vector when tame affine
};

const char* to_string(GraphVerdict v);

GraphClass classify_underlying_graph(const Quiver& q);

long long tits_form(const Quiver& q, const std::vector<long long>& d);

bool is_connected(const Quiver& q);

// Built-in example algebras.
//
// example_algebra_one(n), n >= 3: vertices 1..n, arrows
//   alpha: 2 -> 1, beta: 3 -> 2, gamma: 3 -> 1, delta_i: i -> i-1 (4 <= i <= n)
// with the single relation alpha*beta = 0.
//
// example_algebra_two(): vertices 0, 1, arrows alpha0, alpha1: 1 -> 0 and
// beta: 0 -> 1, with relations beta*alpha0*beta = 0 and beta*alpha1*beta = 0.
AlgebraPtr example_algebra_one(int n);
AlgebraPtr example_algebra_two();

// Quiver with one arrow removed (relations touching it dropped); helper for
// the deleted-arrow classifications.
Quiver delete_arrow(const Quiver& q, const std::string& arrow_name);

// Connected components as separate quivers (vertex partition order).
std::vector<Quiver> connected_components(const Quiver& q);

}  // namespace quiverlab

#endif
