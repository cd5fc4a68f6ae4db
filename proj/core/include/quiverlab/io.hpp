#ifndef QUIVERLAB_IO_HPP
#define QUIVERLAB_IO_HPP

#include <string>
#include <variant>

#include "quiverlab/quiver.hpp"
#include "quiverlab/rep.hpp"

namespace quiverlab {

// Text formats. '#' starts a comment (whole line or trailing), blank lines
// are ignored.
//
// Quiver file:
//   quiver <name>
//   vertices <id> <id> ...
//   arrow <name>: <src> -> <tgt>
//   relations
//   <a1>*<a2>*...*<ak> = 0
// '*' composes like functions: the rightmost arrow is traversed first.
//
// Representation file (shapes come from the quiver it is loaded against):
//   field p:<prime>          (or: field Q)
//   dims <vertex>=<n> ...    (unlisted vertices get 0)
//   matrix <arrow>           (row-major, dims[target] rows of dims[source]
//   <row entries>             entries each; omitted matrices are zero)
// Rational entries are integers or a/b fractions.

struct ParsedQuiver {
  Quiver quiver;
  std::vector<PathWord> relations;
};

ParsedQuiver parse_quiver_text(const std::string& text);
AlgebraPtr load_algebra_file(const std::string& path);
std::string quiver_text(const BoundQuiverAlgebra& alg);
void write_quiver_file(const std::string& path, const BoundQuiverAlgebra& alg);

using AnyRep = std::variant<Representation<PrimeField>, Representation<Rationals>>;

AnyRep parse_rep_text(const std::string& text, AlgebraPtr alg);
AnyRep load_rep_file(const std::string& path, AlgebraPtr alg);
template <class F>
std::string rep_text(const Representation<F>& M);
template <class F>
void write_rep_file(const std::string& path, const Representation<F>& M);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace quiverlab

#endif
