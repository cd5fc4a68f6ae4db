#ifndef QUIVERLAB_ROOTS_HPP
#define QUIVERLAB_ROOTS_HPP

#include "quiverlab/rep.hpp"

namespace quiverlab {

// All positive roots of the underlying graph's quadratic form, found by
// reflection closure from the simple roots. Every connected component must be
// of finite representation type (throws not_dynkin otherwise). Result is lex
// sorted by dimension vector.
std::vector<std::vector<int>> positive_roots(const Quiver& q);

// The indecomposable representation with dimension vector d, built with
// reflection functors: reflect d down to a simple root through a cycled
// admissible sink ordering, then pull the simple back up. Requires a
// relation-free algebra whose quiver is connected of finite type; throws
// not_a_root when q(d) != 1 or a reflection step leaves the positive cone.
template <class F>
Representation<F> root_representation(AlgebraPtr alg, const F& f, const std::vector<int>& d);

}  // namespace quiverlab

#endif
