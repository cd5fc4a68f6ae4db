#ifndef QUIVERLAB_CENSUS_HPP
#define QUIVERLAB_CENSUS_HPP

#include "quiverlab/rep.hpp"

namespace quiverlab {

// One isomorphism class found by the census. The representative is the
// lexicographically least packed matrix tuple in its base-change orbit
// (entries compared arrow-major, row-major).
struct CensusClass {
  std::vector<int> dims;
  Representation<PrimeField> rep;
  std::uint64_t orbit_size = 0;
  bool indecomposable = false;      // exact, by direct-sum lookup
  EndAnalysis end;                  // is_indecomposable cross-checked against the lookup
  std::vector<bool> arrow_is_zero;  // per arrow: structure map identically zero?
};

struct CensusReport {
  std::uint64_t p = 0;
  std::vector<int> bounds;
  std::vector<CensusClass> classes;   // sorted by dims, then representative key
  long long indecomposables = 0;
  long long bricks = 0;               // dim End == 1
  long long schur = 0;                // Schur verdict yes
};

// Exhaustive isomorphism census over F_p of all representations with
// 0 < dims <= bounds (pointwise). Refuses up front (budget_exceeded) when the
// raw enumeration count would exceed the budget or some matrix tuple does not
// pack into 64 bits. Indecomposability is decided exactly; the Schur verdict
// can be unknown only when the endomorphism scan cap trips.
CensusReport brick_census(AlgebraPtr alg, const PrimeField& f, const std::vector<int>& bounds,
                          std::uint64_t budget = 1ull << 32);

}  // namespace quiverlab

#endif
