#ifndef MULTIEULER_TREE_CENSUS_HPP
#define MULTIEULER_TREE_CENSUS_HPP

#include <cstdint>
#include <vector>

#include "multieuler/graph.hpp"
#include "multieuler/numeric.hpp"

namespace multieuler {

// Exact determinant by fraction-free (Bareiss) elimination. No floating
// point, no modular reduction: the result feeds gcds and exact counting.
// The 0x0 matrix has determinant 1. Throws NonSquare.
Int determinant_exact(const IntMatrix& m);

// Number of spanning trees of g oriented toward w: the determinant of the
// Laplacian with row w and column w deleted (directed Matrix-Tree).
// Throws NotStronglyConnected, UnknownVertex.
Int kappa(const DirectedMultigraph& g, int w);

struct KappaVector {
    std::vector<Int> counts; // kappa_v, indexed by vertex
};

// All tree counts at once. Strictly positive entries, Delta kappa = 0.
KappaVector kappa_vector(const DirectedMultigraph& g);

inline constexpr std::int64_t kDefaultArborescenceCap = 10'000'000;

// Brute-force census of the arborescences toward w, independent of the
// determinant path: sweeps every choice of one out-edge per vertex != w and
// keeps the acyclic ones. Result is exhaustive, duplicate-free, and sorted
// by edge-id sequence. Throws SearchSpaceTooLarge when the choice-function
// space prod_{v != w} d_v exceeds `cap`.
std::vector<std::vector<int>> enumerate_arborescences(const DirectedMultigraph& g, int w,
                                                      std::int64_t cap = kDefaultArborescenceCap);

} // namespace multieuler

#endif // MULTIEULER_TREE_CENSUS_HPP
