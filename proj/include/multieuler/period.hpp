#ifndef MULTIEULER_PERIOD_HPP
#define MULTIEULER_PERIOD_HPP

#include <vector>

#include "multieuler/graph.hpp"
#include "multieuler/numeric.hpp"
#include "multieuler/tree_census.hpp"

namespace multieuler {

struct PeriodVector {
    std::vector<Int> entries; // strictly positive, Delta * entries = 0
    bool primitive;           // gcd of entries is 1
};

// Everything the tour-length theory derives from the tree counts, computed
// in one pass so callers do not pay for repeated determinants.
struct EulerianessSummary {
    KappaVector kappa;
    Int pham_index;                // M = gcd of the kappa entries
    PeriodVector primitive_period; // kappa / M componentwise
    Int unicycles;                 // U = sum_v kappa_v d_v
    Int minimal_tour_length;       // U / M, an exact division
    bool eulerian;
};

// True iff p != 0, every entry >= 0, and Delta p = 0 exactly.
// Throws DimensionMismatch.
bool is_period_vector(const DirectedMultigraph& g, const std::vector<Int>& p);

// Throws NotStronglyConnected, NoEdges (summary is meaningless without edges).
EulerianessSummary analyze_graph(const DirectedMultigraph& g);

PeriodVector primitive_period_vector(const DirectedMultigraph& g);
Int pham_index(const DirectedMultigraph& g);
Int unicycle_count(const DirectedMultigraph& g);

// Minimal length of a multi-Eulerian tour: U/M, asserted equal to
// sum_v pi_v d_v for the primitive period vector.
Int minimal_tour_length(const DirectedMultigraph& g);

} // namespace multieuler

#endif // MULTIEULER_PERIOD_HPP
