#ifndef MULTIEULER_TOUR_HPP
#define MULTIEULER_TOUR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multieuler/graph.hpp"
#include "multieuler/numeric.hpp"

namespace multieuler {

// Closed path given as an edge-id sequence. Two tours are equal iff their
// sequences are equal; rotations that move the first edge are distinct.
struct Tour {
    std::vector<int> edge_ids;
};

struct ValidationReport {
    bool ok;
    std::string message; // first chaining break or first miscounted edge
};

// Checks that t is a nonempty closed chained path using each edge e exactly
// pi_tail(e) times. Throws DimensionMismatch, NonPositiveEntry.
ValidationReport validate_tour(const DirectedMultigraph& g, const std::vector<Int>& pi,
                               const Tour& t);

// Builds a pi-Eulerian tour by lifting each edge with tail u to pi_u copies,
// running Hierholzer's algorithm on the lifted graph, and projecting the
// lifted tour back down. Deterministic: unused lifted edges are consumed in
// ascending id order and splice points processed in discovery order. The
// result is rotated so its first edge is `first_edge` when given, otherwise
// the lowest edge id leaving `start_vertex`.
// Throws NotStronglyConnected, NotPeriodVector (Delta pi != 0),
// NonPositiveEntry, UnknownVertex, UnknownEdge.
Tour construct_tour(const DirectedMultigraph& g, const std::vector<Int>& pi,
                    int start_vertex = 0, std::optional<int> first_edge = std::nullopt);

struct TourCount {
    Int value;
    int start_edge;
    std::vector<Int> pi;
};

// Number of pi-Eulerian tours starting with edge e, with w = tail(e):
//
//   kappa_w * prod_v (d_v pi_v - 1)! / ((pi_v!)^(d_v - 1) (pi_v - 1)!)
//
// Each per-vertex ratio is a multinomial coefficient; its exactness is
// asserted. Factorials are memoized within one call.
// Throws NotPeriodVector, UnknownEdge, NotStronglyConnected,
// NonPositiveEntry, SearchSpaceTooLarge (factorial argument out of range).
TourCount count_tours(const DirectedMultigraph& g, const std::vector<Int>& pi, int e);

inline constexpr std::int64_t kDefaultTourLengthCap = 16;

// Independent oracle: exhaustive depth-first enumeration of the closed edge
// sequences that start with e and use each edge f exactly pi_tail(f) times.
// Delta pi = 0 is not required; the count is 0 when no tour exists. Throws
// SearchSpaceTooLarge when the tour length sum_v pi_v d_v exceeds `cap`.
TourCount count_tours_bruteforce(const DirectedMultigraph& g, const std::vector<Int>& pi, int e,
                                 std::int64_t cap = kDefaultTourLengthCap);

// Eulerian special case: kappa_w * prod_v (d_v - 1)!.
// Throws NotEulerian, UnknownEdge, NotStronglyConnected.
TourCount count_eulerian_best(const DirectedMultigraph& g, int e);

} // namespace multieuler

#endif // MULTIEULER_TOUR_HPP
