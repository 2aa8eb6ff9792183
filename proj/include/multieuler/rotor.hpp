#ifndef MULTIEULER_ROTOR_HPP
#define MULTIEULER_ROTOR_HPP

#include <cstdint>

#include "multieuler/graph.hpp"
#include "multieuler/tour.hpp"

namespace multieuler {

// State of a simple rotor walk: a fixed cyclic order of the outgoing edges
// at each vertex, the index of the most recently used exit, and the
// walker's current vertex.
struct RotorState {
    std::vector<std::vector<int>> cyclic_orders; // per vertex, permutation of its out-edge ids
    std::vector<int> positions;                  // index into the cyclic order
    int walker;
};

// Ascending-edge-id orders; positions point at the last exit so the first
// step from each vertex uses its lowest out-edge.
RotorState default_rotor_state(const DirectedMultigraph& g, int walker = 0);

// One step, increment-then-move: the walker's rotor advances one position
// in its cyclic order, then the walker crosses the edge now pointed to.
// Returns the new state and the traversed edge id.
std::pair<RotorState, int> rotor_step(const DirectedMultigraph& g, const RotorState& s);

struct SettlingReport {
    std::int64_t transient_length; // steps before the periodic regime
    std::int64_t period;           // = periodic_tour length
    Tour periodic_tour;            // edges traversed across one period
    bool is_multi_eulerian;        // window validates against primitive pi
};

// Iterates rotor_step until a full state (positions + walker) repeats.
// cap = 0 derives a bound |V| * prod_v d_v + min tour length from the
// finite state space, clamped to a fixed constant when that overflows.
// Throws NotStronglyConnected, NoEdges, CapExceeded.
SettlingReport run_until_periodic(const DirectedMultigraph& g, const RotorState& s0,
                                  std::int64_t cap = 0);

struct SettlingAggregate {
    int trials;
    int passes;
    int failures;
    std::int64_t max_transient;
    Int expected_period; // minimal multi-Eulerian tour length
};

// Runs `trials` seeded random rotor walks (random cyclic orders, positions
// and start vertex; trial i draws from SplitMix64 seeded with seed + i) and
// checks each settles into a tour of exactly the minimal length that
// validates as a primitive-pi tour. Reproducible bit-for-bit per seed.
SettlingAggregate check_settles(const DirectedMultigraph& g, int trials, std::uint64_t seed);

} // namespace multieuler

#endif // MULTIEULER_ROTOR_HPP
