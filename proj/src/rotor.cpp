#include "multieuler/rotor.hpp"

#include <algorithm>
#include <unordered_map>

#include "multieuler/errors.hpp"
#include "multieuler/period.hpp"
#include "multieuler/rng.hpp"

namespace multieuler {

namespace {

constexpr std::int64_t kFallbackStepCap = 100'000'000;

void check_state(const DirectedMultigraph& g, const RotorState& s) {
    int n = g.vertex_count();
    if (static_cast<int>(s.cyclic_orders.size()) != n ||
        static_cast<int>(s.positions.size()) != n) {
        throw DimensionMismatch("rotor state does not match the graph's vertex count");
    }
    if (s.walker < 0 || s.walker >= n) {
        throw UnknownVertex("walker vertex " + std::to_string(s.walker) + " out of range");
    }
    for (int v = 0; v < n; ++v) {
        std::vector<int> sorted = s.cyclic_orders[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.out_edges(v)) {
            throw Error("cyclic order at vertex '" + g.vertex_name(v) +
                        "' is not a permutation of its outgoing edges");
        }
        int d = g.out_degree(v);
        if (d > 0 && (s.positions[v] < 0 || s.positions[v] >= d)) {
            throw Error("rotor position at vertex '" + g.vertex_name(v) + "' out of range");
        }
    }
}

// Positions-plus-walker key for the recurrence map.
struct StateKey {
    std::vector<int> data;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
        std::size_t h = 1469598103934665603ULL;
        for (int x : k.data) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b9 + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace

RotorState default_rotor_state(const DirectedMultigraph& g, int walker) {
    g.vertex_name(walker); // range check
    RotorState s;
    s.cyclic_orders.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        s.cyclic_orders.push_back(g.out_edges(v));
        // most recently used exit = last entry, so the first exit is order[0]
        s.positions.push_back(std::max(0, g.out_degree(v) - 1));
    }
    s.walker = walker;
    return s;
}

std::pair<RotorState, int> rotor_step(const DirectedMultigraph& g, const RotorState& s) {
    check_state(g, s);
    int v = s.walker;
    int d = g.out_degree(v);
    if (d == 0) {
        throw NoEdges("walker vertex '" + g.vertex_name(v) + "' has no outgoing edge");
    }
    RotorState next = s;
    next.positions[v] = (s.positions[v] + 1) % d;
    int e = next.cyclic_orders[v][next.positions[v]];
    next.walker = g.edge(e).head;
    return {std::move(next), e};
}

SettlingReport run_until_periodic(const DirectedMultigraph& g, const RotorState& s0,
                                  std::int64_t cap) {
    if (g.edge_count() == 0) {
        throw NoEdges("graph has no edges");
    }
    check_state(g, s0);
    EulerianessSummary summary = analyze_graph(g); // throws NotStronglyConnected

    if (cap == 0) {
        // |V| * prod_v d_v full states plus one minimal period
        Int bound = g.vertex_count();
        for (int v = 0; v < g.vertex_count(); ++v) {
            bound *= g.out_degree(v);
        }
        bound += summary.minimal_tour_length;
        cap = bound > kFallbackStepCap ? kFallbackStepCap : bound.convert_to<std::int64_t>();
    }

    std::vector<int> positions = s0.positions;
    int walker = s0.walker;
    auto key_of = [&]() {
        StateKey k;
        k.data = positions;
        k.data.push_back(walker);
        return k;
    };

    std::unordered_map<StateKey, std::int64_t, StateKeyHash> seen;
    std::vector<int> traversed;
    seen.emplace(key_of(), 0);
    for (std::int64_t step = 0; step < cap; ++step) {
        int v = walker;
        int d = g.out_degree(v);
        positions[v] = (positions[v] + 1) % d;
        int e = s0.cyclic_orders[v][positions[v]];
        traversed.push_back(e);
        walker = g.edge(e).head;

        auto [it, inserted] = seen.emplace(key_of(), step + 1);
        if (!inserted) {
            SettlingReport report;
            report.transient_length = it->second;
            report.period = (step + 1) - it->second;
            report.periodic_tour.edge_ids.assign(
                traversed.begin() + static_cast<std::ptrdiff_t>(it->second),
                traversed.begin() + static_cast<std::ptrdiff_t>(step + 1));
            report.is_multi_eulerian =
                validate_tour(g, summary.primitive_period.entries, report.periodic_tour).ok;
            return report;
        }
    }
    throw CapExceeded("no repeated rotor state within " + std::to_string(cap) + " steps");
}

SettlingAggregate check_settles(const DirectedMultigraph& g, int trials, std::uint64_t seed) {
    EulerianessSummary summary = analyze_graph(g);

    SettlingAggregate agg;
    agg.trials = trials;
    agg.passes = 0;
    agg.failures = 0;
    agg.max_transient = 0;
    agg.expected_period = summary.minimal_tour_length;

    int n = g.vertex_count();
    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(seed + static_cast<std::uint64_t>(trial));
        RotorState s;
        s.cyclic_orders.reserve(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> order = g.out_edges(v);
            rng.shuffle(order);
            s.cyclic_orders.push_back(std::move(order));
        }
        for (int v = 0; v < n; ++v) {
            s.positions.push_back(static_cast<int>(rng.below(
                static_cast<std::uint64_t>(std::max(1, g.out_degree(v))))));
        }
        s.walker = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

        SettlingReport report = run_until_periodic(g, s);
        bool pass = report.is_multi_eulerian && Int(report.period) == summary.minimal_tour_length;
        if (pass) {
            ++agg.passes;
        } else {
            ++agg.failures;
        }
        agg.max_transient = std::max(agg.max_transient, report.transient_length);
    }
    return agg;
}

} // namespace multieuler
