#include "multieuler/period.hpp"

#include "multieuler/errors.hpp"

namespace multieuler {

bool is_period_vector(const DirectedMultigraph& g, const std::vector<Int>& p) {
    if (static_cast<int>(p.size()) != g.vertex_count()) {
        throw DimensionMismatch("vector has " + std::to_string(p.size()) + " entries, graph has " +
                                std::to_string(g.vertex_count()) + " vertices");
    }
    bool nonzero = false;
    for (const Int& x : p) {
        if (x < 0) {
            return false;
        }
        if (x != 0) {
            nonzero = true;
        }
    }
    if (!nonzero) {
        return false;
    }
    for (const Int& r : laplacian_apply(g, p)) {
        if (r != 0) {
            return false;
        }
    }
    return true;
}

EulerianessSummary analyze_graph(const DirectedMultigraph& g) {
    if (g.edge_count() == 0) {
        throw NoEdges("graph has no edges");
    }
    EulerianessSummary s;
    s.kappa = kappa_vector(g); // throws NotStronglyConnected
    s.pham_index = gcd_all(s.kappa.counts);
    s.primitive_period.entries.reserve(s.kappa.counts.size());
    for (const Int& k : s.kappa.counts) {
        s.primitive_period.entries.push_back(exact_div(k, s.pham_index));
    }
    s.primitive_period.primitive = true;

    s.unicycles = 0;
    Int length_from_period = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        s.unicycles += s.kappa.counts[v] * g.out_degree(v);
        length_from_period += s.primitive_period.entries[v] * g.out_degree(v);
    }
    // Two routes to the minimal length: U/M must divide exactly and agree
    // with sum_v pi_v d_v.
    s.minimal_tour_length = exact_div(s.unicycles, s.pham_index);
    if (s.minimal_tour_length != length_from_period) {
        throw Error("internal error: U/M = " + s.minimal_tour_length.str() +
                    " but sum pi_v d_v = " + length_from_period.str());
    }
    s.eulerian = is_eulerian(g);
    return s;
}

PeriodVector primitive_period_vector(const DirectedMultigraph& g) {
    return analyze_graph(g).primitive_period;
}

Int pham_index(const DirectedMultigraph& g) {
    return analyze_graph(g).pham_index;
}

Int unicycle_count(const DirectedMultigraph& g) {
    return analyze_graph(g).unicycles;
}

Int minimal_tour_length(const DirectedMultigraph& g) {
    return analyze_graph(g).minimal_tour_length;
}

} // namespace multieuler
