#include "multieuler/tour.hpp"

#include <algorithm>

#include "multieuler/errors.hpp"
#include "multieuler/tree_census.hpp"

namespace multieuler {

namespace {

// Beyond this the factorial itself is the bottleneck, not the graph.
constexpr std::int64_t kMaxFactorialArg = 1'000'000;

void require_strongly_connected(const DirectedMultigraph& g) {
    if (auto pair = find_unreachable_pair(g)) {
        throw NotStronglyConnected("graph is not strongly connected: no directed path from '" +
                                       g.vertex_name(pair->first) + "' to '" +
                                       g.vertex_name(pair->second) + "'",
                                   g.vertex_name(pair->first), g.vertex_name(pair->second));
    }
}

void check_pi(const DirectedMultigraph& g, const std::vector<Int>& pi) {
    if (static_cast<int>(pi.size()) != g.vertex_count()) {
        throw DimensionMismatch("pi has " + std::to_string(pi.size()) + " entries, graph has " +
                                std::to_string(g.vertex_count()) + " vertices");
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (pi[v] <= 0) {
            throw NonPositiveEntry("pi entry for vertex '" + g.vertex_name(v) +
                                   "' must be strictly positive, got " + pi[v].str());
        }
    }
}

void require_period_vector(const DirectedMultigraph& g, const std::vector<Int>& pi) {
    for (const Int& r : laplacian_apply(g, pi)) {
        if (r != 0) {
            throw NotPeriodVector("Delta pi != 0: no pi-Eulerian tour exists for this pi");
        }
    }
}

// Factorials memoized across one counting call. Returns by value: callers
// compose results into boost expression templates, and a reference into
// table_ would dangle across the reallocation a later lookup can trigger.
class FactorialTable {
public:
    Int operator()(std::int64_t n) {
        if (n < 0) {
            throw Error("internal error: factorial of negative argument");
        }
        if (n > kMaxFactorialArg) {
            throw SearchSpaceTooLarge("factorial argument " + std::to_string(n) +
                                      " out of supported range");
        }
        while (static_cast<std::int64_t>(table_.size()) <= n) {
            table_.push_back(table_.back() * static_cast<std::int64_t>(table_.size()));
        }
        return table_[static_cast<std::size_t>(n)];
    }

private:
    std::vector<Int> table_ = {1};
};

std::int64_t to_i64(const Int& x, const char* what) {
    if (x > kMaxFactorialArg) {
        throw SearchSpaceTooLarge(std::string(what) + " " + x.str() + " out of supported range");
    }
    return x.convert_to<std::int64_t>();
}

// Eulerian circuit of an Eulerian, strongly connected multigraph, starting
// at `start`. Unused edges are taken in ascending id order; sub-circuits
// splice in discovery order (classic stack form of Hierholzer).
std::vector<int> hierholzer(const DirectedMultigraph& g, int start) {
    std::vector<std::size_t> next_unused(g.vertex_count(), 0);
    std::vector<std::pair<int, int>> stack; // (vertex, edge that led here)
    std::vector<int> circuit;
    circuit.reserve(g.edge_count());
    stack.emplace_back(start, -1);
    while (!stack.empty()) {
        auto [v, e_in] = stack.back();
        const std::vector<int>& out = g.out_edges(v);
        if (next_unused[v] < out.size()) {
            int e = out[next_unused[v]++];
            stack.emplace_back(g.edge(e).head, e);
        } else {
            stack.pop_back();
            if (e_in >= 0) {
                circuit.push_back(e_in);
            }
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    if (static_cast<int>(circuit.size()) != g.edge_count()) {
        throw Error("internal error: Hierholzer did not use every edge");
    }
    return circuit;
}

} // namespace

ValidationReport validate_tour(const DirectedMultigraph& g, const std::vector<Int>& pi,
                               const Tour& t) {
    check_pi(g, pi);
    if (t.edge_ids.empty()) {
        return {false, "tour is empty"};
    }
    for (std::size_t i = 0; i < t.edge_ids.size(); ++i) {
        int id = t.edge_ids[i];
        if (id < 0 || id >= g.edge_count()) {
            return {false, "position " + std::to_string(i) + ": unknown edge id " +
                               std::to_string(id)};
        }
    }
    std::size_t len = t.edge_ids.size();
    for (std::size_t i = 0; i < len; ++i) {
        const Edge& cur = g.edge(t.edge_ids[i]);
        const Edge& nxt = g.edge(t.edge_ids[(i + 1) % len]);
        if (cur.head != nxt.tail) {
            return {false, "chaining break at position " + std::to_string(i) + ": edge " +
                               std::to_string(cur.id) + " ends at '" + g.vertex_name(cur.head) +
                               "' but edge " + std::to_string(nxt.id) + " starts at '" +
                               g.vertex_name(nxt.tail) + "'"};
        }
    }
    std::vector<Int> used(g.edge_count(), 0);
    for (int id : t.edge_ids) {
        used[id] += 1;
    }
    for (int id = 0; id < g.edge_count(); ++id) {
        const Int& expected = pi[g.edge(id).tail];
        if (used[id] != expected) {
            return {false, "edge " + std::to_string(id) + " used " + used[id].str() +
                               " times, expected " + expected.str()};
        }
    }
    return {true, ""};
}

Tour construct_tour(const DirectedMultigraph& g, const std::vector<Int>& pi, int start_vertex,
                    std::optional<int> first_edge) {
    check_pi(g, pi);
    g.vertex_name(start_vertex); // range check
    require_strongly_connected(g);
    if (g.edge_count() == 0) {
        throw NoEdges("graph has no edges");
    }
    require_period_vector(g, pi);

    int target = -1;
    if (first_edge) {
        target = g.edge(*first_edge).id;
    } else {
        // lowest original edge id leaving the start vertex
        const std::vector<int>& out = g.out_edges(start_vertex);
        if (out.empty()) {
            throw NoEdges("start vertex '" + g.vertex_name(start_vertex) + "' has no outgoing edge");
        }
        target = out[0];
    }

    auto [lifted, map] = lift(g, pi);
    std::vector<int> lifted_circuit = hierholzer(lifted, start_vertex);

    Tour tour;
    tour.edge_ids.reserve(lifted_circuit.size());
    for (int lifted_id : lifted_circuit) {
        tour.edge_ids.push_back(map.forward[lifted_id].first);
    }
    auto pos = std::find(tour.edge_ids.begin(), tour.edge_ids.end(), target);
    std::rotate(tour.edge_ids.begin(), pos, tour.edge_ids.end());
    return tour;
}

TourCount count_tours(const DirectedMultigraph& g, const std::vector<Int>& pi, int e) {
    check_pi(g, pi);
    int w = g.edge(e).tail;
    require_strongly_connected(g);
    require_period_vector(g, pi);

    Int result = kappa(g, w);
    FactorialTable fact;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::int64_t d = g.out_degree(v);
        std::int64_t p = to_i64(pi[v], "pi entry");
        Int numerator = fact(d * p - 1);
        Int denominator = pow(fact(p), static_cast<unsigned>(d - 1)) * fact(p - 1);
        // multinomial coefficient, so the division is exact
        result *= exact_div(numerator, denominator);
    }
    return {result, e, pi};
}

TourCount count_tours_bruteforce(const DirectedMultigraph& g, const std::vector<Int>& pi, int e,
                                 std::int64_t cap) {
    check_pi(g, pi);
    const Edge& start = g.edge(e);

    Int total_length = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        total_length += pi[v] * g.out_degree(v);
    }
    if (total_length > cap) {
        throw SearchSpaceTooLarge("tour length " + total_length.str() + " exceeds cap " +
                                  std::to_string(cap));
    }

    std::vector<std::int64_t> budget(g.edge_count());
    for (int id = 0; id < g.edge_count(); ++id) {
        budget[id] = to_i64(pi[g.edge(id).tail], "pi entry");
    }

    Int count = 0;
    std::int64_t remaining = total_length.convert_to<std::int64_t>() - 1;
    budget[e] -= 1;

    // Depth-first over edge sequences; a sequence completes when every
    // budget is spent and the walk is back at the start edge's tail.
    auto dfs = [&](auto&& self, int vertex, std::int64_t left) -> void {
        if (left == 0) {
            if (vertex == start.tail) {
                count += 1;
            }
            return;
        }
        for (int f : g.out_edges(vertex)) {
            if (budget[f] > 0) {
                budget[f] -= 1;
                self(self, g.edge(f).head, left - 1);
                budget[f] += 1;
            }
        }
    };
    dfs(dfs, start.head, remaining);
    return {count, e, pi};
}

TourCount count_eulerian_best(const DirectedMultigraph& g, int e) {
    int w = g.edge(e).tail;
    if (!is_eulerian(g)) {
        throw NotEulerian("graph has a vertex with indegree != outdegree");
    }
    require_strongly_connected(g);

    Int result = kappa(g, w);
    FactorialTable fact;
    for (int v = 0; v < g.vertex_count(); ++v) {
        result *= fact(g.out_degree(v) - 1);
    }
    return {result, e, std::vector<Int>(g.vertex_count(), 1)};
}

} // namespace multieuler
