#ifndef MULTIEULER_TESTS_FIXTURES_HPP
#define MULTIEULER_TESTS_FIXTURES_HPP

#include "multieuler/graph.hpp"

namespace multieuler::tests {

// Single vertex with one loop: the smallest valid graph.
inline DirectedMultigraph loop_graph() {
    return build_graph({"a"}, {{"a", "a"}});
}

// Single vertex with k loops.
inline DirectedMultigraph loop_graph_k(int k) {
    std::vector<std::pair<std::string, std::string>> edges(k, {"a", "a"});
    return build_graph({"a"}, edges);
}

// Two vertices, one edge a->b and two parallel edges b->a. Non-Eulerian;
// kappa = (2, 1), primitive period (2, 1), minimal tour length 4.
inline DirectedMultigraph g2() {
    return build_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}, {"b", "a"}});
}

// Directed 3-cycle a->b->c->a.
inline DirectedMultigraph c3() {
    return build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

// Bidirected triangle: both directions on each pair. Eulerian, kappa = (3,3,3).
inline DirectedMultigraph t3() {
    return build_graph({"a", "b", "c"},
                       {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}, {"c", "a"}, {"a", "c"}});
}

} // namespace multieuler::tests

#endif // MULTIEULER_TESTS_FIXTURES_HPP
