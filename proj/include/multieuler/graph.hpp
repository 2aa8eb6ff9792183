#ifndef MULTIEULER_GRAPH_HPP
#define MULTIEULER_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multieuler/numeric.hpp"

namespace multieuler {

struct Edge {
    int id;
    int tail;
    int head;
};

// Finite directed multigraph. Loops and parallel edges are permitted and
// kept as distinct identities; edge ids are dense 0..m-1 in insertion
// order. Immutable after construction.
class DirectedMultigraph {
public:
    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_name(int v) const;
    // Index of a named vertex; throws UnknownVertex if absent.
    int vertex_index(const std::string& name) const;

    const Edge& edge(int id) const;
    const std::vector<Edge>& edges() const { return edges_; }

    // Outgoing edge ids of v, ascending. A loop appears once.
    const std::vector<int>& out_edges(int v) const;

    int out_degree(int v) const;
    int in_degree(int v) const;
    // Number of edges directed from u to v (d_uv).
    int multiplicity(int u, int v) const;

private:
    DirectedMultigraph() = default;
    friend DirectedMultigraph build_graph(const std::vector<std::string>&,
                                          const std::vector<std::pair<std::string, std::string>>&);

    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_; // per vertex, ascending edge ids
    std::vector<int> in_degree_;
};

// Builds a graph from named vertices and (tail, head) pairs. Edge ids are
// assigned in list order. Throws DuplicateVertex, UnknownVertex, EmptyGraph.
DirectedMultigraph build_graph(const std::vector<std::string>& vertex_names,
                               const std::vector<std::pair<std::string, std::string>>& edge_list);

// True iff every ordered vertex pair is joined by a directed path.
// Computed by a forward and a reverse reachability sweep from vertex 0.
bool is_strongly_connected(const DirectedMultigraph& g);

// Witness for a failed strong-connectivity check: a pair (u, v) with no
// directed path u -> v. Empty when the graph is strongly connected.
std::optional<std::pair<int, int>> find_unreachable_pair(const DirectedMultigraph& g);

// Graph Laplacian in the column convention: entry (u, v) is d_v - d_vv on
// the diagonal and -d_vu off it, so every column sums to zero. A loop
// contributes nothing.
IntMatrix laplacian(const DirectedMultigraph& g);

// Delta * p without materializing the matrix:
// (Delta p)_u = d_u p_u - sum over edges e with head u of p_tail(e).
std::vector<Int> laplacian_apply(const DirectedMultigraph& g, const std::vector<Int>& p);

// in-degree == out-degree at every vertex (equivalently Delta 1 = 0).
bool is_eulerian(const DirectedMultigraph& g);

// Bookkeeping for the lifted multigraph: which original edge each lifted
// edge copies, and the lifted ids of each original edge.
struct EdgeLiftMap {
    std::vector<std::pair<int, int>> forward; // lifted id -> (original id, copy index 1..pi_tail)
    std::vector<std::vector<int>> backward;   // original id -> lifted ids, ascending
};

// Replaces each edge with tail u by pi_u parallel copies (consecutive new
// ids, original edge order preserved). The lifted graph has out-degrees
// d_v * pi_v and is Eulerian exactly when Delta pi = 0.
// Throws NonPositiveEntry, DimensionMismatch, SearchSpaceTooLarge (when the
// lifted edge count would exceed an internal materialization bound).
std::pair<DirectedMultigraph, EdgeLiftMap> lift(const DirectedMultigraph& g,
                                                const std::vector<Int>& pi);

} // namespace multieuler

#endif // MULTIEULER_GRAPH_HPP
