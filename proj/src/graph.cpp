#include "multieuler/graph.hpp"

#include <algorithm>
#include <unordered_map>

#include "multieuler/errors.hpp"

namespace multieuler {

namespace {

// Lifting materializes edges; keep hostile pi values from exhausting memory.
constexpr std::int64_t kMaxLiftedEdges = 10'000'000;

void check_vertex(const DirectedMultigraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) {
        throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
    }
}

std::vector<bool> reachable_from_zero(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

} // namespace

const std::string& DirectedMultigraph::vertex_name(int v) const {
    check_vertex(*this, v);
    return names_[v];
}

int DirectedMultigraph::vertex_index(const std::string& name) const {
    for (int v = 0; v < vertex_count(); ++v) {
        if (names_[v] == name) {
            return v;
        }
    }
    throw UnknownVertex("unknown vertex '" + name + "'");
}

const Edge& DirectedMultigraph::edge(int id) const {
    if (id < 0 || id >= edge_count()) {
        throw UnknownEdge("edge id " + std::to_string(id) + " out of range");
    }
    return edges_[id];
}

const std::vector<int>& DirectedMultigraph::out_edges(int v) const {
    check_vertex(*this, v);
    return out_[v];
}

int DirectedMultigraph::out_degree(int v) const {
    check_vertex(*this, v);
    return static_cast<int>(out_[v].size());
}

int DirectedMultigraph::in_degree(int v) const {
    check_vertex(*this, v);
    return in_degree_[v];
}

int DirectedMultigraph::multiplicity(int u, int v) const {
    check_vertex(*this, u);
    check_vertex(*this, v);
    int count = 0;
    for (int id : out_[u]) {
        if (edges_[id].head == v) {
            ++count;
        }
    }
    return count;
}

DirectedMultigraph build_graph(const std::vector<std::string>& vertex_names,
                               const std::vector<std::pair<std::string, std::string>>& edge_list) {
    if (vertex_names.empty()) {
        throw EmptyGraph("graph must have at least one vertex");
    }
    std::unordered_map<std::string, int> index;
    for (int v = 0; v < static_cast<int>(vertex_names.size()); ++v) {
        if (!index.emplace(vertex_names[v], v).second) {
            throw DuplicateVertex("duplicate vertex '" + vertex_names[v] + "'");
        }
    }

    DirectedMultigraph g;
    g.names_ = vertex_names;
    int n = g.vertex_count();
    g.out_.resize(n);
    g.in_degree_.assign(n, 0);
    g.edges_.reserve(edge_list.size());
    for (const auto& [tail_name, head_name] : edge_list) {
        auto tail_it = index.find(tail_name);
        if (tail_it == index.end()) {
            throw UnknownVertex("unknown vertex '" + tail_name + "'");
        }
        auto head_it = index.find(head_name);
        if (head_it == index.end()) {
            throw UnknownVertex("unknown vertex '" + head_name + "'");
        }
        int id = static_cast<int>(g.edges_.size());
        g.edges_.push_back(Edge{id, tail_it->second, head_it->second});
        g.out_[tail_it->second].push_back(id);
        ++g.in_degree_[head_it->second];
    }
    return g;
}

std::optional<std::pair<int, int>> find_unreachable_pair(const DirectedMultigraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> fwd(n), rev(n);
    for (const Edge& e : g.edges()) {
        fwd[e.tail].push_back(e.head);
        rev[e.head].push_back(e.tail);
    }
    std::vector<bool> from_zero = reachable_from_zero(n, fwd);
    for (int v = 0; v < n; ++v) {
        if (!from_zero[v]) {
            return std::make_pair(0, v);
        }
    }
    std::vector<bool> to_zero = reachable_from_zero(n, rev);
    for (int v = 0; v < n; ++v) {
        if (!to_zero[v]) {
            return std::make_pair(v, 0);
        }
    }
    return std::nullopt;
}

bool is_strongly_connected(const DirectedMultigraph& g) {
    return !find_unreachable_pair(g).has_value();
}

IntMatrix laplacian(const DirectedMultigraph& g) {
    int n = g.vertex_count();
    IntMatrix m(n, std::vector<Int>(n, 0));
    // Edge t -> h adds 1 to the diagonal of column t and -1 at row h;
    // a loop cancels itself out.
    for (const Edge& e : g.edges()) {
        m[e.tail][e.tail] += 1;
        m[e.head][e.tail] -= 1;
    }
    return m;
}

std::vector<Int> laplacian_apply(const DirectedMultigraph& g, const std::vector<Int>& p) {
    int n = g.vertex_count();
    if (static_cast<int>(p.size()) != n) {
        throw DimensionMismatch("vector has " + std::to_string(p.size()) + " entries, graph has " +
                                std::to_string(n) + " vertices");
    }
    std::vector<Int> result(n);
    for (int v = 0; v < n; ++v) {
        result[v] = Int(g.out_degree(v)) * p[v];
    }
    for (const Edge& e : g.edges()) {
        result[e.head] -= p[e.tail];
    }
    return result;
}

bool is_eulerian(const DirectedMultigraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.in_degree(v) != g.out_degree(v)) {
            return false;
        }
    }
    return true;
}

std::pair<DirectedMultigraph, EdgeLiftMap> lift(const DirectedMultigraph& g,
                                                const std::vector<Int>& pi) {
    int n = g.vertex_count();
    if (static_cast<int>(pi.size()) != n) {
        throw DimensionMismatch("pi has " + std::to_string(pi.size()) + " entries, graph has " +
                                std::to_string(n) + " vertices");
    }
    Int total = 0;
    for (int v = 0; v < n; ++v) {
        if (pi[v] <= 0) {
            throw NonPositiveEntry("pi entry for vertex '" + g.vertex_name(v) +
                                   "' must be strictly positive, got " + pi[v].str());
        }
        total += pi[v] * g.out_degree(v);
    }
    if (total > kMaxLiftedEdges) {
        throw SearchSpaceTooLarge("lifted graph would have " + total.str() + " edges (limit " +
                                  std::to_string(kMaxLiftedEdges) + ")");
    }

    std::vector<std::string> names;
    names.reserve(n);
    for (int v = 0; v < n; ++v) {
        names.push_back(g.vertex_name(v));
    }

    EdgeLiftMap map;
    map.backward.resize(g.edge_count());
    std::vector<std::pair<std::string, std::string>> lifted_edges;
    lifted_edges.reserve(static_cast<std::size_t>(total.convert_to<std::int64_t>()));
    for (const Edge& e : g.edges()) {
        auto copies = pi[e.tail].convert_to<std::int64_t>();
        for (std::int64_t c = 1; c <= copies; ++c) {
            int lifted_id = static_cast<int>(lifted_edges.size());
            lifted_edges.emplace_back(names[e.tail], names[e.head]);
            map.forward.emplace_back(e.id, static_cast<int>(c));
            map.backward[e.id].push_back(lifted_id);
        }
    }
    return {build_graph(names, lifted_edges), std::move(map)};
}

} // namespace multieuler
