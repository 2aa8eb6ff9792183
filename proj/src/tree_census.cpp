#include "multieuler/tree_census.hpp"

#include <algorithm>

#include "multieuler/errors.hpp"

namespace multieuler {

namespace {

void require_strongly_connected(const DirectedMultigraph& g) {
    if (auto pair = find_unreachable_pair(g)) {
        throw NotStronglyConnected("graph is not strongly connected: no directed path from '" +
                                       g.vertex_name(pair->first) + "' to '" +
                                       g.vertex_name(pair->second) + "'",
                                   g.vertex_name(pair->first), g.vertex_name(pair->second));
    }
}

// Laplacian minor with row w and column w deleted.
IntMatrix reduced_laplacian(const DirectedMultigraph& g, int w) {
    IntMatrix full = laplacian(g);
    int n = g.vertex_count();
    IntMatrix minor;
    minor.reserve(n - 1);
    for (int u = 0; u < n; ++u) {
        if (u == w) {
            continue;
        }
        std::vector<Int> row;
        row.reserve(n - 1);
        for (int v = 0; v < n; ++v) {
            if (v != w) {
                row.push_back(full[u][v]);
            }
        }
        minor.push_back(std::move(row));
    }
    return minor;
}

} // namespace

Int determinant_exact(const IntMatrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) {
            throw NonSquare("matrix is not square");
        }
    }
    if (n == 0) {
        return 1; // empty product convention
    }

    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) {
                ++pivot;
            }
            if (pivot == n) {
                return 0;
            }
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        // Bareiss update: every division by the previous pivot is exact.
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Int kappa(const DirectedMultigraph& g, int w) {
    g.vertex_name(w); // range check
    require_strongly_connected(g);
    return determinant_exact(reduced_laplacian(g, w));
}

KappaVector kappa_vector(const DirectedMultigraph& g) {
    require_strongly_connected(g);
    KappaVector k;
    k.counts.reserve(g.vertex_count());
    for (int w = 0; w < g.vertex_count(); ++w) {
        k.counts.push_back(determinant_exact(reduced_laplacian(g, w)));
    }
    return k;
}

std::vector<std::vector<int>> enumerate_arborescences(const DirectedMultigraph& g, int w,
                                                      std::int64_t cap) {
    g.vertex_name(w); // range check
    require_strongly_connected(g);

    int n = g.vertex_count();
    std::vector<int> choosers; // vertices that pick an out-edge
    for (int v = 0; v < n; ++v) {
        if (v != w) {
            choosers.push_back(v);
        }
    }

    Int space = 1;
    for (int v : choosers) {
        space *= g.out_degree(v);
    }
    if (space > cap) {
        throw SearchSpaceTooLarge("arborescence search space " + space.str() + " exceeds cap " +
                                  std::to_string(cap));
    }

    std::vector<std::vector<int>> found;
    std::vector<std::size_t> choice(choosers.size(), 0);
    std::vector<int> next_vertex(n, -1);
    while (true) {
        // Follow the chosen out-edges; acyclic toward w means every walk
        // reaches w within n steps.
        for (std::size_t i = 0; i < choosers.size(); ++i) {
            int v = choosers[i];
            next_vertex[v] = g.edge(g.out_edges(v)[choice[i]]).head;
        }
        bool acyclic = true;
        for (int v : choosers) {
            int cur = v;
            int steps = 0;
            while (cur != w && steps <= n) {
                cur = next_vertex[cur];
                ++steps;
            }
            if (cur != w) {
                acyclic = false;
                break;
            }
        }
        if (acyclic) {
            std::vector<int> tree;
            tree.reserve(choosers.size());
            for (std::size_t i = 0; i < choosers.size(); ++i) {
                tree.push_back(g.out_edges(choosers[i])[choice[i]]);
            }
            std::sort(tree.begin(), tree.end());
            found.push_back(std::move(tree));
        }
        // next choice function, odometer style
        std::size_t pos = 0;
        while (pos < choice.size()) {
            if (++choice[pos] < static_cast<std::size_t>(g.out_degree(choosers[pos]))) {
                break;
            }
            choice[pos] = 0;
            ++pos;
        }
        if (pos == choice.size()) {
            break;
        }
    }

    std::sort(found.begin(), found.end());
    return found;
}

} // namespace multieuler
