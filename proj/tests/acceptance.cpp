// Acceptance suite: one pass/fail line per criterion. Everything here is
// exact integer equality; the stated wall-clock budgets are part of the
// pass condition for the sweeps that carry one.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "multieuler/graph.hpp"
#include "multieuler/period.hpp"
#include "multieuler/rng.hpp"
#include "multieuler/rotor.hpp"
#include "multieuler/tour.hpp"
#include "multieuler/tree_census.hpp"

#include "fixtures.hpp"
#include "generators.hpp"

using namespace multieuler;
using namespace multieuler::tests;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double elapsed_s = 0.0;
    double limit_s = 0.0; // 0 = no budget
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void fail(Outcome& out, const std::string& why) {
    if (out.pass) {
        out.detail = why;
    }
    out.pass = false;
}

// The exhaustive family shared by criteria 1, 2, 6 and 8, plus 200 seeded
// random strongly connected graphs with up to 5 vertices and 8 edges.
std::vector<DirectedMultigraph> criterion_family() {
    std::vector<DirectedMultigraph> family;
    for_each_strongly_connected(4, 6, [&](const DirectedMultigraph& g) { family.push_back(g); });
    SplitMix64 rng(1001);
    for (int i = 0; i < 200; ++i) {
        family.push_back(random_scc_graph(rng, 5, 8));
    }
    return family;
}

Outcome criterion_matrix_tree(const std::vector<DirectedMultigraph>& family) {
    Outcome out;
    out.limit_s = 60.0;
    auto start = Clock::now();
    long long checked = 0;
    for (const DirectedMultigraph& g : family) {
        KappaVector k = kappa_vector(g);
        for (int w = 0; w < g.vertex_count(); ++w) {
            Int oracle = enumerate_arborescences(g, w).size();
            if (k.counts[w] != oracle) {
                fail(out, "kappa mismatch on a " + std::to_string(g.vertex_count()) +
                              "-vertex graph: matrix-tree " + k.counts[w].str() + ", oracle " +
                              oracle.str());
            }
            ++checked;
        }
    }
    out.elapsed_s = seconds_since(start);
    if (out.elapsed_s > out.limit_s) {
        fail(out, "sweep exceeded the time budget");
    }
    if (out.pass) {
        out.detail = std::to_string(family.size()) + " graphs, " + std::to_string(checked) +
                     " root counts, all exact";
    }
    return out;
}

Outcome criterion_formula_vs_bruteforce(const std::vector<DirectedMultigraph>& family) {
    Outcome out;
    out.limit_s = 300.0;
    auto start = Clock::now();
    long long compared = 0;
    for (const DirectedMultigraph& g : family) {
        std::vector<Int> pi = analyze_graph(g).primitive_period.entries;
        Int length = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            length += pi[v] * g.out_degree(v);
        }
        if (length > 14) {
            continue;
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            Int formula = count_tours(g, pi, e).value;
            Int brute = count_tours_bruteforce(g, pi, e).value;
            if (formula != brute) {
                fail(out, "tour count mismatch from edge " + std::to_string(e) + ": formula " +
                              formula.str() + ", brute force " + brute.str());
            }
            ++compared;
        }
    }
    out.elapsed_s = seconds_since(start);
    if (out.elapsed_s > out.limit_s) {
        fail(out, "sweep exceeded the time budget");
    }
    if (out.pass) {
        out.detail = std::to_string(compared) + " start edges compared, all exact";
    }
    return out;
}

Outcome criterion_existence_iff() {
    Outcome out;
    out.limit_s = 120.0;
    auto start = Clock::now();
    long long vectors = 0;
    for_each_strongly_connected(3, 5, [&](const DirectedMultigraph& g) {
        int n = g.vertex_count();
        std::vector<int> p(n, 1);
        while (true) {
            std::vector<Int> candidate(p.begin(), p.end());
            bool kernel = true;
            for (const Int& r : laplacian_apply(g, candidate)) {
                kernel = kernel && r == 0;
            }
            bool exists = count_tours_bruteforce(g, candidate, 0).value > 0;
            if (exists != kernel) {
                fail(out, "existence mismatch: Delta p " + std::string(kernel ? "=" : "!=") +
                              " 0 but brute-force count " + (exists ? ">" : "=") + " 0");
            }
            ++vectors;
            int i = 0;
            while (i < n && p[i] == 3) {
                p[i++] = 1;
            }
            if (i == n) {
                break;
            }
            ++p[i];
        }
    });
    out.elapsed_s = seconds_since(start);
    if (out.elapsed_s > out.limit_s) {
        fail(out, "sweep exceeded the time budget");
    }
    if (out.pass) {
        out.detail = std::to_string(vectors) + " (graph, p) pairs, iff holds on all";
    }
    return out;
}

Outcome criterion_fixtures() {
    Outcome out;
    auto start = Clock::now();
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) {
            fail(out, "fixture mismatch: " + what);
        }
    };

    EulerianessSummary s2 = analyze_graph(g2());
    expect(s2.kappa.counts == std::vector<Int>{2, 1}, "g2 kappa");
    expect(s2.pham_index == 1, "g2 pham index");
    expect(s2.primitive_period.entries == std::vector<Int>{2, 1}, "g2 period");
    expect(s2.unicycles == 4, "g2 unicycles");
    expect(s2.minimal_tour_length == 4, "g2 minimal length");
    expect(count_tours(g2(), {2, 1}, 0).value == 2, "g2 count from edge 0");
    expect(count_tours(g2(), {2, 1}, 1).value == 1, "g2 count from edge 1");

    EulerianessSummary s3 = analyze_graph(c3());
    expect(s3.kappa.counts == std::vector<Int>{1, 1, 1}, "c3 kappa");
    expect(s3.minimal_tour_length == 3, "c3 minimal length");
    for (int e = 0; e < 3; ++e) {
        expect(count_tours(c3(), {1, 1, 1}, e).value == 1, "c3 count");
    }

    EulerianessSummary st = analyze_graph(t3());
    expect(st.kappa.counts == std::vector<Int>{3, 3, 3}, "t3 kappa");
    expect(st.pham_index == 3, "t3 pham index");
    expect(st.minimal_tour_length == 6, "t3 minimal length");
    for (int e = 0; e < 6; ++e) {
        expect(count_eulerian_best(t3(), e).value == 3, "t3 BEST count");
    }

    EulerianessSummary sl = analyze_graph(loop_graph());
    expect(sl.kappa.counts == std::vector<Int>{1}, "loop kappa");
    expect(sl.minimal_tour_length == 1, "loop minimal length");

    out.elapsed_s = seconds_since(start);
    if (out.pass) {
        out.detail = "g2, c3, t3, loop all exact";
    }
    return out;
}

Outcome criterion_best_degeneration() {
    Outcome out;
    auto start = Clock::now();
    SplitMix64 rng(5005);
    long long compared = 0;
    for (int i = 0; i < 100; ++i) {
        DirectedMultigraph g = random_eulerian_graph(rng, 5);
        std::vector<Int> ones(g.vertex_count(), 1);
        for (int e = 0; e < g.edge_count(); ++e) {
            Int best = count_eulerian_best(g, e).value;
            Int general = count_tours(g, ones, e).value;
            if (best != general) {
                fail(out, "BEST " + best.str() + " != general formula " + general.str());
            }
            ++compared;
        }
    }
    out.elapsed_s = seconds_since(start);
    if (out.pass) {
        out.detail = "100 Eulerian graphs, " + std::to_string(compared) + " edges, all exact";
    }
    return out;
}

Outcome criterion_kernel_and_lift(const std::vector<DirectedMultigraph>& family) {
    Outcome out;
    auto start = Clock::now();
    for (const DirectedMultigraph& g : family) {
        KappaVector k = kappa_vector(g);
        for (const Int& r : laplacian_apply(g, k.counts)) {
            if (r != 0) {
                fail(out, "Delta kappa != 0 on a " + std::to_string(g.vertex_count()) +
                              "-vertex graph");
            }
        }
    }
    SplitMix64 rng(7007);
    for (int i = 0; i < 50; ++i) {
        DirectedMultigraph g = random_scc_graph(rng, 5, 8);
        std::vector<Int> pi = analyze_graph(g).primitive_period.entries;
        auto [lifted, map] = lift(g, pi);
        for (int w = 0; w < g.vertex_count(); ++w) {
            Int scale = 1;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (v != w) {
                    scale *= pi[v];
                }
            }
            if (kappa(lifted, w) != kappa(g, w) * scale) {
                fail(out, "lifted kappa does not scale by prod pi_v at root " +
                              g.vertex_name(w));
            }
        }
    }
    out.elapsed_s = seconds_since(start);
    if (out.pass) {
        out.detail = "Delta kappa = 0 on " + std::to_string(family.size()) +
                     " graphs; lift scaling exact on 50 samples";
    }
    return out;
}

Outcome criterion_rotor_settling() {
    Outcome out;
    out.limit_s = 120.0;
    auto start = Clock::now();
    SplitMix64 rng(9009);
    int total = 0, passed = 0;
    for (int i = 0; i < 100; ++i) {
        DirectedMultigraph g = random_scc_graph(rng, 5, 8);
        SettlingAggregate agg = check_settles(g, 10, 9009 + static_cast<std::uint64_t>(i));
        total += agg.trials;
        passed += agg.passes;
        if (agg.failures != 0) {
            fail(out, "a rotor walk settled with the wrong period or an invalid tour");
        }
    }
    out.elapsed_s = seconds_since(start);
    if (out.elapsed_s > out.limit_s) {
        fail(out, "sweep exceeded the time budget");
    }
    if (out.pass) {
        out.detail = std::to_string(passed) + "/" + std::to_string(total) +
                     " walks settled at the minimal period";
    }
    return out;
}

Outcome criterion_constructed_tours(const std::vector<DirectedMultigraph>& family) {
    Outcome out;
    auto start = Clock::now();
    for (const DirectedMultigraph& g : family) {
        EulerianessSummary s = analyze_graph(g);
        const std::vector<Int>& pi = s.primitive_period.entries;

        Tour t = construct_tour(g, pi);
        if (!validate_tour(g, pi, t).ok) {
            fail(out, "constructed tour fails validation");
        }
        if (Int(t.edge_ids.size()) != s.minimal_tour_length) {
            fail(out, "constructed tour length " + std::to_string(t.edge_ids.size()) +
                          " != U/M = " + s.minimal_tour_length.str());
        }

        std::vector<Int> doubled;
        doubled.reserve(pi.size());
        for (const Int& x : pi) {
            doubled.push_back(2 * x);
        }
        Tour t2 = construct_tour(g, doubled);
        if (!validate_tour(g, doubled, t2).ok ||
            Int(t2.edge_ids.size()) != 2 * s.minimal_tour_length) {
            fail(out, "doubled-pi tour is invalid or has the wrong length");
        }
    }
    out.elapsed_s = seconds_since(start);
    if (out.pass) {
        out.detail = std::to_string(family.size()) +
                     " graphs: minimal and doubled tours validate with exact lengths";
    }
    return out;
}

} // namespace

int main() {
    std::vector<DirectedMultigraph> family = criterion_family();

    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {"matrix-tree kappa equals arborescence enumeration",
         [&] { return criterion_matrix_tree(family); }},
        {"tour-count formula equals brute-force enumeration",
         [&] { return criterion_formula_vs_bruteforce(family); }},
        {"tours exist exactly when Delta p = 0",
         [] { return criterion_existence_iff(); }},
        {"fixed-point fixtures (g2, c3, t3, loop)",
         [] { return criterion_fixtures(); }},
        {"BEST degeneration at pi = 1",
         [] { return criterion_best_degeneration(); }},
        {"Delta kappa = 0 and lifted-kappa scaling",
         [&] { return criterion_kernel_and_lift(family); }},
        {"rotor walks settle at the minimal tour length",
         [] { return criterion_rotor_settling(); }},
        {"constructed tours validate with length U/M",
         [&] { return criterion_constructed_tours(family); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out = criteria[i].run();
        failures += out.pass ? 0 : 1;
        std::printf("[%zu/%zu] %s  %s (%s", i + 1, criteria.size(), out.pass ? "PASS" : "FAIL",
                    criteria[i].name, out.detail.c_str());
        if (out.limit_s > 0) {
            std::printf("; %.1fs <= %.0fs", out.elapsed_s, out.limit_s);
        } else {
            std::printf("; %.1fs", out.elapsed_s);
        }
        std::printf(")\n");
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    } else {
        std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
    }
    return failures == 0 ? 0 : 1;
}
