// Command-line front end: file ingestion plus one subcommand per analysis,
// with stable human-readable and JSON output for scripting.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "multieuler/errors.hpp"
#include "multieuler/graph.hpp"
#include "multieuler/graph_io.hpp"
#include "multieuler/period.hpp"
#include "multieuler/rotor.hpp"
#include "multieuler/tour.hpp"
#include "multieuler/tree_census.hpp"

namespace {

using multieuler::DirectedMultigraph;
using multieuler::Int;
using ordered_json = nlohmann::ordered_json;

// Exit-code contract, frozen for scripting.
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitStructuralError = 2;
constexpr int kExitSearchSpaceTooLarge = 3;

DirectedMultigraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw multieuler::Error("cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return multieuler::parse_graph_file(buffer.str());
}

void require_strongly_connected(const DirectedMultigraph& g) {
    if (auto pair = multieuler::find_unreachable_pair(g)) {
        throw multieuler::NotStronglyConnected(
            "graph is not strongly connected: no directed path from '" +
                g.vertex_name(pair->first) + "' to '" + g.vertex_name(pair->second) + "'",
            g.vertex_name(pair->first), g.vertex_name(pair->second));
    }
}

// --pi accepts "primitive" or a comma-separated positive vector in vertex order.
std::vector<Int> resolve_pi(const DirectedMultigraph& g, const std::string& spec) {
    if (spec == "primitive") {
        return multieuler::primitive_period_vector(g).entries;
    }
    std::vector<Int> pi;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            pi.emplace_back(item);
        } catch (const std::exception&) {
            throw multieuler::Error("bad --pi entry '" + item + "'");
        }
    }
    if (static_cast<int>(pi.size()) != g.vertex_count()) {
        throw multieuler::DimensionMismatch(
            "--pi has " + std::to_string(pi.size()) + " entries, graph has " +
            std::to_string(g.vertex_count()) + " vertices");
    }
    return pi;
}

std::vector<int> parse_edge_id_list(const std::string& spec) {
    std::vector<int> ids;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int id = std::stoi(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            ids.push_back(id);
        } catch (const std::exception&) {
            throw multieuler::Error("bad edge id '" + item + "' in --tour");
        }
    }
    return ids;
}

ordered_json vertex_map(const DirectedMultigraph& g, const std::vector<Int>& values) {
    ordered_json obj = ordered_json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
        obj[g.vertex_name(v)] = values[v].str();
    }
    return obj;
}

std::string vertex_map_text(const DirectedMultigraph& g, const std::vector<Int>& values) {
    std::string out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v > 0) {
            out += ' ';
        }
        out += g.vertex_name(v) + "=" + values[v].str();
    }
    return out;
}

int cmd_analyze(const std::string& path, bool json, bool oracle, std::int64_t arb_cap) {
    DirectedMultigraph g = load_graph(path);
    require_strongly_connected(g);
    multieuler::EulerianessSummary s = multieuler::analyze_graph(g);

    bool oracle_agree = true;
    std::vector<Int> oracle_counts;
    if (oracle) {
        for (int w = 0; w < g.vertex_count(); ++w) {
            oracle_counts.emplace_back(multieuler::enumerate_arborescences(g, w, arb_cap).size());
            oracle_agree = oracle_agree && oracle_counts[w] == s.kappa.counts[w];
        }
    }

    if (json) {
        ordered_json out;
        out["kappa"] = vertex_map(g, s.kappa.counts);
        out["pham_index"] = s.pham_index.str();
        out["period_vector"] = vertex_map(g, s.primitive_period.entries);
        out["unicycles"] = s.unicycles.str();
        out["min_tour_length"] = s.minimal_tour_length.str();
        out["eulerian"] = s.eulerian;
        if (oracle) {
            out["oracle_kappa"] = vertex_map(g, oracle_counts);
            out["oracle_agree"] = oracle_agree;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "kappa:           " << vertex_map_text(g, s.kappa.counts) << "\n";
        std::cout << "pham_index:      " << s.pham_index.str() << "\n";
        std::cout << "period_vector:   " << vertex_map_text(g, s.primitive_period.entries) << "\n";
        std::cout << "unicycles:       " << s.unicycles.str() << "\n";
        std::cout << "min_tour_length: " << s.minimal_tour_length.str() << "\n";
        std::cout << "eulerian:        " << (s.eulerian ? "true" : "false") << "\n";
        if (oracle) {
            std::cout << "oracle_kappa:    " << vertex_map_text(g, oracle_counts) << "\n";
            std::cout << "oracle_agree:    " << (oracle_agree ? "true" : "false") << "\n";
        }
    }
    return oracle_agree ? kExitOk : kExitVerificationFailed;
}

int cmd_tour(const std::string& path, const std::string& pi_spec,
             const std::string& start_vertex, std::optional<int> first_edge, bool json) {
    DirectedMultigraph g = load_graph(path);
    require_strongly_connected(g);
    int start = start_vertex.empty() ? 0 : g.vertex_index(start_vertex);
    std::vector<Int> pi = resolve_pi(g, pi_spec);
    multieuler::Tour tour = multieuler::construct_tour(g, pi, start, first_edge);

    std::string ids;
    for (std::size_t i = 0; i < tour.edge_ids.size(); ++i) {
        if (i > 0) {
            ids += ',';
        }
        ids += std::to_string(tour.edge_ids[i]);
    }
    if (json) {
        ordered_json out;
        out["tour"] = tour.edge_ids;
        out["length"] = std::to_string(tour.edge_ids.size());
        out["start_vertex"] = g.vertex_name(start);
        out["pi"] = vertex_map(g, pi);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << ids << "\n";
    }
    return kExitOk;
}

int cmd_count(const std::string& path, const std::string& pi_spec, int start_edge, bool oracle,
              std::int64_t cap, bool json) {
    DirectedMultigraph g = load_graph(path);
    require_strongly_connected(g);
    std::vector<Int> pi = resolve_pi(g, pi_spec);
    multieuler::TourCount count = multieuler::count_tours(g, pi, start_edge);

    std::optional<Int> oracle_count;
    bool agree = true;
    if (oracle) {
        oracle_count = multieuler::count_tours_bruteforce(g, pi, start_edge, cap).value;
        agree = *oracle_count == count.value;
    }

    if (json) {
        ordered_json out;
        out["count"] = count.value.str();
        out["start_edge"] = start_edge;
        out["pi"] = vertex_map(g, pi);
        if (oracle) {
            out["oracle"] = oracle_count->str();
            out["agree"] = agree;
        }
        std::cout << out.dump(2) << "\n";
    } else if (oracle) {
        std::cout << count.value.str() << " (oracle: " << oracle_count->str() << ", "
                  << (agree ? "agree" : "MISMATCH") << ")\n";
    } else {
        std::cout << count.value.str() << "\n";
    }
    return agree ? kExitOk : kExitVerificationFailed;
}

int cmd_rotor(const std::string& path, int trials, std::uint64_t seed, bool json) {
    DirectedMultigraph g = load_graph(path);
    require_strongly_connected(g);
    multieuler::SettlingAggregate agg = multieuler::check_settles(g, trials, seed);

    if (json) {
        ordered_json out;
        out["trials"] = agg.trials;
        out["passes"] = agg.passes;
        out["failures"] = agg.failures;
        out["period"] = agg.expected_period.str();
        out["max_transient"] = agg.max_transient;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "trials:        " << agg.trials << "\n";
        std::cout << "passes:        " << agg.passes << "\n";
        std::cout << "failures:      " << agg.failures << "\n";
        std::cout << "period:        " << agg.expected_period.str() << "\n";
        std::cout << "max_transient: " << agg.max_transient << "\n";
    }
    return agg.failures == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const std::string& path, const std::string& pi_spec, const std::string& tour_spec) {
    DirectedMultigraph g = load_graph(path);
    std::vector<Int> pi = resolve_pi(g, pi_spec);
    multieuler::Tour tour{parse_edge_id_list(tour_spec)};
    multieuler::ValidationReport report = multieuler::validate_tour(g, pi, tour);
    if (report.ok) {
        std::cout << "valid\n";
        return kExitOk;
    }
    std::cout << "invalid: " << report.message << "\n";
    return kExitVerificationFailed;
}

int cmd_dump(const std::string& path) {
    std::cout << multieuler::dump_graph(load_graph(path));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multi-Eulerian tour analysis of directed multigraphs"};
    app.require_subcommand(1);

    std::string path;
    std::string pi_spec = "primitive";
    std::string start_vertex;
    std::string tour_spec;
    int start_edge = 0;
    int first_edge = -1;
    int trials = 10;
    std::uint64_t seed = 0;
    std::int64_t bf_cap = multieuler::kDefaultTourLengthCap;
    std::int64_t arb_cap = multieuler::kDefaultArborescenceCap;
    bool json = false;
    bool oracle = false;

    auto* analyze = app.add_subcommand("analyze", "kappa vector, Pham index, period vector, "
                                                  "unicycle count, minimal tour length");
    analyze->add_option("file", path, "graph file")->required();
    analyze->add_flag("--json", json, "machine-readable output");
    analyze->add_flag("--oracle", oracle, "cross-check kappa against arborescence enumeration");
    analyze->add_option("--arb-cap", arb_cap, "search-space cap for the enumeration oracle")
        ->check(CLI::PositiveNumber);

    auto* tour = app.add_subcommand("tour", "construct a pi-Eulerian tour");
    tour->add_option("file", path, "graph file")->required();
    tour->add_option("--pi", pi_spec, "'primitive' or comma-separated positive vector");
    tour->add_option("--start-vertex", start_vertex, "vertex token (default: first vertex)");
    tour->add_option("--first-edge", first_edge, "rotate the tour to start with this edge id")
        ->check(CLI::NonNegativeNumber);
    tour->add_flag("--json", json, "machine-readable output");

    auto* count = app.add_subcommand("count", "count pi-Eulerian tours from a start edge");
    count->add_option("file", path, "graph file")->required();
    count->add_option("--pi", pi_spec, "'primitive' or comma-separated positive vector");
    count->add_option("--start-edge", start_edge, "edge id the counted tours begin with");
    count->add_flag("--oracle", oracle, "also run the brute-force enumeration and compare");
    count->add_option("--cap", bf_cap, "tour-length cap for the brute-force oracle")
        ->check(CLI::PositiveNumber);
    count->add_flag("--json", json, "machine-readable output");

    auto* rotor = app.add_subcommand("rotor", "check rotor walks settle into minimal tours");
    rotor->add_option("file", path, "graph file")->required();
    rotor->add_option("--trials", trials, "number of random rotor initializations")
        ->check(CLI::NonNegativeNumber);
    rotor->add_option("--seed", seed, "seed for reproducible trials");
    rotor->add_flag("--json", json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "validate an edge-id tour against pi");
    verify->add_option("file", path, "graph file")->required();
    verify->add_option("--tour", tour_spec, "comma-separated edge ids")->required();
    verify->add_option("--pi", pi_spec, "'primitive' or comma-separated positive vector");

    auto* dump = app.add_subcommand("dump", "parse and re-emit the normalized edge list");
    dump->add_option("file", path, "graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitStructuralError;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(path, json, oracle, arb_cap);
        }
        if (tour->parsed()) {
            std::optional<int> fe;
            if (first_edge >= 0) {
                fe = first_edge;
            }
            return cmd_tour(path, pi_spec, start_vertex, fe, json);
        }
        if (count->parsed()) {
            return cmd_count(path, pi_spec, start_edge, oracle, bf_cap, json);
        }
        if (rotor->parsed()) {
            return cmd_rotor(path, trials, seed, json);
        }
        if (verify->parsed()) {
            return cmd_verify(path, pi_spec, tour_spec);
        }
        if (dump->parsed()) {
            return cmd_dump(path);
        }
    } catch (const multieuler::SearchSpaceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSearchSpaceTooLarge;
    } catch (const multieuler::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSearchSpaceTooLarge;
    } catch (const multieuler::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStructuralError;
    }
    return kExitStructuralError;
}
