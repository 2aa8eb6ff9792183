#include "multieuler/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

#include "multieuler/errors.hpp"

namespace multieuler {

namespace {

constexpr long kMaxMultiplicity = 1'000'000;

bool valid_token(const std::string& tok) {
    if (tok.empty()) {
        return false;
    }
    for (char c : tok) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return true;
}

} // namespace

DirectedMultigraph parse_graph_file(const std::string& text) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const std::string& tok) {
        if (index.emplace(tok, static_cast<int>(names.size())).second) {
            names.push_back(tok);
        }
    };

    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }

        std::istringstream fields(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (fields >> tok) {
            tokens.push_back(tok);
        }
        if (tokens.size() < 2 || tokens.size() > 3) {
            throw SyntaxError(line_no, "expected `TAIL HEAD [MULT]`, got " +
                                           std::to_string(tokens.size()) + " field(s)");
        }
        if (!valid_token(tokens[0]) || !valid_token(tokens[1])) {
            throw SyntaxError(line_no, "vertex tokens must match [A-Za-z0-9_]+");
        }
        long mult = 1;
        if (tokens.size() == 3) {
            const std::string& m = tokens[2];
            bool digits = !m.empty() && m.find_first_not_of("0123456789") == std::string::npos;
            if (!digits || m.size() > 7) {
                throw BadMultiplicity("line " + std::to_string(line_no) + ": multiplicity '" + m +
                                      "' is not a positive integer <= " +
                                      std::to_string(kMaxMultiplicity));
            }
            mult = std::stol(m);
            if (mult < 1 || mult > kMaxMultiplicity) {
                throw BadMultiplicity("line " + std::to_string(line_no) + ": multiplicity " + m +
                                      " out of range [1, " + std::to_string(kMaxMultiplicity) +
                                      "]");
            }
        }
        intern(tokens[0]);
        intern(tokens[1]);
        for (long i = 0; i < mult; ++i) {
            edges.emplace_back(tokens[0], tokens[1]);
        }
    }
    if (edges.empty()) {
        throw EmptyGraph("no edge records in input");
    }
    return build_graph(names, edges);
}

std::string dump_graph(const DirectedMultigraph& g) {
    std::ostringstream out;
    for (const Edge& e : g.edges()) {
        out << g.vertex_name(e.tail) << ' ' << g.vertex_name(e.head) << '\n';
    }
    return out.str();
}

} // namespace multieuler
