#include "apexg/dot.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "apexg/canonical.hpp"
#include "apexg/graph6.hpp"

namespace apexg {
namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw std::runtime_error("dot line " + std::to_string(lineno) + ": " + msg);
}

int parse_id(const std::string& tok, int lineno) {
    std::size_t pos = 0;
    int v = -1;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        fail(lineno, "bad vertex id '" + tok + "'");
    }
    if (pos != tok.size() || v < 0 || v >= kMaxVertices)
        fail(lineno, "bad vertex id '" + tok + "'");
    return v;
}

}  // namespace

std::string to_dot(const SmallGraph& g, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    out += "  label=\"" + g6::encode_graph6(canonical_relabel(g)) + "\";\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
    return out + "}\n";
}

void write_dot(const std::vector<SmallGraph>& graphs, std::ostream& out) {
    for (std::size_t i = 0; i < graphs.size(); ++i)
        out << to_dot(graphs[i], "g" + std::to_string(i));
}

std::vector<SmallGraph> read_dot(std::istream& in) {
    std::vector<SmallGraph> out;
    std::string raw;
    int lineno = 0;
    bool inside = false;
    int max_id = -1;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trimmed(raw);
        if (line.empty()) continue;

        if (!inside) {
            if (line.rfind("graph", 0) == 0 && line.back() == '{') {
                inside = true;
                max_id = -1;
                edges.clear();
                continue;
            }
            fail(lineno, "expected 'graph <name> {'");
        }
        if (line == "}") {
            if (max_id < 0) fail(lineno, "graph block with no vertices");
            out.push_back(graph_from_edges(max_id + 1, edges));
            inside = false;
            continue;
        }
        if (line.rfind("label=", 0) == 0) continue;
        if (line.back() != ';') fail(lineno, "missing ';'");

        const std::string body = trimmed(line.substr(0, line.size() - 1));
        const std::size_t dash = body.find("--");
        if (dash == std::string::npos) {
            max_id = std::max(max_id, parse_id(body, lineno));
            continue;
        }
        const int u = parse_id(trimmed(body.substr(0, dash)), lineno);
        const int v = parse_id(trimmed(body.substr(dash + 2)), lineno);
        if (u == v) fail(lineno, "self loop on vertex " + std::to_string(u));
        max_id = std::max({max_id, u, v});
        edges.emplace_back(u, v);
    }
    if (inside) fail(lineno, "unterminated graph block");
    return out;
}

}  // namespace apexg
