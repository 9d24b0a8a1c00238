#include "apexg/search.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "apexg/canonical.hpp"
#include "apexg/cograph.hpp"
#include "apexg/enumerate.hpp"
#include "apexg/graph6.hpp"

namespace apexg {
namespace {

bool sets_vertex_disjoint(VertexSet a, VertexSet b) { return (a & b).empty(); }

// An induced P4's edges are exactly the edges inside its vertex set, so two
// P4 sets share an edge iff some edge of g has both ends in the overlap.
bool share_an_edge(const SmallGraph& g, VertexSet a, VertexSet b) {
    const std::uint32_t common = (a & b).bits;
    for (std::uint32_t m = common; m; m &= m - 1)
        if (g.neighbors(std::countr_zero(m)) & common) return true;
    return false;
}

std::string canonical_g6(const SmallGraph& g) {
    return g6::encode_graph6(canonical_relabel(g));
}

std::vector<char> filter_serial(const std::vector<SmallGraph>& reps, const ClassSpec& c) {
    std::vector<char> keep(reps.size(), 0);
    for (std::size_t i = 0; i < reps.size(); ++i)
        keep[i] = is_minimal_apex_obstruction(reps[i], c) ? 1 : 0;
    return keep;
}

std::vector<char> filter_parallel(const std::vector<SmallGraph>& reps, const ClassSpec& c,
                                  int workers) {
#ifndef _OPENMP
    (void)workers;
    return filter_serial(reps, c);
#else
    std::vector<char> keep(reps.size(), 0);
    const int threads = workers == 0 ? omp_get_max_threads() : workers;
#pragma omp parallel for schedule(dynamic, 32) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(reps.size()); ++i)
        keep[static_cast<std::size_t>(i)] =
            is_minimal_apex_obstruction(reps[static_cast<std::size_t>(i)], c) ? 1 : 0;
    return keep;
#endif
}

void chomp(std::string& s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
}

}  // namespace

ObstructionFlags classify_obstruction(const SmallGraph& g) {
    ObstructionFlags f;
    f.g_disconnected = !is_connected(g);
    f.complement_disconnected = !is_connected(complement(g));

    const std::vector<VertexSet> p4s = all_p4_sets(g);
    f.p4_count = static_cast<int>(p4s.size());
    bool done = false;
    for (std::size_t i = 0; i < p4s.size() && !done; ++i)
        for (std::size_t j = i + 1; j < p4s.size() && !done; ++j) {
            if (sets_vertex_disjoint(p4s[i], p4s[j])) {
                f.has_two_vertex_disjoint_p4s = true;
                f.has_two_edge_disjoint_p4s = true;
            } else if (!share_an_edge(g, p4s[i], p4s[j])) {
                f.has_two_edge_disjoint_p4s = true;
            }
            done = f.has_two_vertex_disjoint_p4s && f.has_two_edge_disjoint_p4s;
        }
    return f;
}

std::size_t ObstructionReport::total() const {
    std::size_t t = 0;
    for (const OrderResult& o : orders) t += o.obstructions.size();
    return t;
}

ObstructionReport find_obstructions(const ClassSpec& c, int lo, int hi,
                                    const SearchOptions& opts) {
    if (lo < 1 || hi < lo || hi > kMaxVertices)
        throw std::invalid_argument("find_obstructions: order range must satisfy 1 <= lo <= hi <= 31");

    std::map<int, EnumerationLevel> preloaded;
    std::map<int, std::string> sources;
    for (const std::string& path : opts.preload) {
        EnumerationLevel lvl = load_level_from_g6(path);
        if (lvl.n <= 12) {
            const std::uint64_t want = count_graphs_burnside(lvl.n);
            if (lvl.reps.size() != want)
                throw std::runtime_error("level file " + path + " has " +
                                         std::to_string(lvl.reps.size()) + " classes of order " +
                                         std::to_string(lvl.n) + ", expected " +
                                         std::to_string(want));
        }
        sources[lvl.n] = path;
        preloaded[lvl.n] = std::move(lvl);
    }

    ObstructionReport rep;
    rep.class_description = c.description();

    EnumerationLevel lvl;
    for (int n = 1; n <= hi; ++n) {
        if (auto it = preloaded.find(n); it != preloaded.end())
            lvl = std::move(it->second);
        else if (n == 1) {
            lvl.n = 1;
            lvl.reps = {empty_graph(1)};
        } else
            lvl = extend_level(lvl, opts.workers);

        if (n < lo) continue;

        OrderResult res;
        res.n = n;
        res.candidates = lvl.reps.size();
        res.source = sources.count(n) ? sources[n] : "internal";

        const auto t0 = std::chrono::steady_clock::now();
        const std::vector<char> keep = opts.workers == 1 ? filter_serial(lvl.reps, c)
                                                         : filter_parallel(lvl.reps, c, opts.workers);
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        for (std::size_t i = 0; i < lvl.reps.size(); ++i)
            if (keep[i]) {
                res.obstructions.push_back(lvl.reps[i]);
                res.graph6.push_back(g6::encode_graph6(lvl.reps[i]));
            }
        rep.orders.push_back(std::move(res));
    }
    return rep;
}

void write_report(const ObstructionReport& r, std::ostream& out) {
    for (const OrderResult& o : r.orders) {
        out << "order " << o.n << ": " << o.obstructions.size() << "\n";
        for (const std::string& s : o.graph6) out << s << "\n";
    }
}

void write_report_json(const ObstructionReport& r, std::ostream& out) {
    nlohmann::json doc;
    doc["class"] = r.class_description;
    doc["total"] = r.total();
    doc["orders"] = nlohmann::json::array();
    for (const OrderResult& o : r.orders) {
        nlohmann::json jo;
        jo["n"] = o.n;
        jo["count"] = o.obstructions.size();
        jo["candidates"] = o.candidates;
        jo["source"] = o.source;
        jo["obstructions"] = nlohmann::json::array();
        for (std::size_t i = 0; i < o.obstructions.size(); ++i) {
            const ObstructionFlags f = classify_obstruction(o.obstructions[i]);
            jo["obstructions"].push_back({
                {"graph6", o.graph6[i]},
                {"edges", o.obstructions[i].edge_count()},
                {"g_disconnected", f.g_disconnected},
                {"complement_disconnected", f.complement_disconnected},
                {"has_two_vertex_disjoint_p4s", f.has_two_vertex_disjoint_p4s},
                {"has_two_edge_disjoint_p4s", f.has_two_edge_disjoint_p4s},
                {"p4_count", f.p4_count},
            });
        }
        doc["orders"].push_back(std::move(jo));
    }
    out << doc.dump(2) << "\n";
}

ExpectedCatalog parse_report_text(std::istream& in) {
    ExpectedCatalog cat;
    std::string line;
    int lineno = 0;
    int current = -1;
    std::size_t declared = 0;
    std::size_t seen = 0;

    auto close_order = [&] {
        if (current != -1 && seen != declared)
            throw g6::DecodeError(g6::ErrorKind::Truncated,
                                  "order " + std::to_string(current) + " declares " +
                                      std::to_string(declared) + " graphs, lists " +
                                      std::to_string(seen));
    };

    while (std::getline(in, line)) {
        ++lineno;
        chomp(line);
        if (line.empty()) continue;
        if (line.rfind("order ", 0) == 0) {
            close_order();
            const std::size_t colon = line.find(':');
            if (colon == std::string::npos)
                throw g6::DecodeError(g6::ErrorKind::MalformedCharacter,
                                      "bad order header: " + line, lineno);
            try {
                current = std::stoi(line.substr(6, colon - 6));
                declared = static_cast<std::size_t>(std::stoul(line.substr(colon + 1)));
            } catch (const std::exception&) {
                throw g6::DecodeError(g6::ErrorKind::MalformedCharacter,
                                      "bad order header: " + line, lineno);
            }
            seen = 0;
            cat.per_order[current];  // record the order even when empty
            continue;
        }
        if (current == -1)
            throw g6::DecodeError(g6::ErrorKind::MalformedCharacter,
                                  "graph line before any order header", lineno);
        SmallGraph g = [&] {
            try {
                return g6::decode_graph6(line);
            } catch (const g6::DecodeError& e) {
                throw g6::DecodeError(e.kind(),
                                      std::string(e.what()) + " (under header for order " +
                                          std::to_string(current) + ")",
                                      lineno);
            }
        }();
        if (g.order() != current)
            throw g6::DecodeError(g6::ErrorKind::MixedOrders,
                                  "graph of order " + std::to_string(g.order()) +
                                      " under header for order " + std::to_string(current),
                                  lineno);
        cat.per_order[current].push_back(std::move(g));
        ++seen;
    }
    close_order();
    return cat;
}

VerifyResult verify_report(const ObstructionReport& report, const ExpectedCatalog& expected) {
    ExpectedCatalog found;
    for (const OrderResult& o : report.orders) found.per_order[o.n] = o.obstructions;
    return verify_catalogs(found, expected);
}

VerifyResult verify_catalogs(const ExpectedCatalog& found_cat, const ExpectedCatalog& expected) {
    std::map<int, std::set<std::string>> found;
    for (const auto& [n, graphs] : found_cat.per_order) {
        auto& s = found[n];
        for (const SmallGraph& g : graphs) s.insert(canonical_g6(g));
    }
    std::map<int, std::set<std::string>> want;
    for (const auto& [n, graphs] : expected.per_order) {
        auto& s = want[n];
        for (const SmallGraph& g : graphs) s.insert(canonical_g6(g));
    }

    std::set<int> all_orders;
    for (const auto& [n, s] : found) all_orders.insert(n);
    for (const auto& [n, s] : want) all_orders.insert(n);

    VerifyResult res;
    for (int n : all_orders) {
        OrderComparison cmp;
        cmp.n = n;
        const std::set<std::string> empty;
        const std::set<std::string>& f = found.count(n) ? found[n] : empty;
        const std::set<std::string>& w = want.count(n) ? want[n] : empty;
        cmp.found_count = f.size();
        cmp.expected_count = w.size();
        std::set_difference(f.begin(), f.end(), w.begin(), w.end(),
                            std::back_inserter(cmp.missing_from_expected));
        std::set_difference(w.begin(), w.end(), f.begin(), f.end(),
                            std::back_inserter(cmp.extra_in_expected));
        res.orders.push_back(std::move(cmp));
    }
    return res;
}

}  // namespace apexg
