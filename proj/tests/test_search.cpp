#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "apexg/canonical.hpp"
#include "apexg/cograph.hpp"
#include "apexg/enumerate.hpp"
#include "apexg/graph6.hpp"
#include "apexg/hereditary.hpp"
#include "apexg/search.hpp"
#include "apexg/small_graph.hpp"
#include "test_util.hpp"

using namespace apexg;

namespace {

// Literal transcription of the counting loop: for each non-member g, count
// the edges whose deletion leaves a non-member and the vertices whose
// deletion lands in the edge-apex class; keep g when both counters hit
// their maxima. Used to cross-check is_minimal_apex_obstruction, which
// short-circuits instead of counting.
bool obstruction_by_counters(const SmallGraph& g, const ClassSpec& c) {
    if (in_class(g, c)) return false;
    int i = 0;
    for (auto [u, v] : g.edges()) {
        if (!in_class(remove_edge(g, u, v), c)) ++i;
    }
    int j = 0;
    if (g.order() > 1) {
        for (int v = 0; v < g.order(); ++v) {
            SmallGraph h = delete_vertex(g, v);
            if (in_class(h, c)) {
                ++j;
                continue;
            }
            bool repaired = false;
            for (auto [x, y] : h.edges()) {
                if (in_class(remove_edge(h, x, y), c)) {
                    repaired = true;
                    break;
                }
            }
            if (repaired) ++j;
        }
    }
    const int edges = static_cast<int>(g.edges().size());
    return i == edges && (g.order() == 1 || j == g.order());
}

ExpectedCatalog catalog_of(const ObstructionReport& r) {
    ExpectedCatalog cat;
    for (const OrderResult& o : r.orders) cat.per_order[o.n] = o.obstructions;
    return cat;
}

}  // namespace

TEST_CASE("classify_obstruction reads off the structure") {
    ObstructionFlags two = classify_obstruction(testutil::two_disjoint_p4s());
    CHECK(two.g_disconnected);
    CHECK_FALSE(two.complement_disconnected);
    CHECK(two.has_two_vertex_disjoint_p4s);
    CHECK(two.has_two_edge_disjoint_p4s);
    CHECK(two.p4_count == 2);

    ObstructionFlags c5 = classify_obstruction(cycle_graph(5));
    CHECK_FALSE(c5.g_disconnected);
    CHECK_FALSE(c5.complement_disconnected);
    CHECK_FALSE(c5.has_two_vertex_disjoint_p4s);
    // Any two of the five P4s of C5 share at least one of the five edges.
    CHECK_FALSE(c5.has_two_edge_disjoint_p4s);
    CHECK(c5.p4_count == 5);

    ObstructionFlags chord = classify_obstruction(add_edge(cycle_graph(5), 0, 2));
    CHECK(chord.p4_count == 2);
    CHECK_FALSE(chord.has_two_vertex_disjoint_p4s);
    CHECK_FALSE(chord.has_two_edge_disjoint_p4s);

    ObstructionFlags join = classify_obstruction(complement(testutil::two_disjoint_p4s()));
    CHECK_FALSE(join.g_disconnected);
    CHECK(join.complement_disconnected);
    CHECK(join.has_two_vertex_disjoint_p4s);
}

TEST_CASE("the short-circuit test equals the counting loop on all order-5 classes") {
    ClassSpec cg = ClassSpec::cograph();
    for (const SmallGraph& g : enumerate_order(5).reps) {
        CAPTURE(g6::encode_graph6(g));
        CHECK(is_minimal_apex_obstruction(g, cg) == obstruction_by_counters(g, cg));
    }
}

TEST_CASE("the order-5 obstructions are the 5-cycle and the 5-cycle with a chord") {
    ObstructionReport r = find_obstructions(ClassSpec::cograph(), 5, 5);
    REQUIRE(r.orders.size() == 1);
    const OrderResult& o = r.orders[0];
    CHECK(o.n == 5);
    CHECK(o.candidates == 34);
    CHECK(o.source == "internal");
    REQUIRE(o.obstructions.size() == 2);
    CHECK(is_isomorphic(o.obstructions[0], cycle_graph(5)));
    CHECK(is_isomorphic(o.obstructions[1], add_edge(cycle_graph(5), 0, 2)));
    REQUIRE(o.graph6.size() == 2);
    CHECK(o.graph6[0] == "DLo");
    CHECK(o.graph6[1] == "DLs");
}

TEST_CASE("find_obstructions validates its range") {
    ClassSpec cg = ClassSpec::cograph();
    CHECK_THROWS_AS(find_obstructions(cg, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(find_obstructions(cg, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(find_obstructions(cg, 5, 32), std::invalid_argument);
}

TEST_CASE("report text round trips through the parser") {
    ObstructionReport r = find_obstructions(ClassSpec::cograph(), 4, 6);
    std::ostringstream out;
    write_report(r, out);

    std::istringstream in(out.str());
    ExpectedCatalog cat = parse_report_text(in);
    REQUIRE(cat.per_order.size() == 3);
    CHECK(cat.per_order.at(4).empty());
    CHECK(cat.per_order.at(5).size() == 2);
    CHECK(cat.per_order.at(6).size() == 18);

    VerifyResult v = verify_report(r, cat);
    CHECK(v.ok());
}

TEST_CASE("parse_report_text rejects malformed input") {
    auto kind_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            parse_report_text(in);
            return g6::ErrorKind::Io;  // placeholder meaning "did not throw"
        } catch (const g6::DecodeError& e) {
            return e.kind();
        }
    };

    // Declared two graphs, delivered one.
    CHECK(kind_of("order 5: 2\nDLo\n") == g6::ErrorKind::Truncated);
    // Graph line before any header.
    CHECK(kind_of("DLo\n") == g6::ErrorKind::MalformedCharacter);
    // Header that does not parse.
    CHECK(kind_of("order five: 2\n") == g6::ErrorKind::MalformedCharacter);
    // Graph of the wrong order under the header.
    CHECK(kind_of("order 5: 1\nCh\n") == g6::ErrorKind::MixedOrders);
    // Undecodable graph line keeps its decode kind.
    CHECK(kind_of("order 5: 1\nD\n") == g6::ErrorKind::Truncated);
}

TEST_CASE("verify_catalogs reports diffs in both directions") {
    ObstructionReport r = find_obstructions(ClassSpec::cograph(), 5, 5);
    ExpectedCatalog found = catalog_of(r);

    ExpectedCatalog same = found;
    CHECK(verify_catalogs(found, same).ok());

    // Expected side is missing one of the two order-5 obstructions.
    ExpectedCatalog short_side = found;
    short_side.per_order[5].pop_back();
    VerifyResult missing = verify_catalogs(found, short_side);
    CHECK_FALSE(missing.ok());
    REQUIRE(missing.orders.size() == 1);
    CHECK(missing.orders[0].missing_from_expected.size() == 1);
    CHECK(missing.orders[0].extra_in_expected.empty());

    // Expected side declares an extra order with an extra graph.
    ExpectedCatalog long_side = found;
    long_side.per_order[4] = {complete_graph(4)};
    VerifyResult extra = verify_catalogs(found, long_side);
    CHECK_FALSE(extra.ok());
    REQUIRE(extra.orders.size() == 2);
    CHECK(extra.orders[0].n == 4);
    CHECK(extra.orders[0].extra_in_expected.size() == 1);
    CHECK(extra.orders[0].extra_in_expected[0] == "C~");
    CHECK(extra.orders[1].matches());

    // Isomorphic relabelings compare equal.
    ExpectedCatalog relabeled = found;
    relabeled.per_order[5][0] = cycle_graph(5);
    CHECK(verify_catalogs(found, relabeled).ok());
}

TEST_CASE("the JSON report carries counts and flags") {
    ObstructionReport r = find_obstructions(ClassSpec::cograph(), 5, 5);
    std::ostringstream out;
    write_report_json(r, out);

    nlohmann::json doc = nlohmann::json::parse(out.str());
    CHECK(doc["class"] == "cograph");
    CHECK(doc["total"] == 2);
    REQUIRE(doc["orders"].size() == 1);
    const auto& order = doc["orders"][0];
    CHECK(order["n"] == 5);
    CHECK(order["count"] == 2);
    CHECK(order["candidates"] == 34);
    REQUIRE(order["obstructions"].size() == 2);
    CHECK(order["obstructions"][0]["graph6"] == "DLo");
    CHECK(order["obstructions"][0]["edges"] == 5);
    CHECK(order["obstructions"][0]["p4_count"] == 5);
    CHECK(order["obstructions"][1]["graph6"] == "DLs");
    CHECK(order["obstructions"][1]["edges"] == 6);
    // Determinism: no timing key anywhere.
    CHECK_FALSE(order.contains("seconds"));
}

TEST_CASE("reports are byte-identical across worker counts") {
    SearchOptions serial;
    serial.workers = 1;
    SearchOptions parallel;
    parallel.workers = 0;
    ObstructionReport a = find_obstructions(ClassSpec::cograph(), 5, 7, serial);
    ObstructionReport b = find_obstructions(ClassSpec::cograph(), 5, 7, parallel);

    std::ostringstream ta, tb, ja, jb;
    write_report(a, ta);
    write_report(b, tb);
    write_report_json(a, ja);
    write_report_json(b, jb);
    CHECK(ta.str() == tb.str());
    CHECK(ja.str() == jb.str());
}

TEST_CASE("preloaded level files are validated and recorded") {
    // Write the full order-5 level to a file and resume from it.
    EnumerationLevel l5 = enumerate_order(5);
    std::string lines;
    for (const SmallGraph& g : l5.reps) lines += g6::encode_graph6(g) + "\n";
    testutil::TempFile level_file(lines);

    SearchOptions opts;
    opts.workers = 1;
    opts.preload = {level_file.path()};
    ObstructionReport r = find_obstructions(ClassSpec::cograph(), 5, 6, opts);
    REQUIRE(r.orders.size() == 2);
    CHECK(r.orders[0].source == level_file.path());
    CHECK(r.orders[0].obstructions.size() == 2);
    CHECK(r.orders[1].source == "internal");
    CHECK(r.orders[1].obstructions.size() == 18);

    // A level file with a graph missing fails the class-count check.
    std::string truncated = lines.substr(0, lines.rfind("\n", lines.size() - 2) + 1);
    testutil::TempFile bad_file(truncated);
    SearchOptions bad;
    bad.preload = {bad_file.path()};
    CHECK_THROWS_AS(find_obstructions(ClassSpec::cograph(), 5, 5, bad),
                    std::runtime_error);
}

TEST_CASE("a cluster class has its own obstruction catalog") {
    // Forbidding P3 keeps exactly the disjoint unions of cliques. The first
    // obstructions appear at order 4: the claw, the 4-cycle, and the
    // diamond, each of which keeps an induced P3 after every single edge
    // deletion while every vertex deletion is repairable.
    ClassSpec cluster = ClassSpec::excluding(ForbiddenSet({path_graph(3)}));
    ObstructionReport r = find_obstructions(cluster, 1, 4);
    REQUIRE(r.orders.size() == 4);
    CHECK(r.orders[0].obstructions.empty());
    CHECK(r.orders[1].obstructions.empty());
    CHECK(r.orders[2].obstructions.empty());
    REQUIRE(r.orders[3].obstructions.size() == 3);
    SmallGraph claw = graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    SmallGraph diamond = remove_edge(complete_graph(4), 0, 1);
    CHECK(is_isomorphic(r.orders[3].obstructions[0], claw));
    CHECK(is_isomorphic(r.orders[3].obstructions[1], cycle_graph(4)));
    CHECK(is_isomorphic(r.orders[3].obstructions[2], diamond));
    for (const SmallGraph& g : r.orders[3].obstructions) {
        CHECK(is_minimal_apex_obstruction(g, cluster));
    }
}
