#include <doctest.h>

#include <random>
#include <unordered_set>

#include "apexg/canonical.hpp"
#include "apexg/enumerate.hpp"
#include "apexg/small_graph.hpp"
#include "test_util.hpp"

using namespace apexg;

TEST_CASE("canonical form is relabeling invariant") {
    // The same path written down in two labelings: 0-1-2-3 and 2-0-3-1.
    const SmallGraph a = path_graph(4);
    const SmallGraph b = graph_from_edges(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_relabel(a) == canonical_relabel(b));
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    CHECK(canonical_form(path_graph(4)) != canonical_form(cycle_graph(4)));
    CHECK(canonical_form(path_graph(5)) != canonical_form(cycle_graph(5)));
    // Same degree sequence, different graphs: C6 vs two triangles.
    const SmallGraph c6 = cycle_graph(6);
    const SmallGraph twoK3 = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(canonical_form(c6) != canonical_form(twoK3));
}

TEST_CASE("pruned search agrees with brute force on every small graph") {
    EnumerationLevel lvl;
    lvl.n = 1;
    lvl.reps = {empty_graph(1)};
    for (int n = 1; n <= 6; ++n) {
        if (n > 1) lvl = extend_level_serial(lvl);
        for (const SmallGraph& g : lvl.reps) CHECK(canonical_form(g) == canonical_form_bruteforce(g));
    }
}

TEST_CASE("pruned search agrees with brute force on random graphs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 7 + trial % 2;
        const double p = (1 + trial % 8) / 9.0;
        const SmallGraph g = testutil::random_graph(n, p, rng);
        CHECK(canonical_form(g) == canonical_form_bruteforce(g));
    }
}

TEST_CASE("canonical_relabel realizes the form and is idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const SmallGraph g = testutil::random_graph(3 + trial % 7, 0.4, rng);
        const SmallGraph r = canonical_relabel(g);
        CHECK(canonical_form(r) == canonical_form(g));
        CHECK(canonical_relabel(r) == r);
        CHECK(graph_from_form(canonical_form(g)) == r);
    }
}

TEST_CASE("is_isomorphic") {
    CHECK(is_isomorphic(path_graph(4), complement(path_graph(4))));
    CHECK(is_isomorphic(cycle_graph(5), graph_from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})));
    CHECK(!is_isomorphic(path_graph(5), cycle_graph(5)));
    CHECK(!is_isomorphic(path_graph(4), path_graph(3)));
    CHECK(!is_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
}

TEST_CASE("forms hash consistently") {
    const CanonicalFormHash h;
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const SmallGraph g = testutil::random_graph(6, 0.5, rng);
        // Shuffled copy: move vertex 0 to the end.
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back((u + 5) % 6, (v + 5) % 6);
        const SmallGraph shifted = graph_from_edges(6, edges);
        CHECK(h(canonical_form(g)) == h(canonical_form(shifted)));
    }
}

TEST_CASE("forms work as hash keys") {
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    seen.insert(canonical_form(path_graph(4)));
    seen.insert(canonical_form(graph_from_edges(4, {{2, 0}, {0, 3}, {3, 1}})));
    seen.insert(canonical_form(cycle_graph(4)));
    CHECK(seen.size() == 2);
}
