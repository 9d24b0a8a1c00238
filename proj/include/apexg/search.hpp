#ifndef APEXG_SEARCH_HPP
#define APEXG_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "apexg/hereditary.hpp"
#include "apexg/small_graph.hpp"

namespace apexg {

/// Structural descriptors an obstruction can be sliced by: connectivity of
/// the graph and its complement, P4 census, and disjoint-P4 packing.
struct ObstructionFlags {
    bool g_disconnected = false;
    bool complement_disconnected = false;
    bool has_two_vertex_disjoint_p4s = false;
    bool has_two_edge_disjoint_p4s = false;
    int p4_count = 0;

    friend bool operator==(const ObstructionFlags&, const ObstructionFlags&) = default;
};

ObstructionFlags classify_obstruction(const SmallGraph& g);

/// Search outcome for a single order. Obstructions are canonically labeled
/// and sorted by (edge count, canonical bitstring); graph6[i] encodes
/// obstructions[i].
struct OrderResult {
    int n = 0;
    std::vector<SmallGraph> obstructions;
    std::vector<std::string> graph6;
    std::uint64_t candidates = 0;  // isomorphism classes examined
    double seconds = 0.0;          // wall clock, diagnostics only
    std::string source;            // "internal" or the level file path
};

struct ObstructionReport {
    std::string class_description;
    std::vector<OrderResult> orders;  // ascending n, exactly the requested range

    std::size_t total() const;
};

struct SearchOptions {
    int workers = 0;                   // 0 = all hardware threads, 1 = serial path
    std::vector<std::string> preload;  // graph6 level files, revalidated on load
};

/// Filters every isomorphism class of each order in [lo, hi] through
/// is_minimal_apex_obstruction. Levels are built by augmentation from
/// order 1, or resumed from preloaded level files where supplied.
ObstructionReport find_obstructions(const ClassSpec& c, int lo, int hi,
                                    const SearchOptions& opts = {});

/// Plain-text report: per order one header line `order <n>: <count>`
/// followed by that many canonical graph6 lines. Byte-identical across
/// worker counts.
void write_report(const ObstructionReport& r, std::ostream& out);

/// Same content as the text report plus per-obstruction classifier flags,
/// as a JSON document. No timing fields, so output stays deterministic.
void write_report_json(const ObstructionReport& r, std::ostream& out);

/// Decoded golden catalog: expected obstructions keyed by order.
struct ExpectedCatalog {
    std::map<int, std::vector<SmallGraph>> per_order;
};

/// Parses the write_report text format. Throws g6::DecodeError with line
/// and order context on malformed headers, undecodable lines, count
/// mismatches, or graphs of the wrong order.
ExpectedCatalog parse_report_text(std::istream& in);

/// Diff of one order, both sides reduced to canonical graph6 strings.
/// missing_from_expected: found by the search, absent from the catalog.
/// extra_in_expected: in the catalog, not found by the search.
struct OrderComparison {
    int n = 0;
    std::size_t found_count = 0;
    std::size_t expected_count = 0;
    std::vector<std::string> missing_from_expected;
    std::vector<std::string> extra_in_expected;

    bool matches() const {
        return missing_from_expected.empty() && extra_in_expected.empty();
    }
};

struct VerifyResult {
    std::vector<OrderComparison> orders;  // every order present on either side

    bool ok() const {
        for (const OrderComparison& o : orders)
            if (!o.matches()) return false;
        return true;
    }
};

/// Per-order set comparison up to isomorphism.
VerifyResult verify_report(const ObstructionReport& report, const ExpectedCatalog& expected);

/// Same comparison between two parsed catalogs (e.g. a saved report file
/// against the golden one).
VerifyResult verify_catalogs(const ExpectedCatalog& found, const ExpectedCatalog& expected);

}  // namespace apexg

#endif
