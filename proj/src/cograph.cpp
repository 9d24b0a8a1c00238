#include "apexg/cograph.hpp"

#include <bit>

namespace apexg {
namespace {

// Neighborhoods of the complement within a subset, for co-component
// traversal without materializing the complement graph.
std::uint32_t co_neighbors(const SmallGraph& g, int v, std::uint32_t within) {
    return within & ~g.neighbors(v) & ~(1u << v);
}

std::optional<P4Witness> scan_p4(const SmallGraph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        const std::uint32_t na = g.neighbors(a);
        for (std::uint32_t mb = na; mb; mb &= mb - 1) {
            const int b = std::countr_zero(mb);
            const std::uint32_t nb = g.neighbors(b);
            // c adjacent to b but not to a (and c != a).
            for (std::uint32_t mc = nb & ~na & ~(1u << a); mc; mc &= mc - 1) {
                const int c = std::countr_zero(mc);
                // d adjacent to c only, distinct from a and b.
                const std::uint32_t md =
                    g.neighbors(c) & ~na & ~nb & ~(1u << a) & ~(1u << b);
                if (md) return P4Witness{a, b, c, std::countr_zero(md)};
            }
        }
    }
    return std::nullopt;
}

bool decompose(const SmallGraph& g, std::uint32_t within) {
    if (std::popcount(within) <= 1) return true;

    const std::vector<VertexSet> parts = components_within(g, VertexSet(within));
    if (parts.size() > 1) {
        for (VertexSet p : parts)
            if (!decompose(g, p.bits)) return false;
        return true;
    }

    // Connected: split by components of the complement instead.
    std::vector<std::uint32_t> co_parts;
    std::uint32_t rest = within;
    while (rest) {
        std::uint32_t comp = 1u << std::countr_zero(rest);
        std::uint32_t frontier = comp;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t m = frontier; m; m &= m - 1)
                next |= co_neighbors(g, std::countr_zero(m), within);
            frontier = next & ~comp;
            comp |= frontier;
        }
        co_parts.push_back(comp);
        rest &= ~comp;
    }
    if (co_parts.size() == 1) return false;  // connected and co-connected
    for (std::uint32_t p : co_parts)
        if (!decompose(g, p)) return false;
    return true;
}

}  // namespace

std::optional<P4Witness> find_p4(const SmallGraph& g) { return scan_p4(g); }

bool has_induced_p4(const SmallGraph& g) { return scan_p4(g).has_value(); }

bool is_cograph_decomposition(const SmallGraph& g) {
    return decompose(g, g.vertex_mask());
}

std::vector<VertexSet> all_p4_sets(const SmallGraph& g) {
    std::vector<VertexSet> out;
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const std::uint32_t s =
                        (1u << i) | (1u << j) | (1u << k) | (1u << l);
                    int edges = 0;
                    bool degrees_ok = true;
                    for (int v : {i, j, k, l}) {
                        const int d = std::popcount(g.neighbors(v) & s);
                        if (d < 1 || d > 2) {
                            degrees_ok = false;
                            break;
                        }
                        edges += d;
                    }
                    // 4 vertices, 3 edges, all inner degrees 1 or 2: only P4.
                    if (degrees_ok && edges == 6) out.push_back(VertexSet(s));
                }
    return out;
}

ApexResult is_edge_apex_cograph(const SmallGraph& g) {
    return in_edge_apex(g, ClassSpec::cograph());
}

}  // namespace apexg
