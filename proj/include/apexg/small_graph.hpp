#ifndef APEXG_SMALL_GRAPH_HPP
#define APEXG_SMALL_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apexg {

/// Largest supported order: every neighborhood fits a 32-bit word and the
/// upper triangle fits 465 bits.
inline constexpr int kMaxVertices = 31;

/// Subset of the vertices of some host graph, encoded as a bitmask over
/// vertex indices 0..n-1.
struct VertexSet {
    std::uint32_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t b) : bits(b) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.bits |= (1u << v);
        return s;
    }
    static constexpr VertexSet full(int n) {
        return VertexSet(n == 32 ? ~0u : ((1u << n) - 1u));
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1u; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    constexpr void add(int v) { bits |= (1u << v); }
    constexpr void remove(int v) { bits &= ~(1u << v); }

    /// Index of the lowest set bit; undefined when empty.
    constexpr int first() const { return std::countr_zero(bits); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint32_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
};

/// Simple undirected graph on 1..31 vertices, adjacency stored as one
/// bitmask per vertex. Value type: surgery returns new graphs, so graphs
/// can be shared freely across threads.
class SmallGraph {
  public:
    explicit SmallGraph(int n) : n_(check_order(n)) { adj_.fill(0); }

    int order() const { return n_; }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }

    /// Neighborhood of v as a bitmask.
    std::uint32_t neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return std::popcount(adj_[v]); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::uint32_t vertex_mask() const { return VertexSet::full(n_).bits; }

    /// Edges as (u,v) pairs with u < v, ascending lexicographic.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u) {
            std::uint32_t higher = adj_[u] >> (u + 1);
            for (std::uint32_t m = higher; m; m &= m - 1)
                out.emplace_back(u, u + 1 + std::countr_zero(m));
        }
        return out;
    }

    void set_edge(int u, int v) {
        check_pair(u, v);
        adj_[u] |= (1u << v);
        adj_[v] |= (1u << u);
    }

    void clear_edge(int u, int v) {
        adj_[u] &= ~(1u << v);
        adj_[v] &= ~(1u << u);
    }

    friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }

  private:
    static int check_order(int n) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("graph order must be in 1.." +
                                        std::to_string(kMaxVertices) + ", got " + std::to_string(n));
        return n;
    }
    void check_pair(int u, int v) const {
        if (u == v) throw std::invalid_argument("loop edge requested at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("vertex index out of range");
    }

    std::uint8_t n_;
    std::array<std::uint32_t, kMaxVertices> adj_;
};

// -- construction ------------------------------------------------------

SmallGraph empty_graph(int n);
SmallGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);
SmallGraph path_graph(int n);
SmallGraph cycle_graph(int n);
SmallGraph complete_graph(int n);

/// Disjoint union; vertices of b are shifted past those of a.
SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b);

// -- surgery (value semantics) ----------------------------------------

SmallGraph add_edge(const SmallGraph& g, int u, int v);
SmallGraph remove_edge(const SmallGraph& g, int u, int v);

/// Deletes v and renumbers vertices above it downward by one.
SmallGraph delete_vertex(const SmallGraph& g, int v);

SmallGraph complement(const SmallGraph& g);

/// Subgraph induced on s; vertices renumbered by ascending original index.
SmallGraph induced(const SmallGraph& g, VertexSet s);

// -- connectivity ------------------------------------------------------

/// Connected component containing `start`, restricted to `within`.
VertexSet component_of(const SmallGraph& g, int start, VertexSet within);

/// Components of the subgraph induced on `within`, ordered by smallest member.
std::vector<VertexSet> components_within(const SmallGraph& g, VertexSet within);

std::vector<VertexSet> components(const SmallGraph& g);
bool is_connected(const SmallGraph& g);

/// True iff uv lies on some cycle, i.e. G-uv still has a u-v path.
bool edge_in_cycle(const SmallGraph& g, int u, int v);

}  // namespace apexg

#endif
