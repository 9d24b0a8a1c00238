#include "apexg/small_graph.hpp"

namespace apexg {

SmallGraph empty_graph(int n) { return SmallGraph(n); }

SmallGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SmallGraph g(n);
    for (auto [u, v] : edges) g.set_edge(u, v);
    return g;
}

SmallGraph path_graph(int n) {
    SmallGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1);
    return g;
}

SmallGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    SmallGraph g = path_graph(n);
    g.set_edge(n - 1, 0);
    return g;
}

SmallGraph complete_graph(int n) {
    SmallGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
    return g;
}

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b) {
    SmallGraph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.set_edge(u, v);
    for (auto [u, v] : b.edges()) g.set_edge(a.order() + u, a.order() + v);
    return g;
}

SmallGraph add_edge(const SmallGraph& g, int u, int v) {
    SmallGraph h = g;
    h.set_edge(u, v);
    return h;
}

SmallGraph remove_edge(const SmallGraph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw std::invalid_argument("remove_edge: no such edge");
    SmallGraph h = g;
    h.clear_edge(u, v);
    return h;
}

SmallGraph delete_vertex(const SmallGraph& g, int v) {
    const int n = g.order();
    if (v < 0 || v >= n) throw std::invalid_argument("delete_vertex: vertex out of range");
    if (n == 1) throw std::invalid_argument("delete_vertex: cannot delete the last vertex");
    SmallGraph h(n - 1);
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        int uu = u < v ? u : u - 1;
        std::uint32_t nb = g.neighbors(u);
        // drop v's bit, then close the gap
        std::uint32_t low = nb & ((1u << v) - 1u);
        std::uint32_t high = (nb >> (v + 1)) << v;
        std::uint32_t shifted = low | high;
        for (std::uint32_t m = shifted; m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (w > uu) h.set_edge(uu, w);
        }
    }
    return h;
}

SmallGraph complement(const SmallGraph& g) {
    const int n = g.order();
    SmallGraph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.set_edge(u, v);
    return h;
}

SmallGraph induced(const SmallGraph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("induced: empty vertex set");
    if (s.bits & ~g.vertex_mask()) throw std::invalid_argument("induced: set not within V(G)");
    const auto verts = s.to_vector();
    SmallGraph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) h.set_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

VertexSet component_of(const SmallGraph& g, int start, VertexSet within) {
    std::uint32_t seen = 1u << start;
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t m = frontier; m; m &= m - 1)
            next |= g.neighbors(std::countr_zero(m));
        next &= within.bits & ~seen;
        seen |= next;
        frontier = next;
    }
    return VertexSet(seen);
}

std::vector<VertexSet> components_within(const SmallGraph& g, VertexSet within) {
    std::vector<VertexSet> out;
    std::uint32_t left = within.bits;
    while (left) {
        VertexSet c = component_of(g, std::countr_zero(left), within);
        out.push_back(c);
        left &= ~c.bits;
    }
    return out;
}

std::vector<VertexSet> components(const SmallGraph& g) {
    return components_within(g, VertexSet(g.vertex_mask()));
}

bool is_connected(const SmallGraph& g) {
    return component_of(g, 0, VertexSet(g.vertex_mask())).bits == g.vertex_mask();
}

bool edge_in_cycle(const SmallGraph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw std::invalid_argument("edge_in_cycle: no such edge");
    SmallGraph h = remove_edge(g, u, v);
    return component_of(h, u, VertexSet(h.vertex_mask())).contains(v);
}

}  // namespace apexg
