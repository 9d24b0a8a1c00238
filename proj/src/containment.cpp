#include "apexg/containment.hpp"

#include <algorithm>
#include <array>

#include "apexg/canonical.hpp"

namespace apexg {
namespace {

// Next k-subset of {0..n-1} in lexicographic order over sorted index
// vectors; returns false when exhausted.
bool next_combination(std::array<int, kMaxVertices>& c, int k, int n) {
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::optional<VertexSet> find_by_subsets(const SmallGraph& g, const SmallGraph& h) {
    const int k = h.order();
    const CanonicalForm want = canonical_form(h);
    std::array<int, kMaxVertices> c{};
    for (int i = 0; i < k; ++i) c[i] = i;
    do {
        VertexSet s;
        for (int i = 0; i < k; ++i) s.add(c[i]);
        if (canonical_form(induced(g, s)) == want) return s;
    } while (next_combination(c, k, g.order()));
    return std::nullopt;
}

struct Matcher {
    const SmallGraph& g;
    const SmallGraph& h;
    std::array<int, kMaxVertices> pattern_order{};  // h vertices, by descending degree
    std::array<int, kMaxVertices> image{};          // h vertex -> g vertex
    std::uint32_t used = 0;

    Matcher(const SmallGraph& host, const SmallGraph& pat) : g(host), h(pat) {
        for (int v = 0; v < h.order(); ++v) pattern_order[v] = v;
        std::sort(pattern_order.begin(), pattern_order.begin() + h.order(),
                  [&](int a, int b) {
                      return h.degree(a) != h.degree(b) ? h.degree(a) > h.degree(b) : a < b;
                  });
    }

    bool extend(int depth) {
        if (depth == h.order()) return true;
        const int pv = pattern_order[depth];
        for (int gv = 0; gv < g.order(); ++gv) {
            if ((used >> gv) & 1u) continue;
            if (g.degree(gv) < h.degree(pv)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                const int pu = pattern_order[d];
                // induced: edges and non-edges must both transfer
                ok = h.adjacent(pu, pv) == g.adjacent(image[pu], gv);
            }
            if (!ok) continue;
            image[pv] = gv;
            used |= (1u << gv);
            if (extend(depth + 1)) return true;
            used &= ~(1u << gv);
        }
        return false;
    }
};

}  // namespace

std::optional<VertexSet> find_induced(const SmallGraph& g, const SmallGraph& h) {
    if (h.order() > g.order()) return std::nullopt;
    if (h.order() <= 5) return find_by_subsets(g, h);
    Matcher m(g, h);
    if (!m.extend(0)) return std::nullopt;
    VertexSet s;
    for (int v = 0; v < h.order(); ++v) s.add(m.image[v]);
    return s;
}

bool contains_induced(const SmallGraph& g, const SmallGraph& h) {
    return find_induced(g, h).has_value();
}

std::uint64_t count_induced(const SmallGraph& g, const SmallGraph& h) {
    if (h.order() > g.order())
        throw std::invalid_argument("count_induced: pattern larger than host");
    const int k = h.order();
    const CanonicalForm want = canonical_form(h);
    std::array<int, kMaxVertices> c{};
    for (int i = 0; i < k; ++i) c[i] = i;
    std::uint64_t count = 0;
    do {
        VertexSet s;
        for (int i = 0; i < k; ++i) s.add(c[i]);
        if (canonical_form(induced(g, s)) == want) ++count;
    } while (next_combination(c, k, g.order()));
    return count;
}

}  // namespace apexg
