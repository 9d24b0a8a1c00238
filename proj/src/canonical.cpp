#include "apexg/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <vector>

namespace apexg {
namespace {

constexpr int kMaxBits = kMaxVertices * (kMaxVertices - 1) / 2;  // 465

// Search state for the lex-min relabeling. The permutation is built one
// position at a time; "column" k holds the adjacency bits of the vertex
// placed at position k towards positions 0..k-1, most significant first.
struct CanonSearch {
    const SmallGraph& g;
    int n;
    int total_bits;

    std::uint8_t partial[kMaxBits];
    std::uint8_t best[kMaxBits];
    std::uint8_t chosen[kMaxVertices];
    std::uint8_t best_perm[kMaxVertices];
    std::uint32_t cur_col[kMaxVertices];
    std::uint8_t rank[kMaxVertices];  // initial (degree, neighbor degrees) rank
    std::uint32_t used = 0;
    bool best_valid = false;
    std::uint64_t best_version = 0;
    int diverge_at = std::numeric_limits<int>::max();

    explicit CanonSearch(const SmallGraph& graph) : g(graph), n(graph.order()) {
        total_bits = n * (n - 1) / 2;
        std::memset(cur_col, 0, sizeof(cur_col));
        compute_ranks();
    }

    void compute_ranks() {
        // Partition vertices by (degree, sorted neighbor degrees); the rank
        // only orders tie-breaking, correctness never depends on it.
        std::array<std::uint64_t, kMaxVertices> key{};
        for (int v = 0; v < n; ++v) {
            std::array<int, kMaxVertices> nd{};
            int cnt = 0;
            for (std::uint32_t m = g.neighbors(v); m; m &= m - 1)
                nd[cnt++] = g.degree(std::countr_zero(m));
            std::sort(nd.begin(), nd.begin() + cnt);
            std::uint64_t k = static_cast<std::uint64_t>(cnt);
            for (int i = 0; i < cnt; ++i) k = k * 37 + static_cast<std::uint64_t>(nd[i]) + 1;
            key[v] = k;
        }
        std::array<int, kMaxVertices> idx{};
        for (int v = 0; v < n; ++v) idx[v] = v;
        std::sort(idx.begin(), idx.begin() + n,
                  [&](int a, int b) { return key[a] != key[b] ? key[a] < key[b] : a < b; });
        // equal keys share a rank so the sort below stays stable across labelings
        int r = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && key[idx[i]] != key[idx[i - 1]]) ++r;
            rank[idx[i]] = static_cast<std::uint8_t>(r);
        }
    }

    bool twin(int u, int v) const {
        std::uint32_t au = g.neighbors(u), av = g.neighbors(v);
        if (au == av) return true;  // non-adjacent twins
        return (au | (1u << u)) == (av | (1u << v));  // adjacent twins
    }

    void run() { dfs(0, 0); }

    void dfs(int level, int offset) {
        if (level == n) {
            if (!best_valid || diverge_at != std::numeric_limits<int>::max()) {
                std::memcpy(best, partial, static_cast<std::size_t>(total_bits));
                std::memcpy(best_perm, chosen, static_cast<std::size_t>(n));
                best_valid = true;
                ++best_version;
                diverge_at = std::numeric_limits<int>::max();
            }
            return;
        }

        // candidates = unused vertices minus direct twins of an earlier
        // candidate (the transposition fixes the prefix, so the skipped
        // subtree repeats the kept one), sorted by (column, rank, index)
        std::uint64_t cand[kMaxVertices];
        int cand_count = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            bool dup = false;
            for (int i = 0; i < cand_count && !dup; ++i)
                dup = twin(static_cast<int>(cand[i] & 0xff), v);
            if (dup) continue;
            cand[cand_count++] = (static_cast<std::uint64_t>(cur_col[v]) << 16) |
                                 (static_cast<std::uint64_t>(rank[v]) << 8) |
                                 static_cast<std::uint64_t>(v);
        }
        std::sort(cand, cand + cand_count);

        std::uint32_t best_seg = 0;
        std::uint64_t seg_version = 0;
        bool seg_ready = false;

        for (int i = 0; i < cand_count; ++i) {
            const int v = static_cast<int>(cand[i] & 0xff);
            const std::uint32_t col = static_cast<std::uint32_t>(cand[i] >> 16);

            int child_diverge = diverge_at;
            if (best_valid && diverge_at >= offset) {
                if (!seg_ready || seg_version != best_version) {
                    best_seg = 0;
                    for (int j = 0; j < level; ++j)
                        best_seg = (best_seg << 1) | best[offset + j];
                    seg_version = best_version;
                    seg_ready = true;
                }
                if (col > best_seg) break;  // ascending columns: the rest only grow
                if (col < best_seg) {
                    std::uint32_t x = col ^ best_seg;
                    int high = 31 - std::countl_zero(x);
                    child_diverge = offset + (level - 1 - high);
                }
            }

            for (int j = 0; j < level; ++j)
                partial[offset + j] = static_cast<std::uint8_t>((col >> (level - 1 - j)) & 1u);

            chosen[level] = static_cast<std::uint8_t>(v);
            used |= (1u << v);
            for (int w = 0; w < n; ++w)
                if (!((used >> w) & 1u))
                    cur_col[w] = (cur_col[w] << 1) | ((g.neighbors(w) >> v) & 1u);

            const int saved_diverge = diverge_at;
            const std::uint64_t saved_version = best_version;
            diverge_at = child_diverge;
            dfs(level + 1, offset + level);
            diverge_at = (best_version != saved_version) ? std::numeric_limits<int>::max()
                                                         : saved_diverge;

            for (int w = 0; w < n; ++w)
                if (!((used >> w) & 1u)) cur_col[w] >>= 1;
            used &= ~(1u << v);
        }
    }
};

CanonicalForm pack_bits(int n, const std::uint8_t* bits, int total) {
    CanonicalForm f;
    f.n = static_cast<std::uint8_t>(n);
    for (int t = 0; t < total; ++t)
        if (bits[t]) f.words[t >> 6] |= (1ull << (63 - (t & 63)));
    return f;
}

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
    CanonSearch s(g);
    s.run();
    return pack_bits(g.order(), s.best, s.total_bits);
}

SmallGraph canonical_relabel(const SmallGraph& g) {
    CanonSearch s(g);
    s.run();
    const int n = g.order();
    SmallGraph h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(s.best_perm[i], s.best_perm[j])) h.set_edge(i, j);
    return h;
}

SmallGraph graph_from_form(const CanonicalForm& f) {
    const int n = f.n;
    SmallGraph g(n);
    int t = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++t)
            if (f.words[t >> 6] & (1ull << (63 - (t & 63)))) g.set_edge(u, v);
    return g;
}

CanonicalForm canonical_form_bruteforce(const SmallGraph& g) {
    const int n = g.order();
    const int total = n * (n - 1) / 2;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;

    std::uint8_t bits[kMaxBits];
    std::uint8_t best[kMaxBits];
    bool have = false;
    do {
        int t = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                bits[t++] = g.adjacent(perm[u], perm[v]) ? 1 : 0;
        if (!have || std::memcmp(bits, best, static_cast<std::size_t>(total)) < 0) {
            std::memcpy(best, bits, static_cast<std::size_t>(total));
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return pack_bits(n, best, total);
}

bool is_isomorphic(const SmallGraph& g, const SmallGraph& h) {
    if (g.order() != h.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    std::array<int, kMaxVertices> dg{}, dh{};
    for (int v = 0; v < g.order(); ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    std::sort(dg.begin(), dg.begin() + g.order());
    std::sort(dh.begin(), dh.begin() + h.order());
    if (!std::equal(dg.begin(), dg.begin() + g.order(), dh.begin())) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace apexg
