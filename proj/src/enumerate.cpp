#include "apexg/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "apexg/canonical.hpp"
#include "apexg/graph6.hpp"

namespace apexg {
namespace {

using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

// Candidates of one augmentation step are indexed parent-major: candidate
// idx extends parent reps[idx >> m] by a new vertex adjacent to the mask
// idx & (2^m - 1), where m is the parent order.
SmallGraph with_new_vertex(const SmallGraph& parent, std::uint32_t mask) {
    SmallGraph g = disjoint_union(parent, empty_graph(1));
    const int v = parent.order();
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
        g = add_edge(g, std::countr_zero(rest), v);
    return g;
}

int form_edges(const CanonicalForm& f) {
    int e = 0;
    for (std::uint64_t w : f.words) e += std::popcount(w);
    return e;
}

bool form_before(const CanonicalForm& a, const CanonicalForm& b) {
    const int ea = form_edges(a);
    const int eb = form_edges(b);
    if (ea != eb) return ea < eb;
    return a.words < b.words;
}

EnumerationLevel level_from_forms(int n, const FormSet& seen) {
    std::vector<CanonicalForm> forms(seen.begin(), seen.end());
    std::sort(forms.begin(), forms.end(), form_before);
    EnumerationLevel lvl;
    lvl.n = n;
    lvl.reps.reserve(forms.size());
    for (const CanonicalForm& f : forms) lvl.reps.push_back(graph_from_form(f));
    return lvl;
}

void check_extendable(const EnumerationLevel& prev) {
    if (prev.n < 1 || prev.reps.empty())
        throw std::invalid_argument("extend_level: previous level is empty");
    if (prev.n >= kMaxVertices)
        throw std::invalid_argument("extend_level: cannot extend past order 31");
}

// Exact n!/(prod j^m_j * m_j!) * 2^c for one cycle type, where c counts the
// 2-element orbits the permutation induces on vertex pairs. parts must be
// nonincreasing.
unsigned __int128 burnside_term(const std::vector<int>& parts, std::uint64_t nfact) {
    std::uint64_t stabilizer = 1;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        for (std::size_t k = i; k < j; ++k) stabilizer *= static_cast<std::uint64_t>(parts[i]);
        for (std::uint64_t k = 2; k <= j - i; ++k) stabilizer *= k;
        i = j;
    }
    int pair_cycles = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        pair_cycles += parts[i] / 2;
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            pair_cycles += std::gcd(parts[i], parts[j]);
    }
    return static_cast<unsigned __int128>(nfact / stabilizer) << pair_cycles;
}

}  // namespace

EnumerationLevel extend_level_serial(const EnumerationLevel& prev) {
    check_extendable(prev);
    const std::uint32_t masks = 1u << prev.n;
    FormSet seen;
    for (const SmallGraph& parent : prev.reps)
        for (std::uint32_t mask = 0; mask < masks; ++mask)
            seen.insert(canonical_form(with_new_vertex(parent, mask)));
    return level_from_forms(prev.n + 1, seen);
}

EnumerationLevel extend_level_parallel(const EnumerationLevel& prev, int workers) {
#ifndef _OPENMP
    (void)workers;
    return extend_level_serial(prev);
#else
    check_extendable(prev);
    const std::uint64_t per_parent = 1ull << prev.n;
    const std::uint64_t total = prev.reps.size() * per_parent;
    // Chunking bounds the candidate buffer; 2^17 forms is about 9 MB.
    const std::uint64_t chunk = 1ull << 17;
    const int threads = workers == 0 ? omp_get_max_threads() : workers;

    FormSet seen;
    std::vector<CanonicalForm> buf;
    for (std::uint64_t base = 0; base < total; base += chunk) {
        const std::uint64_t count = std::min(chunk, total - base);
        buf.resize(count);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            const std::uint64_t idx = base + static_cast<std::uint64_t>(i);
            const SmallGraph cand =
                with_new_vertex(prev.reps[idx >> prev.n],
                                static_cast<std::uint32_t>(idx & (per_parent - 1)));
            buf[static_cast<std::size_t>(i)] = canonical_form(cand);
        }
        seen.insert(buf.begin(), buf.end());
    }
    return level_from_forms(prev.n + 1, seen);
#endif
}

EnumerationLevel extend_level(const EnumerationLevel& prev, int workers) {
    if (workers == 1) return extend_level_serial(prev);
    return extend_level_parallel(prev, workers);
}

EnumerationLevel enumerate_order(int n, int workers) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("enumerate_order: order must be in 1..31");
    EnumerationLevel lvl;
    lvl.n = 1;
    lvl.reps = {empty_graph(1)};
    while (lvl.n < n) lvl = extend_level(lvl, workers);
    return lvl;
}

std::uint64_t count_graphs_burnside(int n) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("count_graphs_burnside: exact range is 1..12");
    std::uint64_t nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= static_cast<std::uint64_t>(i);

    unsigned __int128 sum = 0;
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            sum += burnside_term(parts, nfact);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    recurse(recurse, n, n);
    return static_cast<std::uint64_t>(sum / nfact);
}

EnumerationLevel load_level_from_g6(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw g6::DecodeError(g6::ErrorKind::Io, "cannot open " + path);
    const std::vector<SmallGraph> graphs = g6::read_g6_stream(in);
    if (graphs.empty()) throw g6::DecodeError(g6::ErrorKind::Io, "no graphs in " + path);
    const int n = graphs.front().order();
    for (const SmallGraph& g : graphs)
        if (g.order() != n)
            throw g6::DecodeError(g6::ErrorKind::MixedOrders,
                                  "expected order " + std::to_string(n) + ", found order " +
                                      std::to_string(g.order()) + " in " + path);
    FormSet seen;
    for (const SmallGraph& g : graphs) seen.insert(canonical_form(g));
    EnumerationLevel lvl = level_from_forms(n, seen);
    lvl.had_duplicates = lvl.reps.size() != graphs.size();
    return lvl;
}

}  // namespace apexg
