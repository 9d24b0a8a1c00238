#ifndef APEXG_CANONICAL_HPP
#define APEXG_CANONICAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

#include "apexg/small_graph.hpp"

namespace apexg {

/// Order-invariant fingerprint of a SmallGraph: the upper-triangle
/// adjacency bitstring of the relabeled graph, minimal over all vertex
/// permutations. Bit positions follow graph6 column order
/// x(0,1), x(0,2), x(1,2), x(0,3), ...; bit t lives in words[t/64] at
/// bit 63-(t%64), so word-wise integer comparison is string-lexicographic.
/// Equal forms certify isomorphism.
struct CanonicalForm {
    std::uint8_t n = 0;
    std::array<std::uint64_t, 8> words{};

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const noexcept {
        std::uint64_t h = 1469598103934665603ull ^ f.n;
        for (std::uint64_t w : f.words) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Minimal bitstring over all n! relabelings, computed by a pruned
/// branch-and-bound that must agree with canonical_form_bruteforce.
CanonicalForm canonical_form(const SmallGraph& g);

/// The relabeled graph realizing canonical_form(g).
SmallGraph canonical_relabel(const SmallGraph& g);

/// Unpacks a form back into the concrete graph it encodes; the inverse of
/// canonical_form on canonically labeled graphs, and much cheaper than
/// rerunning the search.
SmallGraph graph_from_form(const CanonicalForm& f);

/// Reference implementation: tries every permutation. Kept for testing
/// and benchmarking the pruned search; practical up to n ~ 9.
CanonicalForm canonical_form_bruteforce(const SmallGraph& g);

bool is_isomorphic(const SmallGraph& g, const SmallGraph& h);

}  // namespace apexg

#endif
