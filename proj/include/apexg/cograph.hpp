#ifndef APEXG_COGRAPH_HPP
#define APEXG_COGRAPH_HPP

#include <optional>
#include <vector>

#include "apexg/hereditary.hpp"
#include "apexg/small_graph.hpp"

namespace apexg {

/// An induced path a-b-c-d: edges ab, bc, cd; non-edges ac, ad, bd.
struct P4Witness {
    int a = -1;
    int b = -1;
    int c = -1;
    int d = -1;

    VertexSet vertices() const { return VertexSet::of({a, b, c, d}); }

    friend bool operator==(const P4Witness&, const P4Witness&) = default;
};

/// First induced P4, scanning ordered quadruples (a,b,c,d) in ascending
/// lexicographic order with adjacency-mask pruning; absent when G is a
/// cograph.
std::optional<P4Witness> find_p4(const SmallGraph& g);

/// Same scan, bool-only.
bool has_induced_p4(const SmallGraph& g);

/// Independent recognizer by complement-reducibility: a graph on more than
/// one vertex is a cograph iff it or its complement is disconnected and the
/// (co-)components are cographs. Must agree with !has_induced_p4.
bool is_cograph_decomposition(const SmallGraph& g);

/// Every 4-subset inducing P4, ascending by sorted quadruple. The three
/// edges inside each set are exactly the path edges.
std::vector<VertexSet> all_p4_sets(const SmallGraph& g);

/// in_edge_apex against the built-in cograph class.
ApexResult is_edge_apex_cograph(const SmallGraph& g);

}  // namespace apexg

#endif
