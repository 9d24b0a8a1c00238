#ifndef APEXG_CONTAINMENT_HPP
#define APEXG_CONTAINMENT_HPP

#include <cstdint>
#include <optional>

#include "apexg/small_graph.hpp"

namespace apexg {

/// True iff some vertex subset of g induces a graph isomorphic to h.
bool contains_induced(const SmallGraph& g, const SmallGraph& h);

/// Witness subset, or nullopt. Backtracking vertex mapping with degree
/// pruning; patterns on at most 5 vertices fall back to subset enumeration.
std::optional<VertexSet> find_induced(const SmallGraph& g, const SmallGraph& h);

/// Number of vertex subsets S of g with induced(g, S) isomorphic to h.
std::uint64_t count_induced(const SmallGraph& g, const SmallGraph& h);

}  // namespace apexg

#endif
