#ifndef APEXG_ENUMERATE_HPP
#define APEXG_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "apexg/small_graph.hpp"

namespace apexg {

/// All graphs of one order up to isomorphism. Representatives are in
/// canonical labeling, sorted by (edge count, canonical bitstring), so the
/// ordering is identical across runs and worker counts.
struct EnumerationLevel {
    int n = 0;
    std::vector<SmallGraph> reps;
    bool had_duplicates = false;  // set by load_level_from_g6
};

/// Isomorphism-free generation by augmentation: every representative of
/// order n-1 is extended with each of the 2^(n-1) possible neighborhoods
/// of a new vertex, candidates are canonicalized and deduplicated.
/// workers: 0 = all hardware threads, 1 = serial reference path.
EnumerationLevel enumerate_order(int n, int workers = 0);

/// One augmentation step; exposed for testing the parallel kernel against
/// the serial one and for incremental callers.
EnumerationLevel extend_level(const EnumerationLevel& prev, int workers = 0);
EnumerationLevel extend_level_serial(const EnumerationLevel& prev);
EnumerationLevel extend_level_parallel(const EnumerationLevel& prev, int workers);

/// Number of isomorphism classes of order-n graphs by Burnside's lemma:
/// (1/n!) * sum over cycle types of class_size * 2^(pair cycles). Exact
/// for 1 <= n <= 12; independent of the generator above.
std::uint64_t count_graphs_burnside(int n);

/// Reads a graph6 file holding one level: canonicalizes, deduplicates,
/// sorts, and flags duplicates. Mixed orders raise g6::ErrorKind::MixedOrders.
EnumerationLevel load_level_from_g6(const std::string& path);

}  // namespace apexg

#endif
