#ifndef APEXG_HEREDITARY_HPP
#define APEXG_HEREDITARY_HPP

#include <optional>
#include <string>
#include <vector>

#include "apexg/small_graph.hpp"

namespace apexg {

/// A finite antichain of forbidden induced subgraphs. Members are stored
/// canonically relabeled and sorted; construction rejects duplicates (up to
/// isomorphism) and any member that occurs as an induced subgraph of
/// another, rather than silently minimizing.
class ForbiddenSet {
  public:
    explicit ForbiddenSet(std::vector<SmallGraph> members);

    const std::vector<SmallGraph>& members() const { return members_; }

    /// Largest member order; the c of the vertex-count bounds.
    int max_order() const { return c_; }
    /// Largest member edge count; the k of the vertex-count bounds.
    int max_edges() const { return k_max_; }

    /// Plain graph6, one member per line.
    static ForbiddenSet from_g6_file(const std::string& path);
    void save_g6_file(const std::string& path) const;

  private:
    std::vector<SmallGraph> members_;
    int c_ = 0;
    int k_max_ = 0;
};

/// The class a membership query runs against: the built-in cograph class
/// (recognized directly, without containment search) or the hereditary
/// class excluding an explicit ForbiddenSet.
class ClassSpec {
  public:
    static ClassSpec cograph();
    static ClassSpec excluding(ForbiddenSet set);

    bool is_cograph_class() const { return !set_.has_value(); }

    /// Only valid for excluding-classes; throws std::logic_error otherwise.
    const ForbiddenSet& forbidden() const;

    /// "cograph", or "excluding{<g6>,...}" for explicit sets.
    std::string description() const;

  private:
    ClassSpec() = default;
    std::optional<ForbiddenSet> set_;
};

bool in_class(const SmallGraph& g, const ClassSpec& c);

enum class ApexStatus { Member, ApexEdge, NotInApex };

struct ApexResult {
    ApexStatus status = ApexStatus::NotInApex;
    int u = -1;  // witness edge endpoints, set only for ApexEdge
    int v = -1;

    friend bool operator==(const ApexResult&, const ApexResult&) = default;
};

/// Member if G is in C; otherwise ApexEdge(u,v) for the first edge in
/// ascending lexicographic (u,v) order whose deletion puts G in C;
/// otherwise NotInApex.
ApexResult in_edge_apex(const SmallGraph& g, const ClassSpec& c);

/// True iff G is outside the edge-apex class of C but every proper induced
/// subgraph is inside. Spelled out: G is not in C, no single edge deletion
/// puts G in C, and every single vertex deletion lands in the apex class.
/// One-vertex deletions suffice because the apex class is hereditary.
bool is_minimal_apex_obstruction(const SmallGraph& g, const ClassSpec& c);

/// Upper bounds on the order of a minimal obstruction of the edge-apex
/// class, in terms of the largest forbidden-subgraph order c and edge
/// count k, and (for the sharper bound) the overlap q between the two
/// forbidden subgraphs realized in G and in G-e.
int bound_no_overlap(int c, int k);
int bound_with_overlap(int c, int q, int k);

}  // namespace apexg

#endif
