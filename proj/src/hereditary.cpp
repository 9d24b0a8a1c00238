#include "apexg/hereditary.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "apexg/canonical.hpp"
#include "apexg/cograph.hpp"
#include "apexg/containment.hpp"
#include "apexg/graph6.hpp"

namespace apexg {

ForbiddenSet::ForbiddenSet(std::vector<SmallGraph> members) {
    if (members.empty())
        throw std::invalid_argument("ForbiddenSet: at least one member required");

    std::vector<std::pair<CanonicalForm, SmallGraph>> canon;
    canon.reserve(members.size());
    for (const SmallGraph& g : members) {
        SmallGraph r = canonical_relabel(g);
        canon.emplace_back(canonical_form(r), std::move(r));
    }
    std::sort(canon.begin(), canon.end(), [](const auto& x, const auto& y) {
        if (x.first.n != y.first.n) return x.first.n < y.first.n;
        const int ex = x.second.edge_count();
        const int ey = y.second.edge_count();
        if (ex != ey) return ex < ey;
        return x.first.words < y.first.words;
    });

    for (std::size_t i = 1; i < canon.size(); ++i)
        if (canon[i].first == canon[i - 1].first)
            throw std::invalid_argument("ForbiddenSet: isomorphic duplicate member " +
                                        g6::encode_graph6(canon[i].second));
    for (std::size_t i = 0; i < canon.size(); ++i)
        for (std::size_t j = i + 1; j < canon.size(); ++j)
            if (canon[i].second.order() < canon[j].second.order() &&
                contains_induced(canon[j].second, canon[i].second))
                throw std::invalid_argument(
                    "ForbiddenSet: member " + g6::encode_graph6(canon[j].second) +
                    " contains member " + g6::encode_graph6(canon[i].second) +
                    " as an induced subgraph");

    for (auto& [form, g] : canon) {
        c_ = std::max(c_, g.order());
        k_max_ = std::max(k_max_, g.edge_count());
        members_.push_back(std::move(g));
    }
}

ForbiddenSet ForbiddenSet::from_g6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw g6::DecodeError(g6::ErrorKind::Io, "cannot open " + path);
    std::vector<SmallGraph> graphs = g6::read_g6_stream(in);
    if (graphs.empty()) throw g6::DecodeError(g6::ErrorKind::Io, "no graphs in " + path);
    return ForbiddenSet(std::move(graphs));
}

void ForbiddenSet::save_g6_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    g6::write_g6_stream(members_, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

ClassSpec ClassSpec::cograph() { return ClassSpec(); }

ClassSpec ClassSpec::excluding(ForbiddenSet set) {
    ClassSpec c;
    c.set_ = std::move(set);
    return c;
}

const ForbiddenSet& ClassSpec::forbidden() const {
    if (!set_)
        throw std::logic_error("ClassSpec: the built-in cograph class has no explicit set");
    return *set_;
}

std::string ClassSpec::description() const {
    if (!set_) return "cograph";
    std::string out = "excluding{";
    for (const SmallGraph& g : set_->members()) {
        if (out.back() != '{') out += ',';
        out += g6::encode_graph6(g);
    }
    return out + '}';
}

bool in_class(const SmallGraph& g, const ClassSpec& c) {
    if (c.is_cograph_class()) return !has_induced_p4(g);
    for (const SmallGraph& f : c.forbidden().members())
        if (contains_induced(g, f)) return false;
    return true;
}

ApexResult in_edge_apex(const SmallGraph& g, const ClassSpec& c) {
    if (in_class(g, c)) return {ApexStatus::Member, -1, -1};
    for (auto [u, v] : g.edges())
        if (in_class(remove_edge(g, u, v), c)) return {ApexStatus::ApexEdge, u, v};
    return {ApexStatus::NotInApex, -1, -1};
}

bool is_minimal_apex_obstruction(const SmallGraph& g, const ClassSpec& c) {
    if (in_class(g, c)) return false;
    for (auto [u, v] : g.edges())
        if (in_class(remove_edge(g, u, v), c)) return false;
    if (g.order() > 1)
        for (int v = 0; v < g.order(); ++v)
            if (in_edge_apex(delete_vertex(g, v), c).status == ApexStatus::NotInApex)
                return false;
    return true;
}

int bound_no_overlap(int c, int k) {
    if (c < 1 || k < 0)
        throw std::invalid_argument("bound_no_overlap: need c >= 1 and k >= 0");
    return std::max(2 * c, c + k * (c - 2));
}

int bound_with_overlap(int c, int q, int k) {
    if (c < 1 || k < 0 || q < 0 || q > c)
        throw std::invalid_argument("bound_with_overlap: need c >= 1, 0 <= q <= c, k >= 0");
    return c + (c - q) + k * (c - 2);
}

}  // namespace apexg
