#ifndef APEXG_DOT_HPP
#define APEXG_DOT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "apexg/small_graph.hpp"

namespace apexg {

/// One undirected DOT block: integer node ids, one `u -- v;` line per edge
/// in lexicographic order, isolated vertices as bare node statements, and
/// the canonical graph6 string as the label attribute.
std::string to_dot(const SmallGraph& g, const std::string& name);

/// Blocks named g0, g1, ... in input order.
void write_dot(const std::vector<SmallGraph>& graphs, std::ostream& out);

/// Parses the DOT subset produced by write_dot: any number of graph
/// blocks, label attributes ignored, order inferred as max node id + 1.
/// Throws std::runtime_error with a line reference on anything else.
std::vector<SmallGraph> read_dot(std::istream& in);

}  // namespace apexg

#endif
