#ifndef APEXG_GRAPH6_HPP
#define APEXG_GRAPH6_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "apexg/small_graph.hpp"

namespace apexg::g6 {

enum class ErrorKind {
    MalformedCharacter,   // byte outside chr(63)..chr(126)
    Truncated,            // fewer data characters than the order requires
    TrailingData,         // more data characters than the order requires
    NonzeroPadding,       // pad bits of the last group are not all zero
    UnsupportedOrder,     // decoded n outside 1..31
    UnsupportedFormat,    // sparse6 / digraph6 marker
    MixedOrders,          // stream constraint, see enumerate
    Io,
};

class DecodeError : public std::runtime_error {
  public:
    DecodeError(ErrorKind kind, const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          kind_(kind),
          line_(line) {}

    ErrorKind kind() const { return kind_; }
    /// 1-based line number for stream errors, 0 otherwise.
    int line() const { return line_; }

  private:
    ErrorKind kind_;
    int line_;
};

/// One-line graph6 encoding: chr(63+n) followed by the upper-triangle bits
/// in column order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed big-endian
/// into 6-bit groups, zero-padded, each group offset by 63. Never emits
/// the optional >>graph6<< header.
std::string encode_graph6(const SmallGraph& g);

/// Inverse of encode_graph6. Tolerates a leading >>graph6<< header.
SmallGraph decode_graph6(const std::string& s);

/// One graph per line, blank lines skipped. Throws DecodeError carrying
/// the 1-based line number on the first malformed line.
std::vector<SmallGraph> read_g6_stream(std::istream& in);

struct StreamIssue {
    int line;
    ErrorKind kind;
    std::string message;
};

struct LenientReadResult {
    std::vector<SmallGraph> graphs;
    std::vector<StreamIssue> issues;
};

/// Like read_g6_stream but collects per-line errors instead of aborting.
LenientReadResult read_g6_stream_lenient(std::istream& in);

void write_g6_stream(const std::vector<SmallGraph>& graphs, std::ostream& out);

}  // namespace apexg::g6

#endif
