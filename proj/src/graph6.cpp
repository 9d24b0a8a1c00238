#include "apexg/graph6.hpp"

#include <istream>
#include <ostream>

namespace apexg::g6 {
namespace {

constexpr char kOffset = 63;
constexpr const char* kHeader = ">>graph6<<";

int data_chars_for(int n) {
    const int bits = n * (n - 1) / 2;
    return (bits + 5) / 6;
}

SmallGraph decode_body(const std::string& s, int line) {
    if (s.empty()) throw DecodeError(ErrorKind::Truncated, "empty graph6 string", line);
    if (s[0] == ':' || s[0] == ';')
        throw DecodeError(ErrorKind::UnsupportedFormat, "sparse6 input is not supported", line);
    if (s[0] == '&')
        throw DecodeError(ErrorKind::UnsupportedFormat, "digraph6 input is not supported", line);

    const unsigned char first = static_cast<unsigned char>(s[0]);
    if (first < 63 || first > 126)
        throw DecodeError(ErrorKind::MalformedCharacter,
                          "order byte " + std::to_string(first) + " outside chr(63)..chr(126)", line);
    if (first == 126)
        throw DecodeError(ErrorKind::UnsupportedOrder, "multi-byte order encoding (n >= 63)", line);
    const int n = first - kOffset;
    if (n < 1 || n > kMaxVertices)
        throw DecodeError(ErrorKind::UnsupportedOrder,
                          "order " + std::to_string(n) + " outside 1..31", line);

    const int need = data_chars_for(n);
    const int have = static_cast<int>(s.size()) - 1;
    if (have < need)
        throw DecodeError(ErrorKind::Truncated,
                          "need " + std::to_string(need) + " data characters, got " +
                              std::to_string(have), line);
    if (have > need)
        throw DecodeError(ErrorKind::TrailingData,
                          "expected " + std::to_string(need) + " data characters, got " +
                              std::to_string(have), line);

    SmallGraph g(n);
    const int bits = n * (n - 1) / 2;
    int t = 0;
    for (int i = 0; i < need; ++i) {
        const unsigned char raw = static_cast<unsigned char>(s[1 + i]);
        if (raw < 63 || raw > 126)
            throw DecodeError(ErrorKind::MalformedCharacter,
                              "data byte " + std::to_string(raw) + " outside chr(63)..chr(126)",
                              line);
        const int group = raw - kOffset;
        for (int b = 5; b >= 0; --b, ++t) {
            const int bit = (group >> b) & 1;
            if (t >= bits) {
                if (bit)
                    throw DecodeError(ErrorKind::NonzeroPadding, "nonzero padding bits", line);
                continue;
            }
            if (bit) {
                // invert column index: t = v(v-1)/2 + u with u < v
                int v = 1;
                while ((v + 1) * v / 2 <= t) ++v;
                const int u = t - v * (v - 1) / 2;
                g.set_edge(u, v);
            }
        }
    }
    return g;
}

std::string strip_header(const std::string& raw) {
    const std::size_t hl = std::char_traits<char>::length(kHeader);
    if (raw.size() >= hl && raw.compare(0, hl, kHeader) == 0) return raw.substr(hl);
    return raw;
}

std::string chomp(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

}  // namespace

std::string encode_graph6(const SmallGraph& g) {
    const int n = g.order();
    std::string out;
    out.reserve(static_cast<std::size_t>(1 + data_chars_for(n)));
    out.push_back(static_cast<char>(kOffset + n));
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kOffset + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kOffset + (group << (6 - filled))));
    return out;
}

SmallGraph decode_graph6(const std::string& s) { return decode_body(strip_header(s), 0); }

std::vector<SmallGraph> read_g6_stream(std::istream& in) {
    std::vector<SmallGraph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = chomp(line);
        if (lineno == 1) body = strip_header(body);
        if (body.empty()) continue;
        out.push_back(decode_body(body, lineno));
    }
    return out;
}

LenientReadResult read_g6_stream_lenient(std::istream& in) {
    LenientReadResult res;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = chomp(line);
        if (lineno == 1) body = strip_header(body);
        if (body.empty()) continue;
        try {
            res.graphs.push_back(decode_body(body, lineno));
        } catch (const DecodeError& e) {
            res.issues.push_back({lineno, e.kind(), e.what()});
        }
    }
    return res;
}

void write_g6_stream(const std::vector<SmallGraph>& graphs, std::ostream& out) {
    for (const SmallGraph& g : graphs) out << encode_graph6(g) << '\n';
}

}  // namespace apexg::g6
