// graph6 reader/writer. Layout: N(n) header, then the upper triangle of the
// adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),... packed six bits
// per byte, most significant bit first, each byte offset by 63.

#include <string>

#include "graph.hpp"

namespace vel {

namespace {

constexpr unsigned char kOffset = 63;
constexpr unsigned char kMaxByte = 126;
constexpr std::size_t kMaxVertices = 68719476735ULL;  // 2^36 - 1

ParseError g6_error(const std::string& what, std::size_t byte) {
    return ParseError("graph6 byte " + std::to_string(byte) + ": " + what, 1, byte);
}

std::size_t read_chunks(std::string_view text, std::size_t pos, std::size_t count) {
    std::size_t value = 0;
    for (std::size_t k = 0; k < count; ++k) value = (value << 6) | (static_cast<unsigned char>(text[pos + k]) - kOffset);
    return value;
}

void append_chunks(std::string& out, std::size_t value, std::size_t count) {
    for (std::size_t k = count; k-- > 0;) out.push_back(static_cast<char>(((value >> (6 * k)) & 0x3F) + kOffset));
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    std::size_t pos = 0;
    constexpr std::string_view kMarker = ">>graph6<<";
    if (text.substr(0, kMarker.size()) == kMarker) pos = kMarker.size();

    for (std::size_t k = pos; k < text.size(); ++k) {
        const auto c = static_cast<unsigned char>(text[k]);
        if (c < kOffset || c > kMaxByte) {
            throw g6_error("character code " + std::to_string(c) + " outside 63..126", k + 1);
        }
    }
    if (pos >= text.size()) throw g6_error("missing vertex-count header", pos + 1);

    std::size_t n = 0;
    if (static_cast<unsigned char>(text[pos]) != kMaxByte) {
        n = read_chunks(text, pos, 1);
        pos += 1;
    } else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) != kMaxByte) {
        if (text.size() < pos + 4) throw g6_error("truncated 18-bit vertex-count header", text.size() + 1);
        n = read_chunks(text, pos + 1, 3);
        if (n < 63) throw g6_error("non-canonical 18-bit header for n < 63", pos + 1);
        pos += 4;
    } else {
        if (text.size() < pos + 8) throw g6_error("truncated 36-bit vertex-count header", text.size() + 1);
        n = read_chunks(text, pos + 2, 6);
        if (n <= 258047) throw g6_error("non-canonical 36-bit header for n <= 258047", pos + 1);
        pos += 8;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos < bytes) {
        throw g6_error("truncated bit stream: expected " + std::to_string(bytes) + " data bytes, found " +
                           std::to_string(text.size() - pos),
                       text.size() + 1);
    }
    if (text.size() - pos > bytes) throw g6_error("unexpected trailing data", pos + bytes + 1);

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            const auto chunk = static_cast<unsigned char>(text[pos + bit / 6]) - kOffset;
            if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return graph_from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kMaxVertices) throw std::invalid_argument("graph too large for graph6");
    std::string out;
    if (n < 63) {
        append_chunks(out, n, 1);
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kMaxByte));
        append_chunks(out, n, 3);
    } else {
        out.append(2, static_cast<char>(kMaxByte));
        append_chunks(out, n, 6);
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<unsigned char> packed((bits + 5) / 6, 0);
    for (auto [i, j] : g.edges()) {
        const std::size_t bit = j * (j - 1) / 2 + i;
        packed[bit / 6] |= static_cast<unsigned char>(1u << (5 - bit % 6));
    }
    for (unsigned char chunk : packed) out.push_back(static_cast<char>(chunk + kOffset));
    return out;
}

}  // namespace vel
