#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace vel {

bool Graph::has_edge(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

std::size_t Graph::degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(), [v](const Edge& e) { return e.first == v || e.second == v; }));
}

Graph graph_from_edge_list(std::size_t n, const std::vector<Edge>& edges) {
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i >= n || j >= n) {
            throw std::invalid_argument("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                        ") has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
        g.edges_.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    return g;
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
    SymmetricMatrix a(g.vertex_count());
    for (auto [i, j] : g.edges()) a.set(i, j, 1.0);
    return a;
}

Graph named_graph(Family family, std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    switch (family) {
        case Family::path:
            if (a < 1) throw std::invalid_argument("path needs at least 1 vertex");
            for (std::size_t i = 0; i + 1 < a; ++i) edges.emplace_back(i, i + 1);
            return graph_from_edge_list(a, edges);
        case Family::cycle:
            if (a < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
            for (std::size_t i = 0; i < a; ++i) edges.emplace_back(i, (i + 1) % a);
            return graph_from_edge_list(a, edges);
        case Family::complete:
            if (a < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
            for (std::size_t i = 0; i < a; ++i)
                for (std::size_t j = i + 1; j < a; ++j) edges.emplace_back(i, j);
            return graph_from_edge_list(a, edges);
        case Family::star:
            if (a < 1) throw std::invalid_argument("star needs at least 1 leaf");
            for (std::size_t leaf = 1; leaf <= a; ++leaf) edges.emplace_back(0, leaf);
            return graph_from_edge_list(a + 1, edges);
        case Family::complete_bipartite:
            if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite sides must be >= 1");
            for (std::size_t i = 0; i < a; ++i)
                for (std::size_t j = 0; j < b; ++j) edges.emplace_back(i, a + j);
            return graph_from_edge_list(a + b, edges);
    }
    throw std::invalid_argument("unknown graph family");
}

Graph disjoint_union(const Graph& left, const Graph& right) {
    const std::size_t shift = left.vertex_count();
    std::vector<Edge> edges = left.edges();
    for (auto [i, j] : right.edges()) edges.emplace_back(i + shift, j + shift);
    return graph_from_edge_list(shift + right.vertex_count(), edges);
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos >= line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
        tokens.push_back({line.substr(pos, end - pos), pos + 1});
        pos = end;
    }
    return tokens;
}

std::size_t parse_index(const Token& tok, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
        throw ParseError("line " + std::to_string(line_no) + ", byte " + std::to_string(tok.column) +
                             ": expected a nonnegative integer, got '" + std::string(tok.text) + "'",
                         line_no, tok.column);
    }
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    bool have_header = false;
    std::size_t n = 0;
    std::size_t declared = 0;
    std::size_t line_no = 0;
    std::vector<Edge> edges;

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos) stop = text.size();
        std::string_view line = text.substr(start, stop - start);
        start = stop + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two integers, found " +
                                 std::to_string(tokens.size()) + " fields",
                             line_no, tokens.front().column);
        }
        const std::size_t first = parse_index(tokens[0], line_no);
        const std::size_t second = parse_index(tokens[1], line_no);
        if (!have_header) {
            n = first;
            declared = second;
            have_header = true;
            continue;
        }
        if (edges.size() == declared) {
            throw ParseError("line " + std::to_string(line_no) + ": more edge lines than the declared " +
                                 std::to_string(declared),
                             line_no, tokens.front().column);
        }
        if (first >= n || second >= n) {
            const Token& bad = first >= n ? tokens[0] : tokens[1];
            throw ParseError("line " + std::to_string(line_no) + ", byte " + std::to_string(bad.column) +
                                 ": vertex index out of range for n = " + std::to_string(n),
                             line_no, bad.column);
        }
        if (first == second) {
            throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(first),
                             line_no, tokens[0].column);
        }
        edges.emplace_back(first, second);
    }
    if (!have_header) throw ParseError("missing 'n m' header line", line_no, 0);
    if (edges.size() != declared) {
        throw ParseError("declared " + std::to_string(declared) + " edges but found " +
                             std::to_string(edges.size()),
                         line_no, 0);
    }
    return graph_from_edge_list(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
    return out.str();
}

}  // namespace vel
