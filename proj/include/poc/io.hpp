#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "poc/graph.hpp"

namespace poc {

/// Malformed input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct GraphDocument {
    struct Entry {
        Graph graph;
        std::size_t line;
    };
    /// Line numbers strictly increasing.
    std::vector<Entry> entries;
};

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// CR/LF are stripped.
Graph parse_graph6(std::string_view line, std::size_t cap = kDefaultVertexCap);

/// Canonical minimal-length encoding: the one-byte size prefix for n <= 62,
/// the 4-byte form up to 258047 vertices.
std::string emit_graph6(const Graph& g);

/// One graph per non-blank line.
GraphDocument parse_graph6_document(std::istream& in, std::size_t cap = kDefaultVertexCap);

/// Calls `sink` for every non-blank line of a graph6 stream without holding
/// more than one graph in memory.
void for_each_graph6(std::istream& in, const std::function<void(Graph, std::size_t)>& sink,
                     std::size_t cap = kDefaultVertexCap);

/// "n m" header followed by m lines "u v", 0-based. Blank lines and lines
/// starting with '#' are ignored; trailing "# ..." comments are allowed.
Graph parse_edge_list(std::string_view text, std::size_t cap = kDefaultVertexCap);
std::string emit_edge_list(const Graph& g);

/// Vertices in ascending order, then edges (u < v) in ascending order.
std::string emit_dot(const Graph& g, std::string_view name = "G");

} // namespace poc
