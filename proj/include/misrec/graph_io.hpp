#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "misrec/graph.hpp"

namespace misrec {

// Raised when a file cannot be opened or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised on malformed graph/scheme/transcript input. kind distinguishes the
// failure classes the edge-list format can exhibit.
class FormatError : public std::runtime_error {
public:
    enum class Kind { Header, SelfLoop, DuplicateEdge, VertexRange, Structure };

    FormatError(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Edge-list text format:
//   first non-comment line "n m", then m lines "u v" (0-based), lines
//   starting with '#' are comments, trailing newline required.
// Endpoints may appear in either order; serialization emits u < v sorted.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// JSON alternative: {"n": int, "edges": [[u, v], ...]}.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

Graph load_graph_file(const std::string& path);  // dispatches on .json suffix

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace misrec
