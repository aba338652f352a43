#pragma once

#include <stdexcept>
#include <string>

#include "lga/layered_graph.hpp"

namespace lga {

// Raised on malformed documents; carries the offending 1-based line.
class GraphParseError : public std::runtime_error {
public:
    GraphParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Raised when a parsed document violates a layered-graph axiom.
class GraphValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph file format (one document per graph):
//
//   levels: <k>
//   vertices:
//   <id> <level> <label>
//   ...
//   edges:
//   <upper-id> <lower-id>
//   ...
//
// Ids are arbitrary whitespace-free tokens; blank lines and lines
// starting with '#' are ignored. Parsing is byte-deterministic and the
// result is validated before it is returned.
LayeredGraph parse_graph(const std::string& document);
LayeredGraph parse_graph_file(const std::string& path);

std::string format_graph(const LayeredGraph& g);

}  // namespace lga
