#pragma once

#include <string>
#include <string_view>

#include "retract/graph.hpp"

namespace retract {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// First line "n", then one "u v" pair per line. Blank lines and lines
// starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// Standard graph6 (no ">>graph6<<" header); trailing newline tolerated.
Graph parse_graph6(std::string_view text);
std::string format_graph6(const Graph& g);

// 64-bit FNV-1a, used for input digests in reports.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace retract
