#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "qipa/graph.hpp"
#include "qipa/power_iteration.hpp"

namespace qipa {

// line is 1-based; 0 means the problem is with the file as a whole.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line_number)
        : std::runtime_error(line_number > 0 ? "line " + std::to_string(line_number) + ": " + what
                                             : what),
          line(line_number) {}

    int line;
};

// Text: one edge per line "u v w", '#' comments, blank lines skipped, n = max
// index + 1. JSON: {"n": int, "edges": [[u, v, w], ...]}. Dispatch sniffs the
// first non-space byte.
WeightedGraph load_graph(const std::filesystem::path& file);
WeightedGraph parse_graph_text(const std::string& text);
WeightedGraph parse_graph_json(const std::string& text);

// Text: "eigenvalue multiplicity" lines with '#' comments.
// JSON: {"levels": [[eigenvalue, multiplicity], ...]}.
// Multiplicities must sum to a power of two.
Spectrum load_spectrum(const std::filesystem::path& file);
Spectrum parse_spectrum_text(const std::string& text);
Spectrum parse_spectrum_json(const std::string& text);

}  // namespace qipa
