#pragma once

#include "hamdirac/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hamdirac::formats {

enum class Format { graph6, dimacs, edgelist };

enum class ParseErrorKind {
    invalid_character,
    truncated_payload,
    trailing_garbage,
    missing_problem_line,
    vertex_out_of_range,
    malformed_line,
    oversize,
};

/// Every decode failure carries its position: a 1-based line and a 0-based
/// byte offset within that line.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& what);

    ParseErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

std::string_view to_string(ParseErrorKind kind);
std::string_view to_string(Format format);

/// Accepts "g6"/"graph6", "dimacs"/"col", "el"/"edgelist".
std::optional<Format> parse_format_name(std::string_view name);
/// .g6, .col/.dimacs, .el
std::optional<Format> format_from_path(std::string_view path);

/// Largest order the graph6 codec handles (4-byte header tier).
inline constexpr std::size_t graph6_max_order = 258047;

/// `line` is the line number reported in errors.
Graph decode_graph6(std::string_view payload, std::size_t line = 1);
std::string encode_graph6(const Graph& g);

/// One graph per non-blank line. `line` in errors refers to the file line.
std::vector<Graph> decode_graph6_batch(std::string_view text);

/// Decodes DIMACS edge format. A mismatch between the declared and actual
/// edge count is reported through `warnings` rather than failing.
Graph decode_dimacs(std::string_view payload, std::vector<std::string>* warnings = nullptr);
std::string encode_dimacs(const Graph& g);

/// "n <count>" header, then one 0-based "u v" pair per line. Blank lines and
/// lines starting with '#' are ignored.
Graph decode_edgelist(std::string_view payload);
std::string encode_edgelist(const Graph& g);

Graph decode(Format format, std::string_view payload, std::vector<std::string>* warnings = nullptr);
std::string encode(Format format, const Graph& g);

}  // namespace hamdirac::formats
