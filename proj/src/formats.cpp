#include "hamdirac/formats.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hamdirac::formats {

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", byte " + std::to_string(column) +
                         ": " + std::string(to_string(kind)) + ": " + what),
      kind_{kind},
      line_{line},
      column_{column} {}

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::invalid_character: return "invalid character";
        case ParseErrorKind::truncated_payload: return "truncated payload";
        case ParseErrorKind::trailing_garbage: return "trailing garbage";
        case ParseErrorKind::missing_problem_line: return "missing problem line";
        case ParseErrorKind::vertex_out_of_range: return "vertex out of range";
        case ParseErrorKind::malformed_line: return "malformed line";
        case ParseErrorKind::oversize: return "graph too large";
    }
    return "parse error";
}

std::string_view to_string(Format format) {
    switch (format) {
        case Format::graph6: return "graph6";
        case Format::dimacs: return "dimacs";
        case Format::edgelist: return "edgelist";
    }
    return "?";
}

std::optional<Format> parse_format_name(std::string_view name) {
    if (name == "g6" || name == "graph6") return Format::graph6;
    if (name == "dimacs" || name == "col") return Format::dimacs;
    if (name == "el" || name == "edgelist") return Format::edgelist;
    return std::nullopt;
}

std::optional<Format> format_from_path(std::string_view path) {
    auto dot = path.rfind('.');
    if (dot == std::string_view::npos) return std::nullopt;
    auto ext = path.substr(dot + 1);
    if (ext == "g6") return Format::graph6;
    if (ext == "col" || ext == "dimacs") return Format::dimacs;
    if (ext == "el") return Format::edgelist;
    return std::nullopt;
}

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";

std::string_view strip_line_end(std::string_view s) {
    if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

Graph decode_graph6_line(std::string_view s, std::size_t line) {
    std::size_t pos = 0;
    if (s.starts_with(graph6_header)) pos = graph6_header.size();
    auto byte_at = [&](std::size_t i) -> unsigned {
        auto c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) {
            throw ParseError(ParseErrorKind::invalid_character, line, i,
                             "byte " + std::to_string(c) + " outside [63, 126]");
        }
        return c - 63u;
    };

    if (pos >= s.size()) {
        throw ParseError(ParseErrorKind::truncated_payload, line, pos, "missing size header");
    }
    std::size_t n = byte_at(pos);
    ++pos;
    if (n == 63) {
        if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
            throw ParseError(ParseErrorKind::oversize, line, pos,
                             "8-byte size headers are not supported");
        }
        if (pos + 3 > s.size()) {
            throw ParseError(ParseErrorKind::truncated_payload, line, s.size(),
                             "size header needs 3 more bytes");
        }
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos++);
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (s.size() - pos < body) {
        throw ParseError(ParseErrorKind::truncated_payload, line, s.size(),
                         "need " + std::to_string(body) + " body bytes for n=" + std::to_string(n) +
                             ", found " + std::to_string(s.size() - pos));
    }
    if (s.size() - pos > body) {
        throw ParseError(ParseErrorKind::trailing_garbage, line, pos + body,
                         "extra bytes after adjacency data");
    }

    std::vector<VertexSet> rows(n, VertexSet(n));
    std::size_t bit = 0;
    for (VertexId j = 1; j < n; ++j) {
        for (VertexId i = 0; i < j; ++i, ++bit) {
            unsigned chunk = byte_at(pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1u) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    if (bits % 6 != 0) {
        unsigned last = byte_at(pos + body - 1);
        unsigned pad_mask = (1u << (6 - bits % 6)) - 1;
        if (last & pad_mask) {
            throw ParseError(ParseErrorKind::trailing_garbage, line, pos + body - 1,
                             "nonzero padding bits");
        }
    }
    // Validate every remaining byte even when there are no adjacency bits.
    for (std::size_t i = pos; i < s.size(); ++i) byte_at(i);
    return Graph::from_rows(std::move(rows));
}

struct LineCursor {
    std::string_view text;
    std::size_t offset = 0;
    std::size_t number = 0;

    std::optional<std::string_view> next() {
        if (offset >= text.size()) return std::nullopt;
        auto end = text.find('\n', offset);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(offset, end - offset);
        offset = end + 1;
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        return line;
    }
};

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

std::size_t column_of(std::string_view line, std::string_view token) {
    return static_cast<std::size_t>(token.data() - line.data());
}

std::size_t parse_count(std::string_view line, std::string_view token, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(ParseErrorKind::malformed_line, line_no, column_of(line, token),
                         "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

void check_order(std::size_t n, std::size_t line_no, std::size_t column) {
    // Bit-matrix storage; anything past this is certainly a typo.
    if (n > graph6_max_order) {
        throw ParseError(ParseErrorKind::oversize, line_no, column,
                         std::to_string(n) + " vertices exceeds the supported maximum");
    }
}

}  // namespace

Graph decode_graph6(std::string_view payload, std::size_t line) {
    return decode_graph6_line(strip_line_end(payload), line);
}

std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > graph6_max_order) {
        throw GraphError("graph6 encoding supports at most " + std::to_string(graph6_max_order) +
                         " vertices");
    }
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    unsigned chunk = 0;
    int filled = 0;
    for (VertexId j = 1; j < n; ++j) {
        for (VertexId i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

std::vector<Graph> decode_graph6_batch(std::string_view text) {
    std::vector<Graph> out;
    LineCursor cursor{text};
    while (auto line = cursor.next()) {
        if (is_blank(*line)) continue;
        out.push_back(decode_graph6_line(*line, cursor.number));
    }
    return out;
}

Graph decode_dimacs(std::string_view payload, std::vector<std::string>* warnings) {
    LineCursor cursor{payload};
    std::optional<std::size_t> n;
    std::size_t declared_edges = 0;
    std::vector<Edge> edges;

    while (auto line = cursor.next()) {
        const std::size_t ln = cursor.number;
        auto tokens = split_ws(*line);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (tokens[0] == "p") {
            if (n) throw ParseError(ParseErrorKind::malformed_line, ln, 0, "duplicate problem line");
            if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
                throw ParseError(ParseErrorKind::malformed_line, ln, 0,
                                 "expected 'p edge <n> <m>'");
            }
            n = parse_count(*line, tokens[2], ln);
            check_order(*n, ln, column_of(*line, tokens[2]));
            declared_edges = parse_count(*line, tokens[3], ln);
        } else if (tokens[0] == "e") {
            if (!n) {
                throw ParseError(ParseErrorKind::missing_problem_line, ln, 0,
                                 "edge line before 'p edge' line");
            }
            if (tokens.size() != 3) {
                throw ParseError(ParseErrorKind::malformed_line, ln, 0, "expected 'e <u> <v>'");
            }
            std::size_t ends[2];
            for (int k = 0; k < 2; ++k) {
                auto tok = tokens[1 + k];
                ends[k] = parse_count(*line, tok, ln);
                if (ends[k] < 1 || ends[k] > *n) {
                    throw ParseError(ParseErrorKind::vertex_out_of_range, ln, column_of(*line, tok),
                                     "vertex " + std::string(tok) + " not in [1, " +
                                         std::to_string(*n) + "]");
                }
            }
            if (ends[0] == ends[1]) {
                throw ParseError(ParseErrorKind::malformed_line, ln, 0,
                                 "self-loop at vertex " + std::to_string(ends[0]));
            }
            edges.emplace_back(static_cast<VertexId>(ends[0] - 1), static_cast<VertexId>(ends[1] - 1));
        } else {
            throw ParseError(ParseErrorKind::malformed_line, ln, 0,
                             "unknown line type '" + std::string(tokens[0]) + "'");
        }
    }
    if (!n) throw ParseError(ParseErrorKind::missing_problem_line, cursor.number, 0, "no 'p edge' line");

    Graph g(*n, edges);
    if (warnings && g.edge_count() != declared_edges) {
        warnings->push_back("problem line declares " + std::to_string(declared_edges) +
                            " edges, found " + std::to_string(g.edge_count()));
    }
    return g;
}

std::string encode_dimacs(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

Graph decode_edgelist(std::string_view payload) {
    LineCursor cursor{payload};
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    while (auto line = cursor.next()) {
        const std::size_t ln = cursor.number;
        auto tokens = split_ws(*line);
        if (tokens.empty() || tokens[0].starts_with('#')) continue;
        if (!n) {
            if (tokens.size() != 2 || tokens[0] != "n") {
                throw ParseError(ParseErrorKind::missing_problem_line, ln, 0,
                                 "expected 'n <count>' header");
            }
            n = parse_count(*line, tokens[1], ln);
            check_order(*n, ln, column_of(*line, tokens[1]));
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(ParseErrorKind::malformed_line, ln, 0, "expected '<u> <v>'");
        }
        std::size_t ends[2];
        for (int k = 0; k < 2; ++k) {
            ends[k] = parse_count(*line, tokens[k], ln);
            if (ends[k] >= *n) {
                throw ParseError(ParseErrorKind::vertex_out_of_range, ln, column_of(*line, tokens[k]),
                                 "vertex " + std::string(tokens[k]) + " not in [0, " +
                                     std::to_string(*n) + ")");
            }
        }
        if (ends[0] == ends[1]) {
            throw ParseError(ParseErrorKind::malformed_line, ln, 0,
                             "self-loop at vertex " + std::to_string(ends[0]));
        }
        edges.emplace_back(static_cast<VertexId>(ends[0]), static_cast<VertexId>(ends[1]));
    }
    if (!n) throw ParseError(ParseErrorKind::missing_problem_line, cursor.number, 0, "no 'n <count>' header");
    return Graph(*n, edges);
}

std::string encode_edgelist(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph decode(Format format, std::string_view payload, std::vector<std::string>* warnings) {
    switch (format) {
        case Format::graph6: return decode_graph6(payload);
        case Format::dimacs: return decode_dimacs(payload, warnings);
        case Format::edgelist: return decode_edgelist(payload);
    }
    throw std::logic_error("unknown format");
}

std::string encode(Format format, const Graph& g) {
    switch (format) {
        case Format::graph6: return encode_graph6(g) + '\n';
        case Format::dimacs: return encode_dimacs(g);
        case Format::edgelist: return encode_edgelist(g);
    }
    throw std::logic_error("unknown format");
}

}  // namespace hamdirac::formats
