#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamdirac {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Fixed-size set of vertex ids packed 64 per word. Used both as an adjacency
/// row and as a general vertex set.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : size_{n}, words_((n + 63) / 64, 0) {}

    std::size_t universe() const { return size_; }

    bool contains(VertexId v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t count() const;
    bool empty() const;
    /// Smallest member, or nullopt.
    std::optional<VertexId> first() const;
    /// Smallest member strictly greater than v, or nullopt.
    std::optional<VertexId> next_after(VertexId v) const;
    std::vector<VertexId> to_vector() const;

    bool intersects(const VertexSet& other) const;
    /// Smallest member of (*this \ other), or nullopt.
    std::optional<VertexId> first_not_in(const VertexSet& other) const;

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other);

    std::span<const std::uint64_t> words() const { return words_; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                int b = __builtin_ctzll(bits);
                f(static_cast<VertexId>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    friend class Graph;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Undirected simple graph on vertices [0, n) backed by a packed bit matrix.
/// Immutable once built; compare with == on (n, edge set).
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on self-loops or out-of-range endpoints. Duplicate
    /// pairs (in either orientation) are accepted.
    Graph(std::size_t n, std::span<const Edge> edges);

    /// Builds from a pre-validated adjacency matrix; rows must be symmetric
    /// with an empty diagonal.
    static Graph from_rows(std::vector<VertexSet> rows);

    std::size_t order() const { return rows_.size(); }
    std::size_t edge_count() const;

    bool adjacent(VertexId u, VertexId v) const { return rows_[u].contains(v); }
    const VertexSet& neighbors(VertexId v) const { return rows_[v]; }

    std::size_t degree(VertexId v) const;
    /// Throws GraphError on the empty graph.
    std::size_t min_degree() const;

    Graph complement() const;
    /// Graph induced on everything except v; vertex ids above v shift down by one.
    Graph without_vertex(VertexId v) const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    void check_vertex(VertexId v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> rows_;
};

struct ComponentLabeling {
    std::vector<std::size_t> label;
    std::size_t count = 0;

    /// Members of component c in increasing order.
    std::vector<VertexId> members(std::size_t c) const;
    /// Index of a largest component, ties broken toward the lower index
    /// (equivalently, the smallest contained vertex id).
    std::size_t largest() const;
};

/// Components labeled in order of their smallest vertex.
ComponentLabeling connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Smallest articulation point, found with one low-link DFS.
std::optional<VertexId> find_cut_vertex(const Graph& g);

bool is_clique(const Graph& g, std::span<const VertexId> vertices);
bool is_independent(const Graph& g, std::span<const VertexId> vertices);

std::string describe(const Graph& g);

}  // namespace hamdirac
