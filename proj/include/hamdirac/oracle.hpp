#pragma once

#include "hamdirac/graph.hpp"
#include "hamdirac/hamiltonian.hpp"

#include <cstdint>
#include <optional>

namespace hamdirac::oracle {

inline constexpr std::size_t max_order = 14;

/// Exhaustive search for a Hamiltonian cycle. Shares no code with the
/// rotation solver; only Graph adjacency queries are used. Throws
/// GraphError when n exceeds max_order.
std::optional<Cycle> hamiltonian_cycle(const Graph& g);

inline constexpr std::size_t max_enumeration_order = 7;

/// Every labeled simple graph on n vertices, one per subset of the vertex
/// pairs. Bit b of a graph's index selects the b-th pair in graph6 order
/// ((0,1), (0,2), (1,2), (0,3), ...), so index ranges partition the stream.
class LabeledGraphs {
public:
    /// Throws GraphError for n > max_enumeration_order.
    explicit LabeledGraphs(std::size_t n, std::optional<std::size_t> min_degree = std::nullopt);

    std::uint64_t total() const { return std::uint64_t{1} << pairs_; }

    /// Restricts the stream to subset indices in [begin, end).
    void restrict(std::uint64_t begin, std::uint64_t end);

    /// Next graph passing the degree filter, or nullopt when exhausted.
    std::optional<Graph> next();
    /// Index of the graph most recently returned by next().
    std::uint64_t index() const { return cursor_ - 1; }

    Graph at(std::uint64_t index) const;

private:
    std::size_t n_;
    std::size_t pairs_;
    std::optional<std::size_t> min_degree_;
    std::uint64_t cursor_ = 0;
    std::uint64_t end_;
};

}  // namespace hamdirac::oracle
