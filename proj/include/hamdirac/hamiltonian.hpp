#pragma once

#include "hamdirac/graph.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hamdirac {

/// Simple path x0 x1 ... xk. Validity against a graph is checked separately.
struct Path {
    std::vector<VertexId> vertices;

    std::size_t size() const { return vertices.size(); }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }
    VertexId operator[](std::size_t i) const { return vertices[i]; }

    friend bool operator==(const Path&, const Path&) = default;
};

/// Cyclic vertex order; the closing edge back->front is implicit.
struct Cycle {
    std::vector<VertexId> vertices;

    std::size_t size() const { return vertices.size(); }

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct CutVertex {
    VertexId vertex;
    friend bool operator==(const CutVertex&, const CutVertex&) = default;
};

/// Independent set of more than n/2 vertices forming a component of the
/// complement graph.
struct BigIndependentComponent {
    std::vector<VertexId> vertices;
    friend bool operator==(const BigIndependentComponent&, const BigIndependentComponent&) = default;
};

/// The solver got stuck on `path`: either no rotation closes it, or it closes
/// into a cycle with no edge leaving it (the graph is disconnected). Only
/// reachable when the input is below the ⌊n/2⌋ degree bound.
struct RotationExhausted {
    Path path;
    friend bool operator==(const RotationExhausted&, const RotationExhausted&) = default;
};

using NoneCertificate = std::variant<CutVertex, BigIndependentComponent, RotationExhausted>;

struct SolveOutcome {
    std::variant<Cycle, NoneCertificate> result;

    bool hamiltonian() const { return std::holds_alternative<Cycle>(result); }
    const Cycle& cycle() const { return std::get<Cycle>(result); }
    const NoneCertificate& certificate() const { return std::get<NoneCertificate>(result); }

    friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;
};

/// Classification of the interior x1..x(k-1) of a maximal path with
/// non-adjacent endpoints by adjacency to x0 and xk. Members are in path order.
struct EndpointPartition {
    std::vector<VertexId> start_only;   // N(x0) \ N(xk)
    std::vector<VertexId> end_only;     // N(xk) \ N(x0)
    std::vector<VertexId> both;         // N(x0) ∩ N(xk)
    std::vector<VertexId> neither;      // interior \ (N(x0) ∪ N(xk))
};

enum class RotationKind { a, b, c };

struct Closure {
    Cycle cycle;
    RotationKind kind;
};

/// Per-iteration record of a solve, one entry per make_cycle call.
struct SolveStep {
    std::size_t path_size;
    std::optional<RotationKind> closed_by;
};

struct SolveTrace {
    std::vector<SolveStep> steps;
};

bool is_path(const Graph& g, const Path& p);
/// A path is maximal when neither endpoint has a neighbor off the path.
bool is_maximal(const Graph& g, const Path& p);

/// True iff `c` visits every vertex of g exactly once along edges of g.
bool verify_cycle(const Graph& g, const Cycle& c);
/// Like verify_cycle, but returns the first violated condition.
std::optional<std::string> cycle_violation(const Graph& g, std::span<const VertexId> order);
/// True iff `c` is a cycle of g (not necessarily spanning).
bool is_cycle(const Graph& g, const Cycle& c);

/// Cut vertex first, then an oversized independent complement component.
/// Throws GraphError for n < 3.
std::optional<NoneCertificate> precheck_exceptional(const Graph& g);

/// Greedily extends the front end, then the back end, always taking the
/// smallest-id neighbor not yet on the path.
Path extend_to_maximal_path(const Graph& g, Path p);

std::optional<Cycle> make_type_a_cycle(const Graph& g, const Path& p);
std::optional<Cycle> make_type_b_cycle(const Graph& g, const Path& p);
std::optional<Cycle> make_type_c_cycle(const Graph& g, const Path& p);

/// Tries type A, B, then C.
std::optional<Closure> close_path(const Graph& g, const Path& p);
std::optional<Cycle> make_cycle(const Graph& g, const Path& p);

class NoBoundaryEdge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Opens a non-spanning cycle through the lexicographically smallest edge
/// (u, w) with u on the cycle and w off it: returns w, u, pred(u), ..., succ(u).
Path reopen_cycle(const Graph& g, const Cycle& c);

SolveOutcome find_hamiltonian(const Graph& g, SolveTrace* trace = nullptr);

/// Throws GraphError unless p is maximal with non-adjacent endpoints.
EndpointPartition endpoint_partition(const Graph& g, const Path& p);

/// Checks a certificate against g; returns a reason when it does not hold.
std::optional<std::string> certificate_violation(const Graph& g, const NoneCertificate& cert);

std::string_view to_string(RotationKind kind);

}  // namespace hamdirac
