#pragma once

#include "hamdirac/graph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace hamdirac::gen {

/// Reproducible randomness: std::mt19937_64 (its output sequence is fixed by
/// the C++ standard) with distribution code written out here, since the
/// standard library distributions differ between implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_{seed} {}

    std::uint64_t next() { return engine_(); }
    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return unit() < p; }
    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// Two cliques on {0..r} and {r..2r} sharing vertex r.
Graph exceptional_a(std::size_t r);

/// Independent set {0..r} joined to every vertex of {r+1..2r}; pairs inside
/// {r+1..2r} are edges with probability inner_edge_prob.
Graph exceptional_b(std::size_t r, double inner_edge_prob, std::uint64_t seed);

/// G(n, 0.6) followed by a repair pass that raises every degree to ⌊n/2⌋.
Graph random_min_degree(std::size_t n, std::uint64_t seed);

/// G(n, p) with no degree constraint.
Graph random_graph(std::size_t n, double p, Rng& rng);

/// Applies a permutation: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const VertexId> perm);

/// Structural recognizers: g is a labeled copy of family A (two cliques of
/// size (n+1)/2 sharing one vertex) or family B (an independent set of
/// (n+1)/2 vertices joined to all the others), for odd n.
bool matches_exceptional_a(const Graph& g);
bool matches_exceptional_b(const Graph& g);

enum class Family { a, b, random };

/// Generator parameters as accepted by the CLI.
struct GenSpec {
    Family family = Family::random;
    std::size_t r = 0;
    std::size_t n = 0;
    double inner_edge_prob = 0.5;
    std::uint64_t seed = 0;

    /// Stable tag usable in corpus file names, e.g. "b-r3-p0.5-s7".
    std::string tag() const;
};

/// Throws std::invalid_argument for inconsistent parameters.
Graph generate(const GenSpec& spec);

}  // namespace hamdirac::gen
