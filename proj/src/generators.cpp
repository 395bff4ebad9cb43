#include "hamdirac/generators.hpp"

#include <sstream>
#include <stdexcept>

namespace hamdirac::gen {

std::uint64_t Rng::below(std::uint64_t bound) {
    // Largest multiple of bound that fits; draws at or past it are rejected.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    while (true) {
        std::uint64_t x = engine_();
        if (x < limit) return x % bound;
    }
}

Graph exceptional_a(std::size_t r) {
    if (r < 1) throw std::invalid_argument("family A needs r >= 1");
    const std::size_t n = 2 * r + 1;
    std::vector<Edge> edges;
    for (VertexId u = 0; u <= r; ++u)
        for (VertexId v = u + 1; v <= r; ++v) edges.emplace_back(u, v);
    for (VertexId u = r; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph exceptional_b(std::size_t r, double inner_edge_prob, std::uint64_t seed) {
    if (r < 1) throw std::invalid_argument("family B needs r >= 1");
    if (!(inner_edge_prob >= 0.0 && inner_edge_prob <= 1.0)) {
        throw std::invalid_argument("inner edge probability must lie in [0, 1]");
    }
    const std::size_t n = 2 * r + 1;
    Rng rng(seed);
    std::vector<Edge> edges;
    for (VertexId u = 0; u <= r; ++u)
        for (VertexId v = r + 1; v < n; ++v) edges.emplace_back(u, v);
    for (VertexId u = r + 1; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.bernoulli(inner_edge_prob)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_min_degree(std::size_t n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random min-degree graphs need n >= 3");
    Rng rng(seed);
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (rng.bernoulli(0.6)) {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
    }
    const std::size_t target = n / 2;
    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < n; ++v) {
        std::size_t deg = rows[v].count();
        while (deg < target) {
            candidates.clear();
            for (VertexId u = 0; u < n; ++u) {
                if (u != v && !rows[v].contains(u)) candidates.push_back(u);
            }
            VertexId u = candidates[rng.below(candidates.size())];
            rows[v].insert(u);
            rows[u].insert(v);
            ++deg;
        }
    }
    return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const VertexId> perm) {
    if (perm.size() != g.order()) throw GraphError("permutation size does not match graph order");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

bool matches_exceptional_a(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 3 || n % 2 == 0) return false;
    const std::size_t r = n / 2;
    auto cut = find_cut_vertex(g);
    if (!cut) return false;
    const Graph rest = g.without_vertex(*cut);
    const auto labels = connected_components(rest);
    if (labels.count != 2) return false;
    for (std::size_t c = 0; c < 2; ++c) {
        auto block = labels.members(c);
        if (block.size() != r) return false;
        // Back to original ids, then add the cut vertex.
        for (auto& v : block) v = v < *cut ? v : v + 1;
        block.push_back(*cut);
        if (!is_clique(g, block)) return false;
    }
    return true;
}

bool matches_exceptional_b(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 3 || n % 2 == 0) return false;
    const auto labels = connected_components(g.complement());
    for (std::size_t c = 0; c < labels.count; ++c) {
        auto side = labels.members(c);
        // A complement component is already joined to everything outside it.
        if (side.size() == n / 2 + 1 && is_independent(g, side)) return true;
    }
    return false;
}

std::string GenSpec::tag() const {
    std::ostringstream os;
    switch (family) {
        case Family::a: os << "a-r" << r; break;
        case Family::b: os << "b-r" << r << "-p" << inner_edge_prob << "-s" << seed; break;
        case Family::random: os << "random-n" << n << "-s" << seed; break;
    }
    return os.str();
}

Graph generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::a:
            if (spec.n != 0) throw std::invalid_argument("family a takes --r, not --n");
            return exceptional_a(spec.r);
        case Family::b:
            if (spec.n != 0) throw std::invalid_argument("family b takes --r, not --n");
            return exceptional_b(spec.r, spec.inner_edge_prob, spec.seed);
        case Family::random:
            if (spec.r != 0) throw std::invalid_argument("family random takes --n, not --r");
            return random_min_degree(spec.n, spec.seed);
    }
    throw std::logic_error("unknown family");
}

}  // namespace hamdirac::gen
