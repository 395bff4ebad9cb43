#include "hamdirac/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace hamdirac {

std::size_t VertexSet::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<VertexId> VertexSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return static_cast<VertexId>(w * 64 + std::countr_zero(words_[w]));
    }
    return std::nullopt;
}

std::optional<VertexId> VertexSet::next_after(VertexId v) const {
    std::size_t start = std::size_t{v} + 1;
    if (start >= size_) return std::nullopt;
    std::size_t w = start >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
        if (bits != 0) return static_cast<VertexId>(w * 64 + std::countr_zero(bits));
        if (++w == words_.size()) return std::nullopt;
        bits = words_[w];
    }
}

std::vector<VertexId> VertexSet::to_vector() const {
    std::vector<VertexId> out;
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & other.words_[w]) return true;
    }
    return false;
}

std::optional<VertexId> VertexSet::first_not_in(const VertexSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w] & ~other.words_[w];
        if (bits != 0) return static_cast<VertexId>(w * 64 + std::countr_zero(bits));
    }
    return std::nullopt;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : rows_(n, VertexSet(n)) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            std::ostringstream msg;
            msg << "edge (" << u << ", " << v << ") out of range for " << n << " vertices";
            throw GraphError(msg.str());
        }
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        rows_[u].insert(v);
        rows_[v].insert(u);
    }
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
    Graph g;
    g.rows_ = std::move(rows);
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
}

void Graph::check_vertex(VertexId v) const {
    if (v >= order()) {
        throw GraphError("vertex " + std::to_string(v) + " out of range for " +
                         std::to_string(order()) + " vertices");
    }
}

std::size_t Graph::degree(VertexId v) const {
    check_vertex(v);
    return rows_[v].count();
}

std::size_t Graph::min_degree() const {
    if (rows_.empty()) throw GraphError("minimum degree of the empty graph is undefined");
    std::size_t best = rows_[0].count();
    for (const auto& r : rows_) best = std::min(best, r.count());
    return best;
}

Graph Graph::complement() const {
    const std::size_t n = order();
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (std::size_t v = 0; v < n; ++v) {
        auto& out = rows[v].words_;
        const auto& in = rows_[v].words_;
        for (std::size_t w = 0; w < out.size(); ++w) out[w] = ~in[w];
        if (n % 64 != 0) out.back() &= (std::uint64_t{1} << (n % 64)) - 1;
        rows[v].erase(static_cast<VertexId>(v));
    }
    return from_rows(std::move(rows));
}

Graph Graph::without_vertex(VertexId v) const {
    check_vertex(v);
    const std::size_t n = order();
    std::vector<VertexSet> rows(n - 1, VertexSet(n - 1));
    for (VertexId a = 0; a < n; ++a) {
        if (a == v) continue;
        VertexId na = a < v ? a : a - 1;
        rows_[a].for_each([&](VertexId b) {
            if (b != v) rows[na].insert(b < v ? b : b - 1);
        });
    }
    return from_rows(std::move(rows));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (VertexId u = 0; u < order(); ++u) {
        rows_[u].for_each([&](VertexId v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

std::vector<VertexId> ComponentLabeling::members(std::size_t c) const {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < label.size(); ++v) {
        if (label[v] == c) out.push_back(static_cast<VertexId>(v));
    }
    return out;
}

std::size_t ComponentLabeling::largest() const {
    std::vector<std::size_t> sizes(count, 0);
    for (auto l : label) ++sizes[l];
    return static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
}

ComponentLabeling connected_components(const Graph& g) {
    const std::size_t n = g.order();
    ComponentLabeling out;
    out.label.assign(n, 0);
    VertexSet unseen(n);
    for (VertexId v = 0; v < n; ++v) unseen.insert(v);

    std::vector<VertexId> stack;
    while (auto root = unseen.first()) {
        unseen.erase(*root);
        stack.push_back(*root);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            out.label[v] = out.count;
            // Scan only the unseen neighbors, word by word.
            VertexSet fresh = g.neighbors(v);
            fresh &= unseen;
            unseen -= fresh;
            fresh.for_each([&](VertexId u) { stack.push_back(u); });
        }
        ++out.count;
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

std::optional<VertexId> find_cut_vertex(const Graph& g) {
    const std::size_t n = g.order();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unvisited), low(n, 0);
    std::vector<VertexId> parent(n, 0);
    std::vector<bool> is_cut(n, false);

    struct Frame {
        VertexId v;
        std::optional<VertexId> next;  // next neighbor to try
        std::size_t children;
    };
    std::vector<Frame> stack;
    std::size_t timer = 0;

    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] != unvisited) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, g.neighbors(root).first(), 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next) {
                VertexId u = *f.next;
                f.next = g.neighbors(f.v).next_after(u);
                if (disc[u] == unvisited) {
                    parent[u] = f.v;
                    disc[u] = low[u] = timer++;
                    ++f.children;
                    stack.push_back({u, g.neighbors(u).first(), 0});
                } else if (!(f.v != root && u == parent[f.v])) {
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
                continue;
            }
            const VertexId v = f.v;
            const std::size_t children = f.children;
            stack.pop_back();
            if (v == root) {
                if (children >= 2) is_cut[v] = true;
            } else {
                VertexId p = parent[v];
                low[p] = std::min(low[p], low[v]);
                if (p != root && low[v] >= disc[p]) is_cut[p] = true;
            }
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (is_cut[v]) return v;
    }
    return std::nullopt;
}

bool is_clique(const Graph& g, std::span<const VertexId> vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (!g.adjacent(vertices[a], vertices[b])) return false;
        }
    }
    return true;
}

bool is_independent(const Graph& g, std::span<const VertexId> vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (g.adjacent(vertices[a], vertices[b])) return false;
        }
    }
    return true;
}

std::string describe(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << " edges={";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        os << (first ? "" : ",") << u << '-' << v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace hamdirac
