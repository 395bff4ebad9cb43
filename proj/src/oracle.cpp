#include "hamdirac/oracle.hpp"

#include <vector>

namespace hamdirac::oracle {

namespace {

class CycleSearch {
public:
    explicit CycleSearch(const Graph& g) : n_{g.order()}, adj_(n_, 0) {
        for (VertexId u = 0; u < n_; ++u)
            for (VertexId v = 0; v < n_; ++v)
                if (u != v && g.adjacent(u, v)) adj_[u] |= 1u << v;
        full_ = (1u << n_) - 1;
    }

    std::optional<Cycle> run() {
        // Anchor at 0; orient so the second vertex has the smaller id of the
        // two neighbours of 0 on the cycle.
        for (VertexId second = 1; second < n_; ++second) {
            if (!(adj_[0] >> second & 1u)) continue;
            second_ = second;
            dead_.assign((std::size_t{1} << n_) * n_, false);
            order_ = {0, second};
            if (extend(second, 1u | (1u << second))) return Cycle{order_};
        }
        return std::nullopt;
    }

private:
    bool extend(VertexId cur, std::uint32_t used) {
        if (used == full_) return (adj_[cur] & 1u) && cur > second_;
        // Whether (visited set, current end) can finish depends on nothing
        // else once the second vertex is fixed, so failures are memoised.
        const std::size_t key = std::size_t{used} * n_ + cur;
        if (dead_[key]) return false;
        std::uint32_t options = adj_[cur] & ~used;
        while (options) {
            VertexId next = static_cast<VertexId>(__builtin_ctz(options));
            options &= options - 1;
            order_.push_back(next);
            if (extend(next, used | (1u << next))) return true;
            order_.pop_back();
        }
        dead_[key] = true;
        return false;
    }

    std::size_t n_;
    std::vector<std::uint32_t> adj_;
    std::uint32_t full_ = 0;
    VertexId second_ = 0;
    std::vector<bool> dead_;
    std::vector<VertexId> order_;
};

}  // namespace

std::optional<Cycle> hamiltonian_cycle(const Graph& g) {
    if (g.order() > max_order) {
        throw GraphError("oracle is limited to " + std::to_string(max_order) + " vertices, got " +
                         std::to_string(g.order()));
    }
    if (g.order() < 3) return std::nullopt;
    return CycleSearch(g).run();
}

LabeledGraphs::LabeledGraphs(std::size_t n, std::optional<std::size_t> min_degree)
    : n_{n}, pairs_{n * (n - (n > 0 ? 1 : 0)) / 2}, min_degree_{min_degree} {
    if (n > max_enumeration_order) {
        throw GraphError("enumeration is limited to " + std::to_string(max_enumeration_order) +
                         " vertices, got " + std::to_string(n));
    }
    end_ = total();
}

void LabeledGraphs::restrict(std::uint64_t begin, std::uint64_t end) {
    cursor_ = begin;
    end_ = std::min(end, total());
}

Graph LabeledGraphs::at(std::uint64_t index) const {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (VertexId j = 1; j < n_; ++j)
        for (VertexId i = 0; i < j; ++i, ++bit)
            if (index >> bit & 1u) edges.emplace_back(i, j);
    return Graph(n_, edges);
}

std::optional<Graph> LabeledGraphs::next() {
    while (cursor_ < end_) {
        const std::uint64_t index = cursor_++;
        if (min_degree_) {
            std::size_t degree[max_enumeration_order] = {};
            std::size_t bit = 0;
            for (VertexId j = 1; j < n_; ++j) {
                for (VertexId i = 0; i < j; ++i, ++bit) {
                    if (index >> bit & 1u) {
                        ++degree[i];
                        ++degree[j];
                    }
                }
            }
            bool ok = true;
            for (std::size_t v = 0; v < n_; ++v) ok = ok && degree[v] >= *min_degree_;
            if (!ok) continue;
        }
        return at(index);
    }
    return std::nullopt;
}

}  // namespace hamdirac::oracle
