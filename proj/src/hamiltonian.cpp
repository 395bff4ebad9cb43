#include "hamdirac/hamiltonian.hpp"

#include <algorithm>

namespace hamdirac {

namespace {

// x_t for t in [from, to], or the reverse when from > to.
void append_run(std::vector<VertexId>& out, const Path& p, std::size_t from, std::size_t to) {
    if (from <= to) {
        for (std::size_t t = from; t <= to; ++t) out.push_back(p[t]);
    } else {
        for (std::size_t t = from + 1; t-- > to;) out.push_back(p[t]);
    }
}

void require_path(const Graph& g, const Path& p) {
    if (!is_path(g, p)) throw GraphError("not a simple path of the graph");
}

std::optional<Path> try_reopen(const Graph& g, const Cycle& c) {
    const std::size_t n = g.order();
    VertexSet on_cycle(n);
    for (auto v : c.vertices) on_cycle.insert(v);

    // Scanning u in increasing id and taking its smallest outside neighbor
    // yields the lexicographically smallest boundary edge.
    std::optional<VertexId> u, w;
    on_cycle.for_each([&](VertexId v) {
        if (u) return;
        if (auto out = g.neighbors(v).first_not_in(on_cycle)) {
            u = v;
            w = out;
        }
    });
    if (!u) return std::nullopt;

    const auto& cv = c.vertices;
    const std::size_t m = cv.size();
    const std::size_t at = static_cast<std::size_t>(std::find(cv.begin(), cv.end(), *u) - cv.begin());
    Path out;
    out.vertices.reserve(m + 1);
    out.vertices.push_back(*w);
    // Drop the edge u -> succ(u) and walk backwards around the cycle.
    for (std::size_t step = 0; step < m; ++step) out.vertices.push_back(cv[(at + m - step) % m]);
    return out;
}

}  // namespace

bool is_path(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return false;
    VertexSet seen(g.order());
    for (std::size_t t = 0; t < p.size(); ++t) {
        VertexId v = p[t];
        if (v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
        if (t > 0 && !g.adjacent(p[t - 1], v)) return false;
    }
    return true;
}

bool is_maximal(const Graph& g, const Path& p) {
    VertexSet on_path(g.order());
    for (auto v : p.vertices) on_path.insert(v);
    return !g.neighbors(p.front()).first_not_in(on_path) && !g.neighbors(p.back()).first_not_in(on_path);
}

std::optional<std::string> cycle_violation(const Graph& g, std::span<const VertexId> order) {
    const std::size_t n = g.order();
    VertexSet seen(n);
    for (auto v : order) {
        if (v >= n) return "vertex " + std::to_string(v) + " out of range";
        if (seen.contains(v)) return "repeated vertex " + std::to_string(v);
        seen.insert(v);
    }
    for (VertexId v = 0; v < n; ++v) {
        if (!seen.contains(v)) return "missing vertex " + std::to_string(v);
    }
    if (order.size() < 3) return std::string("fewer than 3 vertices");
    for (std::size_t t = 0; t < order.size(); ++t) {
        VertexId a = order[t];
        VertexId b = order[(t + 1) % order.size()];
        if (!g.adjacent(a, b)) {
            return "non-adjacent pair " + std::to_string(a) + " " + std::to_string(b);
        }
    }
    return std::nullopt;
}

bool verify_cycle(const Graph& g, const Cycle& c) { return !cycle_violation(g, c.vertices); }

bool is_cycle(const Graph& g, const Cycle& c) {
    if (c.size() < 3) return false;
    VertexSet seen(g.order());
    for (std::size_t t = 0; t < c.size(); ++t) {
        VertexId v = c.vertices[t];
        if (v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
        if (!g.adjacent(v, c.vertices[(t + 1) % c.size()])) return false;
    }
    return true;
}

std::optional<NoneCertificate> precheck_exceptional(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 3) throw GraphError("Hamiltonicity needs at least 3 vertices, got " + std::to_string(n));

    if (auto v = find_cut_vertex(g)) return CutVertex{*v};

    const Graph co = g.complement();
    const auto labels = connected_components(co);
    auto biggest = labels.members(labels.largest());
    // Strictly more than half: an independent set of exactly n/2 does not
    // obstruct a Hamiltonian cycle (K_{n/2,n/2}).
    if (2 * biggest.size() > n && is_clique(co, biggest)) {
        return BigIndependentComponent{std::move(biggest)};
    }
    return std::nullopt;
}

Path extend_to_maximal_path(const Graph& g, Path p) {
    require_path(g, p);
    VertexSet on_path(g.order());
    for (auto v : p.vertices) on_path.insert(v);

    std::vector<VertexId> prefix;  // new front vertices, nearest first
    VertexId front = p.front();
    while (auto next = g.neighbors(front).first_not_in(on_path)) {
        on_path.insert(*next);
        prefix.push_back(*next);
        front = *next;
    }
    VertexId back = p.back();
    while (auto next = g.neighbors(back).first_not_in(on_path)) {
        on_path.insert(*next);
        p.vertices.push_back(*next);
        back = *next;
    }
    if (!prefix.empty()) p.vertices.insert(p.vertices.begin(), prefix.rbegin(), prefix.rend());
    return p;
}

std::optional<Cycle> make_type_a_cycle(const Graph& g, const Path& p) {
    if (p.size() < 3) return std::nullopt;
    const std::size_t k = p.size() - 1;
    auto build = [&](std::size_t i, std::size_t j) {
        Cycle c;
        c.vertices.reserve(p.size());
        append_run(c.vertices, p, 0, i);
        append_run(c.vertices, p, j + 1, k);
        append_run(c.vertices, p, j, i + 1);
        return c;
    };
    for (std::size_t i = 0; i + 3 <= k; ++i) {
        if (!g.adjacent(p[0], p[i + 1])) continue;
        for (std::size_t j = i + 2; j <= k - 1; ++j) {
            if (g.adjacent(p[i], p[j + 1]) && g.adjacent(p[j], p[k])) return build(i, j);
        }
    }
    // j = i + 1: the plain rotation that moves x_{i+1} to the end. The loop
    // above never reaches it, and without it i = k - 2 and a start-only
    // vertex adjacent to a later end-only vertex go undetected; n = 5
    // already has Hamiltonian graphs that need it.
    for (std::size_t i = 0; i + 2 <= k; ++i) {
        if (g.adjacent(p[0], p[i + 1]) && g.adjacent(p[i], p[i + 2]) && g.adjacent(p[i + 1], p[k]))
            return build(i, i + 1);
    }
    return std::nullopt;
}

std::optional<Cycle> make_type_b_cycle(const Graph& g, const Path& p) {
    if (p.size() < 4) return std::nullopt;
    const std::size_t k = p.size() - 1;
    for (std::size_t i = 1; i <= k - 2; ++i) {
        if (!g.adjacent(p[0], p[i + 1]) || !g.adjacent(p[i - 1], p[k])) continue;
        const auto& around = g.neighbors(p[i]);
        for (std::size_t j = 1; j <= k - 1; ++j) {
            // x_i must not be one of the two consecutive vertices.
            if (j + 1 == i || j == i) continue;
            if (!around.contains(p[j]) || !around.contains(p[j + 1])) continue;
            Cycle c;
            c.vertices.reserve(p.size());
            if (j > i) {
                append_run(c.vertices, p, 0, i - 1);
                append_run(c.vertices, p, k, j + 1);
                c.vertices.push_back(p[i]);
                append_run(c.vertices, p, j, i + 1);
            } else {
                append_run(c.vertices, p, 0, j);
                c.vertices.push_back(p[i]);
                append_run(c.vertices, p, j + 1, i - 1);
                append_run(c.vertices, p, k, i + 1);
            }
            return c;
        }
    }
    return std::nullopt;
}

std::optional<Cycle> make_type_c_cycle(const Graph& g, const Path& p) {
    if (p.size() < 3) return std::nullopt;
    const std::size_t k = p.size() - 1;
    if (g.adjacent(p[0], p[k - 1])) {
        const auto& around = g.neighbors(p[k]);
        for (std::size_t i = 0; i <= k - 2; ++i) {
            if (around.contains(p[i]) && around.contains(p[i + 1])) {
                Cycle c;
                c.vertices.reserve(p.size());
                append_run(c.vertices, p, 0, i);
                c.vertices.push_back(p[k]);
                append_run(c.vertices, p, i + 1, k - 1);
                return c;
            }
        }
    }
    if (g.adjacent(p[k], p[1])) {
        const auto& around = g.neighbors(p[0]);
        for (std::size_t i = 1; i <= k - 1; ++i) {
            if (around.contains(p[i]) && around.contains(p[i + 1])) {
                Cycle c;
                c.vertices.reserve(p.size());
                append_run(c.vertices, p, 1, i);
                c.vertices.push_back(p[0]);
                append_run(c.vertices, p, i + 1, k);
                return c;
            }
        }
    }
    return std::nullopt;
}

std::optional<Closure> close_path(const Graph& g, const Path& p) {
    if (auto c = make_type_a_cycle(g, p)) return Closure{std::move(*c), RotationKind::a};
    if (auto c = make_type_b_cycle(g, p)) return Closure{std::move(*c), RotationKind::b};
    if (auto c = make_type_c_cycle(g, p)) return Closure{std::move(*c), RotationKind::c};
    return std::nullopt;
}

std::optional<Cycle> make_cycle(const Graph& g, const Path& p) {
    if (auto closure = close_path(g, p)) return std::move(closure->cycle);
    return std::nullopt;
}

Path reopen_cycle(const Graph& g, const Cycle& c) {
    if (c.size() >= g.order()) throw GraphError("cycle already spans the graph");
    if (auto p = try_reopen(g, c)) return std::move(*p);
    throw NoBoundaryEdge("no edge leaves the cycle; the graph is disconnected");
}

SolveOutcome find_hamiltonian(const Graph& g, SolveTrace* trace) {
    if (auto cert = precheck_exceptional(g)) return {*cert};

    const std::size_t n = g.order();
    Path path{{0}};
    while (true) {
        path = extend_to_maximal_path(g, std::move(path));
        auto closure = close_path(g, path);
        if (trace) {
            trace->steps.push_back({path.size(), closure ? std::optional{closure->kind} : std::nullopt});
        }
        if (!closure) return {NoneCertificate{RotationExhausted{std::move(path)}}};
        if (closure->cycle.size() == n) return {std::move(closure->cycle)};
        auto reopened = try_reopen(g, closure->cycle);
        if (!reopened) return {NoneCertificate{RotationExhausted{std::move(path)}}};
        path = std::move(*reopened);
    }
}

EndpointPartition endpoint_partition(const Graph& g, const Path& p) {
    require_path(g, p);
    if (!is_maximal(g, p)) throw GraphError("endpoint partition needs a maximal path");
    if (p.size() < 2 || g.adjacent(p.front(), p.back())) {
        throw GraphError("endpoint partition needs non-adjacent endpoints");
    }
    const auto& start = g.neighbors(p.front());
    const auto& end = g.neighbors(p.back());
    EndpointPartition out;
    for (std::size_t t = 1; t + 1 < p.size(); ++t) {
        VertexId v = p[t];
        bool s = start.contains(v), e = end.contains(v);
        if (s && e) {
            out.both.push_back(v);
        } else if (s) {
            out.start_only.push_back(v);
        } else if (e) {
            out.end_only.push_back(v);
        } else {
            out.neither.push_back(v);
        }
    }
    return out;
}

std::optional<std::string> certificate_violation(const Graph& g, const NoneCertificate& cert) {
    const std::size_t n = g.order();
    if (const auto* cut = std::get_if<CutVertex>(&cert)) {
        if (cut->vertex >= n) return std::string("cut vertex out of range");
        const auto before = connected_components(g).count;
        const auto after = connected_components(g.without_vertex(cut->vertex)).count;
        if (after <= before) return "removing " + std::to_string(cut->vertex) + " does not disconnect";
        return std::nullopt;
    }
    if (const auto* big = std::get_if<BigIndependentComponent>(&cert)) {
        const auto& s = big->vertices;
        VertexSet members(n);
        for (auto v : s) {
            if (v >= n) return std::string("vertex out of range");
            if (members.contains(v)) return "repeated vertex " + std::to_string(v);
            members.insert(v);
        }
        if (2 * s.size() <= n) return std::string("set is not larger than n/2");
        if (!is_independent(g, s)) return std::string("set is not independent");
        // A complement component: every outside vertex sees all of S in g.
        for (VertexId v = 0; v < n; ++v) {
            if (members.contains(v)) continue;
            VertexSet seen = g.neighbors(v);
            seen &= members;
            if (seen.count() != s.size()) {
                return "vertex " + std::to_string(v) + " is joined to the set in the complement";
            }
        }
        return std::nullopt;
    }
    const auto& stuck = std::get<RotationExhausted>(cert).path;
    if (!is_path(g, stuck)) return std::string("not a path of the graph");
    if (!is_maximal(g, stuck)) return std::string("path is not maximal");
    auto closed = make_cycle(g, stuck);
    if (!closed) return std::nullopt;
    if (closed->size() < n && !try_reopen(g, *closed)) return std::nullopt;
    return std::string("path closes into a cycle that can be extended");
}

std::string_view to_string(RotationKind kind) {
    switch (kind) {
        case RotationKind::a: return "A";
        case RotationKind::b: return "B";
        case RotationKind::c: return "C";
    }
    return "?";
}

}  // namespace hamdirac
