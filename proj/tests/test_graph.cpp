#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamdirac/generators.hpp"
#include "hamdirac/graph.hpp"
#include "hamdirac/oracle.hpp"
#include "test_graphs.hpp"

using namespace hamdirac;
using namespace hamdirac::testing;

namespace {

std::size_t component_count_without(const Graph& g, VertexId v) {
    return connected_components(g.without_vertex(v)).count;
}

// Definition-level articulation check: removal raises the component count.
std::optional<VertexId> brute_cut_vertex(const Graph& g) {
    const std::size_t before = connected_components(g).count;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (component_count_without(g, v) > before) return v;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("build_graph") {
    const Graph k3 = complete(3);
    CHECK(k3.order() == 3);
    for (VertexId v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    const Graph empty(4, std::vector<Edge>{});
    for (VertexId v = 0; v < 4; ++v) CHECK(empty.degree(v) == 0);

    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 3}}), GraphError);

    SUBCASE("duplicates are idempotent") {
        const Graph g(3, std::vector<Edge>{{0, 1}, {1, 0}, {0, 1}});
        CHECK(g.edge_count() == 1);
        CHECK(g == Graph(3, std::vector<Edge>{{0, 1}}));
    }
    SUBCASE("zero and one vertex graphs are constructible") {
        CHECK(Graph(0, std::vector<Edge>{}).order() == 0);
        CHECK(Graph(1, std::vector<Edge>{}).order() == 1);
    }
}

TEST_CASE("degree") {
    CHECK(complete(3).degree(0) == 2);
    const Graph star(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(star.degree(0) == 4);
    CHECK(bowtie().degree(2) == 4);
    CHECK_THROWS_AS(bowtie().degree(5), GraphError);
}

TEST_CASE("min_degree") {
    CHECK(cycle_graph(5).min_degree() == 2);
    CHECK(complete_bipartite(2, 3).min_degree() == 2);
    CHECK(bowtie().min_degree() == 2);
    CHECK_THROWS_AS(Graph(0, std::vector<Edge>{}).min_degree(), GraphError);
}

TEST_CASE("complement") {
    CHECK(complete(4).complement() == Graph(4, std::vector<Edge>{}));
    const Graph c5c = cycle_graph(5).complement();
    CHECK(c5c.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
    // Word boundary: padding bits past n must stay clear.
    const Graph big(65, std::vector<Edge>{{0, 64}});
    CHECK(big.complement().edge_count() == 65 * 64 / 2 - 1);
    CHECK(big.complement().complement() == big);
}

TEST_CASE("connected_components") {
    const Graph k3k2(5, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    auto labels = connected_components(k3k2);
    CHECK(labels.count == 2);
    CHECK(labels.members(0) == std::vector<VertexId>{0, 1, 2});
    CHECK(labels.members(1) == std::vector<VertexId>{3, 4});
    CHECK(labels.largest() == 0);

    CHECK(connected_components(cycle_graph(6)).count == 1);

    // complement(K_{2,3}) with sides {0,1} and {2,3,4} is K2 + K3.
    labels = connected_components(complete_bipartite(2, 3).complement());
    CHECK(labels.count == 2);
    CHECK(labels.members(labels.largest()) == std::vector<VertexId>{2, 3, 4});

    SUBCASE("ties go to the component with the smaller vertex") {
        const Graph two(4, std::vector<Edge>{{2, 3}, {0, 1}});
        auto l = connected_components(two);
        CHECK(l.members(l.largest()) == std::vector<VertexId>{0, 1});
    }
}

TEST_CASE("find_cut_vertex") {
    CHECK(find_cut_vertex(bowtie()) == VertexId{2});
    CHECK_FALSE(find_cut_vertex(cycle_graph(5)));
    CHECK(find_cut_vertex(Graph(3, std::vector<Edge>{{0, 1}, {1, 2}})) == VertexId{1});
    SUBCASE("smallest id among several") {
        // Path 3-0-4-1-2: cut vertices 0, 4, 1.
        const Graph p(5, std::vector<Edge>{{3, 0}, {0, 4}, {4, 1}, {1, 2}});
        CHECK(find_cut_vertex(p) == VertexId{0});
    }
    SUBCASE("root with two DFS children") {
        const Graph g(5, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
        CHECK(find_cut_vertex(g) == VertexId{0});
    }
}

TEST_CASE("find_cut_vertex matches the removal definition on all graphs up to 6 vertices") {
    for (std::size_t n = 1; n <= 6; ++n) {
        oracle::LabeledGraphs all(n);
        while (auto g = all.next()) {
            REQUIRE_MESSAGE(find_cut_vertex(*g) == brute_cut_vertex(*g), describe(*g));
        }
    }
}

TEST_CASE("find_cut_vertex matches the removal definition on sampled 7-vertex graphs") {
    oracle::LabeledGraphs all(7);
    gen::Rng rng(7);
    for (int t = 0; t < 20000; ++t) {
        const Graph g = all.at(rng.below(all.total()));
        REQUIRE_MESSAGE(find_cut_vertex(g) == brute_cut_vertex(g), describe(g));
    }
}

TEST_CASE("find_cut_vertex on larger random graphs") {
    gen::Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 8 + rng.below(40);
        const double p = 0.02 + 0.2 * rng.unit();
        const Graph g = gen::random_graph(n, p, rng);
        REQUIRE_MESSAGE(find_cut_vertex(g) == brute_cut_vertex(g), describe(g));
    }
}

TEST_CASE("is_clique") {
    const std::vector<VertexId> all{0, 1, 2, 3, 4};
    CHECK(is_clique(complete(5), all));
    const std::vector<VertexId> first3{0, 1, 2};
    CHECK_FALSE(is_clique(cycle_graph(5), first3));
    const std::vector<VertexId> side{2, 3, 4};
    CHECK(is_clique(complete_bipartite(2, 3).complement(), side));
}

TEST_CASE("structural invariants on random graphs") {
    gen::Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng.below(90);
        const Graph g = gen::random_graph(n, rng.unit(), rng);
        const Graph co = g.complement();
        std::size_t degree_sum = 0;
        for (VertexId v = 0; v < n; ++v) {
            CHECK(g.degree(v) <= n - 1);
            CHECK(g.degree(v) + co.degree(v) == n - 1);
            CHECK_FALSE(g.adjacent(v, v));
            degree_sum += g.degree(v);
        }
        CHECK(degree_sum == 2 * g.edge_count());
        CHECK(co.complement() == g);

        const auto labels = connected_components(g);
        for (auto [u, v] : g.edges()) CHECK(labels.label[u] == labels.label[v]);
        // Labels are ordered by smallest member.
        std::size_t seen = 0;
        for (VertexId v = 0; v < n; ++v) {
            CHECK(labels.label[v] <= seen);
            if (labels.label[v] == seen) ++seen;
        }
        CHECK(seen == labels.count);
    }
}
