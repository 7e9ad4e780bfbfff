#include "doctest.h"

#include <algorithm>
#include <set>

#include "cip/graph.hpp"
#include "test_support.hpp"

using namespace cip;

TEST_CASE("build_graph normalizes raw edge lists") {
    Graph g = build_graph(3, {{0, 1}, {1, 0}, {2, 2}, {0, 1}});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(!g.adjacent(0, 2));
    CHECK(!g.adjacent(2, 2));
    CHECK(g.degree(2) == 0);
}

TEST_CASE("build_graph rejects out-of-range endpoints") {
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(build_graph(3, {{-1, 1}}), InputError);
}

TEST_CASE("adjacency structure is consistent") {
    Graph g = ts::er(40, 0.3, 11);
    long long deg_sum = 0;
    for (int u = 0; u < g.num_vertices(); ++u) {
        const auto& nb = g.neighbors(u);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
        deg_sum += g.degree(u);
        for (int v : nb) {
            CHECK(g.adjacent(u, v));
            CHECK(g.adjacent(v, u));
        }
    }
    CHECK(deg_sum == 2 * g.num_edges());

    auto es = g.edges();
    CHECK((long long)es.size() == g.num_edges());
    CHECK(std::is_sorted(es.begin(), es.end()));
    for (auto [u, v] : es) CHECK(u < v);
}

TEST_CASE("bitset rows mirror the neighbor lists") {
    Graph g = ts::er(50, 0.25, 7);
    REQUIRE(g.has_bitsets());
    for (int u = 0; u < g.num_vertices(); ++u) {
        CHECK((int)g.row(u).count() == g.degree(u));
        for (int v = 0; v < g.num_vertices(); ++v)
            CHECK(g.row(u).test(v) == g.adjacent(u, v));
    }
}

TEST_CASE("threshold zero skips bitset rows but keeps the same graph") {
    auto edges = ts::er_edges(30, 0.3, 5);
    Graph with = build_graph(30, edges);
    Graph flat = build_graph(30, edges, 0);
    CHECK(with.has_bitsets());
    CHECK(!flat.has_bitsets());
    CHECK(with == flat);
}

TEST_CASE("remove_vertices builds the induced subgraph with id maps") {
    Graph g = ts::er(25, 0.35, 3);
    std::vector<int> out = {3, 17, 4, 9}; // deliberately unsorted
    VertexRemoval r = remove_vertices(g, out);

    CHECK(r.graph.num_vertices() == 21);
    CHECK((int)r.new_to_old.size() == 21);
    for (int v : out) CHECK(r.old_to_new[v] == -1);
    for (int j = 0; j < 21; ++j) CHECK(r.old_to_new[r.new_to_old[j]] == j);

    std::set<int> gone(out.begin(), out.end());
    for (int u = 0; u < g.num_vertices(); ++u) {
        if (gone.count(u)) continue;
        for (int v = u + 1; v < g.num_vertices(); ++v) {
            if (gone.count(v)) continue;
            CHECK(r.graph.adjacent(r.old_to_new[u], r.old_to_new[v]) == g.adjacent(u, v));
        }
    }
}

TEST_CASE("remove_vertices with empty and full sets") {
    Graph g = ts::cycle(6);
    CHECK(remove_vertices(g, {}).graph == g);
    CHECK(remove_vertices(g, {0, 1, 2, 3, 4, 5}).graph.num_vertices() == 0);
}

TEST_CASE("remove_edges deletes exactly the listed edges") {
    Graph g = ts::complete(5);
    Graph h = remove_edges(g, {{0, 1}, {3, 2}});
    CHECK(h.num_edges() == 8);
    CHECK(!h.adjacent(0, 1));
    CHECK(!h.adjacent(2, 3));
    CHECK(h.adjacent(0, 2));
    CHECK_THROWS_AS(remove_edges(h, {{0, 1}}), InputError);
}

TEST_CASE("triangle_counts matches a direct common-neighbor count") {
    for (unsigned seed : {1u, 2u, 3u}) {
        Graph g = ts::er(25, 0.4, seed);
        EdgeTriangleCount tc = triangle_counts(g);
        REQUIRE(tc.edges.size() == tc.count.size());
        CHECK((long long)tc.edges.size() == g.num_edges());
        for (std::size_t i = 0; i < tc.edges.size(); ++i) {
            auto [u, v] = tc.edges[i];
            int direct = 0;
            for (int w : g.neighbors(u))
                if (g.adjacent(v, w)) ++direct;
            CHECK(tc.count[i] == direct);
            CHECK(tc.lookup(u, v) == tc.count[i]);
            CHECK(tc.lookup(v, u) == tc.count[i]);
        }
        CHECK(tc.lookup(0, 0) == -1);
    }
}

TEST_CASE("triangle-free graphs count zero everywhere") {
    for (const Graph& g : {ts::complete_bipartite(4, 5), ts::cycle(8), ts::star(6)}) {
        EdgeTriangleCount tc = triangle_counts(g);
        for (int c : tc.count) CHECK(c == 0);
    }
}
