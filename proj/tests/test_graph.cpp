#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "circol/graph.hpp"
#include "helpers.hpp"

using namespace circol;
using namespace circol::test;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    Graph g(4, {{2, 0}, {1, 0}, {2, 3}});
    CHECK(g.edges == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
    CHECK(g.edge_index(3, 2) == 2);
    CHECK(g.edge_index(1, 3) == -1);
    CHECK(g.adj[2] == std::vector<int>{0, 3});
}

TEST_CASE("spanning tree is BFS with ascending neighbours") {
    SECTION("K3 from 0") {
        SpanningTree t = spanning_tree(complete_graph(3), 0);
        CHECK(t.parent == std::vector<int>{-1, 0, 0});
    }
    SECTION("path from 0") {
        SpanningTree t = spanning_tree(path_graph(3), 0);
        CHECK(t.parent == std::vector<int>{-1, 0, 1});
    }
    SECTION("disconnected input") {
        Graph g(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(spanning_tree(g, 0), disconnected_graph);
    }
    SECTION("deterministic across repeat runs") {
        Graph g(6, {{0, 3}, {0, 5}, {3, 5}, {1, 3}, {1, 2}, {2, 4}, {4, 5}});
        SpanningTree a = spanning_tree(g, 2);
        SpanningTree b = spanning_tree(g, 2);
        CHECK(a.parent == b.parent);
        CHECK(a.bfs_order == b.bfs_order);
    }
}

TEST_CASE("fundamental cycles") {
    SECTION("K3 closing edge") {
        Graph g = complete_graph(3);
        SpanningTree t = spanning_tree(g, 0);
        Cycle c = fundamental_cycle(g, t, {1, 2});
        CHECK(c.verts == std::vector<int>{1, 0, 2});
        CHECK(canonical_cycle(c).verts == std::vector<int>{0, 1, 2});
    }
    SECTION("C4 non-tree edge closes the full cycle") {
        Graph g = cycle_graph(4);
        SpanningTree t = spanning_tree(g, 0);
        // BFS from 0 reaches 1 and 3, then 2 via 1; the non-tree edge is {2,3}.
        Cycle c = fundamental_cycle(g, t, {2, 3});
        CHECK(c.length() == 4);
        CHECK(canonical_cycle(c).verts == std::vector<int>{0, 1, 2, 3});
    }
    SECTION("tree edge rejected") {
        Graph g = complete_graph(3);
        SpanningTree t = spanning_tree(g, 0);
        CHECK_THROWS_AS(fundamental_cycle(g, t, {0, 1}), tree_edge_error);
    }
    SECTION("contains only tree edges besides e") {
        Graph g(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {1, 4}});
        SpanningTree t = spanning_tree(g, 0);
        for (const Edge& e : g.edges) {
            if (t.parent_edge[e.u] == g.edge_index(e.u, e.v) ||
                t.parent_edge[e.v] == g.edge_index(e.u, e.v))
                continue;
            Cycle c = fundamental_cycle(g, t, e);
            for (size_t i = 0; i + 1 < c.verts.size(); ++i) {
                int a = c.verts[i], b = c.verts[i + 1];
                int ei = g.edge_index(a, b);
                CHECK((t.parent_edge[a] == ei || t.parent_edge[b] == ei));
            }
            CHECK(((c.verts.front() == e.u && c.verts.back() == e.v) ||
                   (c.verts.front() == e.v && c.verts.back() == e.u)));
        }
    }
}

TEST_CASE("strongly connected components") {
    SECTION("directed 3-cycle") {
        Digraph d(3, {{0, 1}, {1, 2}, {2, 0}});
        SccPartition scc = strongly_connected_components(d);
        REQUIRE(scc.components.size() == 1);
        CHECK(scc.nontrivial(0));
    }
    SECTION("directed path") {
        Digraph d(3, {{0, 1}, {1, 2}});
        SccPartition scc = strongly_connected_components(d);
        CHECK(scc.components.size() == 3);
        for (int c = 0; c < 3; ++c) CHECK_FALSE(scc.nontrivial(c));
    }
    SECTION("2-cycle is nontrivial") {
        Digraph d(2, {{0, 1}, {1, 0}});
        SccPartition scc = strongly_connected_components(d);
        REQUIRE(scc.components.size() == 1);
        CHECK(scc.nontrivial(0));
    }
}

TEST_CASE("SCC partition matches naive reachability closure on random digraphs") {
    Rng rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(7));  // n <= 8
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && rng.chance(1, 3)) arcs.emplace_back(i, j);
        Digraph d(n, arcs);
        std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i) {
            reach[i][i] = 1;
            for (int j : d.out[i]) reach[i][j] = 1;
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
        SccPartition scc = strongly_connected_components(d);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool same = scc.comp_of[i] == scc.comp_of[j];
                bool mutual = reach[i][j] && reach[j][i];
                REQUIRE(same == mutual);
            }
    }
}

TEST_CASE("topological sort") {
    SECTION("simple chain") {
        Digraph d(3, {{0, 1}, {1, 2}});
        auto res = topological_sort(d);
        REQUIRE(std::holds_alternative<std::vector<int>>(res));
        CHECK(std::get<std::vector<int>>(res) == std::vector<int>{0, 1, 2});
    }
    SECTION("2-cycle found") {
        Digraph d(2, {{0, 1}, {1, 0}});
        auto res = topological_sort(d);
        REQUIRE(std::holds_alternative<Cycle>(res));
        CHECK(std::get<Cycle>(res).verts == std::vector<int>{0, 1});
    }
    SECTION("empty arcs break ties by id") {
        Digraph d(3);
        auto res = topological_sort(d);
        REQUIRE(std::holds_alternative<std::vector<int>>(res));
        CHECK(std::get<std::vector<int>>(res) == std::vector<int>{0, 1, 2});
    }
    SECTION("witness cycle is a directed cycle") {
        Rng rng(77);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 2 + static_cast<int>(rng.below(7));
            std::vector<std::pair<int, int>> arcs;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j && rng.chance(1, 3)) arcs.emplace_back(i, j);
            Digraph d(n, arcs);
            auto res = topological_sort(d);
            SccPartition scc = strongly_connected_components(d);
            bool has_nontrivial = false;
            for (size_t c = 0; c < scc.components.size(); ++c)
                has_nontrivial |= scc.nontrivial(static_cast<int>(c));
            if (std::holds_alternative<std::vector<int>>(res)) {
                REQUIRE_FALSE(has_nontrivial);
                const auto& ord = std::get<std::vector<int>>(res);
                std::vector<int> pos(n);
                for (int i = 0; i < n; ++i) pos[ord[i]] = i;
                for (int v = 0; v < n; ++v)
                    for (int w : d.out[v]) REQUIRE(pos[v] < pos[w]);
            } else {
                REQUIRE(has_nontrivial);
                const auto& cyc = std::get<Cycle>(res).verts;
                REQUIRE(cyc.size() >= 2);
                for (size_t i = 0; i < cyc.size(); ++i)
                    REQUIRE(d.has_arc(cyc[i], cyc[(i + 1) % cyc.size()]));
            }
        }
    }
}

TEST_CASE("cycle enumeration") {
    SECTION("K4 has 7 cycles, 4 of them triangles") {
        auto cycles = enumerate_cycles(complete_graph(4));
        CHECK(cycles.size() == 7);
        int triangles = 0;
        for (const Cycle& c : cycles) triangles += c.length() == 3;
        CHECK(triangles == 4);
    }
    SECTION("trees have none") {
        CHECK(enumerate_cycles(path_graph(6)).empty());
    }
    SECTION("C6 has exactly one") {
        auto cycles = enumerate_cycles(cycle_graph(6));
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].verts == std::vector<int>{0, 1, 2, 3, 4, 5});
    }
    SECTION("K_n counts match the closed form for n <= 6") {
        auto choose = [](int n, int k) {
            long long r = 1;
            for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
            return r;
        };
        for (int n = 3; n <= 6; ++n) {
            long long expect = 0;
            for (int l = 3; l <= n; ++l) {
                long long fact = 1;
                for (int i = 2; i <= l - 1; ++i) fact *= i;
                expect += choose(n, l) * fact / 2;
            }
            CHECK(static_cast<long long>(enumerate_cycles(complete_graph(n)).size()) == expect);
        }
    }
    SECTION("each cycle appears once, canonically") {
        Graph g(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {1, 4}, {0, 5}, {5, 4}});
        auto cycles = enumerate_cycles(g);
        std::set<std::vector<int>> reps;
        for (const Cycle& c : cycles) {
            CHECK(canonical_cycle(c).verts == c.verts);
            reps.insert(c.verts);
        }
        CHECK(reps.size() == cycles.size());
    }
    SECTION("budget cap throws") {
        CHECK_THROWS_AS(enumerate_cycles(complete_graph(5), 0, 3), budget_exceeded);
    }
    SECTION("max_len filters") {
        auto cycles = enumerate_cycles(complete_graph(4), 3);
        CHECK(cycles.size() == 4);
    }
}

TEST_CASE("canonical cycle representative") {
    Cycle c{{3, 1, 2}};
    CHECK(canonical_cycle(c).verts == std::vector<int>{1, 2, 3});
    Cycle d{{4, 3, 2, 1}};
    CHECK(canonical_cycle(d).verts == std::vector<int>{1, 2, 3, 4});
    Cycle e{{5, 0, 2, 6}};
    CHECK(canonical_cycle(e).verts == std::vector<int>{0, 2, 6, 5});
}
