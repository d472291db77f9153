#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "msr/graph.hpp"

using namespace msr;

TEST_CASE("parse_instance accepts the parallel-paths fixture") {
    Instance inst = fixtures::fix_a();
    CHECK(inst.graph.vertex_count() == 6);
    CHECK(inst.graph.edge_count() == 6);
    CHECK(inst.s == 1);
    CHECK(inst.t == 6);
    CHECK(inst.A == std::vector<int>{2, 3});
    CHECK(inst.B == std::vector<int>{4, 5});
    CHECK(inst.k() == 2);
}

TEST_CASE("parse_instance reports malformed input with line numbers") {
    SUBCASE("missing B line") {
        std::string text = fixtures::kFixA;
        text = text.substr(0, text.find("B 4 5"));
        CHECK_THROWS_AS(parse_instance(text), SyntaxError);
    }
    SUBCASE("duplicate edge") {
        std::string text = "p msr 3 2\ne 1 3\ne 3 1\ns 1\nt 2\nA 3\nB 3\n";
        CHECK_THROWS_AS(parse_instance(text), SyntaxError);
    }
    SUBCASE("id outside the declared range") {
        std::string text = "p msr 3 1\ne 1 7\ns 1\nt 2\nA 3\nB 3\n";
        CHECK_THROWS_AS(parse_instance(text), SyntaxError);
    }
    SUBCASE("trailing garbage") {
        std::string text = std::string(fixtures::kFixA) + "x 1 2\n";
        CHECK_THROWS_AS(parse_instance(text), SyntaxError);
    }
    SUBCASE("line number points at the bad line") {
        std::string text = "p msr 3 1\ne 1 1\ns 1\nt 2\nA 3\nB 3\n";
        try {
            parse_instance(text);
            FAIL("expected SyntaxError");
        } catch (const SyntaxError& e) {
            CHECK(e.line == 2);
        }
    }
}

TEST_CASE("parse_instance validates the separators") {
    SUBCASE("A too small to separate") {
        std::string text = fixtures::kFixA;
        text.replace(text.find("A 2 3"), 5, "A 2");
        CHECK_THROWS_AS(parse_instance(text), NotSeparator);
    }
    SUBCASE("oversized separator is not minimum") {
        // single path with a redundant two-vertex separator
        std::string text = "p msr 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ns 1\nt 5\nA 2 3\nB 2 3\n";
        CHECK_THROWS_AS(parse_instance(text), NotMinimum);
    }
    SUBCASE("adjacent terminals") {
        std::string text = "p msr 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\ns 1\nt 4\nA 2\nB 3\n";
        CHECK_THROWS_AS(parse_instance(text), TerminalsAdjacent);
    }
    SUBCASE("terminal inside A") {
        std::string text = "p msr 4 3\ne 1 2\ne 2 3\ne 3 4\ns 1\nt 4\nA 1\nB 3\n";
        CHECK_THROWS_AS(parse_instance(text), InvalidSet);
    }
}

TEST_CASE("format_instance round-trips") {
    Instance inst = fixtures::fix_c();
    Instance again = parse_instance(format_instance(inst));
    CHECK(fixtures::same_instance(inst, again));
}

TEST_CASE("is_separator on the fixture") {
    Instance inst = fixtures::fix_a();
    CHECK(is_separator(inst, {2, 3}));
    CHECK_FALSE(is_separator(inst, {2}));
    CHECK(is_separator(inst, {2, 5}));  // one vertex per parallel path
    CHECK_THROWS_AS(is_separator(inst, {1, 2}), InvalidSet);
}

TEST_CASE("max_disjoint_paths on fixed shapes") {
    SUBCASE("two parallel paths") {
        Instance inst = fixtures::fix_a();
        DisjointPaths dp = max_disjoint_paths(inst);
        REQUIRE(dp.count() == 2);
        CHECK(dp.paths[0] == std::vector<int>{1, 2, 4, 6});
        CHECK(dp.paths[1] == std::vector<int>{1, 3, 5, 6});
    }
    SUBCASE("single path") {
        Instance inst = parse_instance("p msr 3 2\ne 1 3\ne 2 3\ns 1\nt 2\nA 3\nB 3\n");
        DisjointPaths dp = max_disjoint_paths(inst);
        REQUIRE(dp.count() == 1);
        CHECK(dp.paths[0] == std::vector<int>{1, 3, 2});
    }
    SUBCASE("triangle gadget has one clean path per private chain") {
        Instance inst = fixtures::fix_c();
        DisjointPaths dp = max_disjoint_paths(inst);
        REQUIRE(dp.count() == 3);
        for (const auto& p : dp.paths) {
            REQUIRE(p.size() == 5);
            CHECK(p[0] == 1);
            CHECK(p[1] == p[2] - 3);  // s_v then its v
            CHECK(p[3] == p[2] + 3);  // then its t_v
            CHECK(p[4] == 11);
        }
    }
}

TEST_CASE("flow paths are valid and internally disjoint") {
    auto corpus = fixtures::mixed_corpus(60, 42);
    for (const Instance& inst : corpus) {
        DisjointPaths dp = max_disjoint_paths(inst);
        std::set<int> interior_seen;
        for (const auto& p : dp.paths) {
            REQUIRE(p.front() == inst.s);
            REQUIRE(p.back() == inst.t);
            std::set<int> on_path(p.begin(), p.end());
            CHECK(on_path.size() == p.size());  // vertices distinct
            for (size_t j = 0; j + 1 < p.size(); ++j) CHECK(inst.graph.has_edge(p[j], p[j + 1]));
            for (size_t j = 1; j + 1 < p.size(); ++j)
                CHECK(interior_seen.insert(p[j]).second);  // interiors unshared
        }
    }
}

TEST_CASE("Menger equality against subset enumeration") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int done = 0;
    while (done < 40) {
        std::uniform_int_distribution<int> nd(4, 10);
        int n = nd(rng);
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (coin(rng) < 0.35) g.add_edge(u, v);
        std::uniform_int_distribution<int> vd(1, n);
        int s = vd(rng), t = vd(rng);
        if (s == t || g.has_edge(s, t)) continue;
        int brute = fixtures::brute_min_separator_size(g, s, t);
        CHECK(disjoint_paths(g, s, t).count() == brute);
        ++done;
    }
}

TEST_CASE("min_separator_size equals the brute-force size on instances") {
    for (const Instance& inst : fixtures::mixed_corpus(30, 5)) {
        CHECK(min_separator_size(inst) ==
              fixtures::brute_min_separator_size(inst.graph, inst.s, inst.t));
        CHECK(min_separator_size(inst) == inst.k());
    }
}

TEST_CASE("is_separator agrees with the independent DFS on random sets") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int trials = 0;
    while (trials < 1000) {
        std::uniform_int_distribution<int> nd(4, 11);
        int n = nd(rng);
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (coin(rng) < 0.3) g.add_edge(u, v);
        std::uniform_int_distribution<int> vd(1, n);
        int s = vd(rng), t = vd(rng);
        if (s == t) continue;
        std::vector<int> S;
        for (int v = 1; v <= n; ++v)
            if (v != s && v != t && coin(rng) < 0.3) S.push_back(v);
        CHECK(separates(g, s, t, S) == fixtures::dfs_separates(g, s, t, S));
        ++trials;
    }
}
