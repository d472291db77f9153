#include <doctest.h>

#include "fixtures.hpp"
#include "msr/kernel.hpp"
#include "msr/solvers.hpp"

using namespace msr;

namespace {

// a two-path ladder whose first path has `interior` rungs-carrying vertices,
// built so that preprocessing keeps every one of them (degree 3 everywhere)
Instance long_ladder(int interior) {
    int half = (interior + 1) / 2;
    // ids: s=1, first path x_1..x_interior, second path y_1..y_half, t last
    int t = 1 + interior + half + 1;
    Graph g(t);
    auto x = [&](int j) { return 1 + j; };
    auto y = [&](int j) { return 1 + interior + j; };
    g.add_edge(1, x(1));
    for (int j = 1; j < interior; ++j) g.add_edge(x(j), x(j + 1));
    g.add_edge(x(interior), t);
    g.add_edge(1, y(1));
    for (int j = 1; j < half; ++j) g.add_edge(y(j), y(j + 1));
    g.add_edge(y(half), t);
    for (int j = 1; j <= interior; ++j) g.add_edge(x(j), y((j + 1) / 2));
    return make_instance(std::move(g), 1, t, {x(1), y(1)}, {x(interior), y(half)});
}

bool within_bounds(const ReducedInstance& ri, int budget) {
    long long v = ri.instance.graph.vertex_count();
    long long e = ri.instance.graph.edge_count();
    return v <= 8LL * budget * budget + 5 * budget && e <= 12LL * budget * budget + 7 * budget;
}

}  // namespace

TEST_CASE("kernelize decides NO when the path-length rule fires") {
    // budget 2 admits paths of at most 4*(2+1)^2 + 4 = 40 vertices
    Instance inst = long_ladder(41);
    ReducedInstance ri = preprocess_tj(inst);
    REQUIRE(ri.instance.graph.vertex_count() == inst.graph.vertex_count());  // nothing reducible
    KernelOutcome out = kernelize(inst, 2);
    CHECK(out.kind == KernelOutcome::Kind::decided_no);
}

TEST_CASE("kernelize decides NO when there are more tokens than jumps") {
    KernelOutcome out = kernelize(fixtures::fix_a(), 1);
    CHECK(out.kind == KernelOutcome::Kind::decided_no);
}

TEST_CASE("kernelize decides YES when the separators coincide") {
    Instance inst = parse_instance("p msr 3 2\ne 1 3\ne 2 3\ns 1\nt 2\nA 3\nB 3\n");
    KernelOutcome out = kernelize(inst, 0);
    CHECK(out.kind == KernelOutcome::Kind::decided_yes);
}

TEST_CASE("kernelize emits the one-edge gadget unchanged at budget 3") {
    KernelOutcome out = kernelize(fixtures::fix_b(), 3);
    REQUIRE(out.kind == KernelOutcome::Kind::kernel);
    CHECK(within_bounds(*out.kernel, 3));
    SolveResult res = solve_tj_shortest(out.kernel->instance);
    REQUIRE(res.feasible());
    CHECK(res.length() == 3);  // within the budget, so a yes-instance
}

TEST_CASE("kernelize passes infeasible instances through undecided") {
    KernelOutcome out = kernelize(fixtures::fix_dead(), 2);
    REQUIRE(out.kind == KernelOutcome::Kind::kernel);
    CHECK_FALSE(solve_tj_shortest(out.kernel->instance).feasible());
}

TEST_CASE("kernel verdicts agree with the oracle at every budget") {
    for (const Instance& inst : fixtures::mixed_corpus(45, 90210)) {
        SolveResult ref = oracle_bfs(inst, Model::jump);
        for (int budget = 0; budget <= 4; ++budget) {
            KernelOutcome out = kernelize(inst, budget);
            bool yes;
            if (out.kind == KernelOutcome::Kind::decided_yes) {
                yes = true;
            } else if (out.kind == KernelOutcome::Kind::decided_no) {
                yes = false;
            } else {
                CHECK(within_bounds(*out.kernel, budget));
                SolveResult res = solve_tj_shortest(out.kernel->instance);
                yes = res.feasible() && static_cast<int>(res.length()) <= budget;
            }
            bool expect = ref.feasible() && static_cast<int>(ref.length()) <= budget;
            CHECK(yes == expect);
        }
    }
}
