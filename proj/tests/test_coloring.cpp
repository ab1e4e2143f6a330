#include <algorithm>

#include "doctest.h"
#include "tsic/coloring.hpp"
#include "tsic/graph_algos.hpp"
#include "tsic/rng.hpp"

using namespace tsic;

namespace {

TuicpInstance cyclic3() {
    TuicpInstance inst;
    inst.d = Digraph(3);
    inst.d.add_edge(0, 1);
    inst.d.add_edge(1, 0);
    inst.d.add_edge(1, 2);
    inst.d.add_edge(2, 0);
    inst.part.p1 = {1};
    inst.part.p2 = {2};
    inst.part.p3 = {3};
    inst.t = 1;
    return inst;
}

// The printed two-color tables for the worked 3-message instance: sender 1
// colors cell (i,k) by [i == k], sender 2 colors (j,k) by [j == k].
TwoSenderColoring xor_tables() {
    TwoSenderColoring c;
    c.t = 1;
    c.m1 = c.m2 = c.m3 = 1;
    c.table1 = {1, 0, 0, 1};
    c.table2 = {1, 0, 0, 1};
    c.num_colors1 = 2;
    c.num_colors2 = 2;
    return c;
}

// Reference minimizer: same budget order as the product code, but feasibility
// decided by plain odometer enumeration of both tables and direct validation
// against the confusion-graph adjacency. No pruning, no symmetry breaking.
struct OracleOutcome {
    int bits = 0;
    int a1 = 0;
    int a2 = 0;
};

OracleOutcome oracle_beta(const TuicpInstance& inst) {
    const ConfusionGraph cg = ConfusionGraph::build(inst);
    const int w3 = cg.label_width(3);
    const int n1 = 1 << (cg.label_width(1) + w3);
    const int n2 = 1 << (cg.label_width(2) + w3);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < cg.num_vertices(); ++u) {
        for (std::uint32_t d : cg.differences()) {
            if ((u ^ d) > u) edges.emplace_back(u, u ^ d);
        }
    }
    auto cell1 = [&](std::uint32_t v) { return (cg.label(v, 1) << w3) | cg.label(v, 3); };
    auto cell2 = [&](std::uint32_t v) { return (cg.label(v, 2) << w3) | cg.label(v, 3); };

    auto feasible = [&](int a1, int a2) {
        std::vector<int> t1(static_cast<std::size_t>(n1), 0);
        while (true) {
            std::vector<int> t2(static_cast<std::size_t>(n2), 0);
            while (true) {
                bool ok = true;
                for (const auto& [u, v] : edges) {
                    if (t1[cell1(u)] == t1[cell1(v)] && t2[cell2(u)] == t2[cell2(v)]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return true;
                int p = 0;
                while (p < n2 && ++t2[p] == a2) t2[p++] = 0;
                if (p == n2) break;
            }
            int p = 0;
            while (p < n1 && ++t1[p] == a1) t1[p++] = 0;
            if (p == n1) break;
        }
        return false;
    };

    for (int obj = 0; obj <= ceil_log2(n1) + ceil_log2(n2); ++obj) {
        for (int s = 2; s <= n1 + n2; ++s) {
            for (int a1 = std::max(1, s - n2); a1 <= std::min(n1, s - 1); ++a1) {
                const int a2 = s - a1;
                if (ceil_log2(a1) + ceil_log2(a2) != obj) continue;
                if (feasible(a1, a2)) return {obj, a1, a2};
            }
        }
    }
    return {};
}

TuicpInstance random_small_instance(Rng& rng) {
    const int m = rng.range(2, 3);
    TuicpInstance inst;
    inst.d = Digraph(m);
    inst.t = 1;
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
            if (u != v && rng.coin()) inst.d.add_edge(u, v);
        }
    }
    if (m == 2) {
        const int pick = rng.range(0, 3);
        static const int parts2[4][2] = {{1, 2}, {1, 3}, {2, 3}, {3, 3}};
        for (int msg = 1; msg <= 2; ++msg) {
            const int p = parts2[pick][msg - 1];
            (p == 1 ? inst.part.p1 : p == 2 ? inst.part.p2 : inst.part.p3).push_back(msg);
        }
    } else {
        // Keep both cell tables at <= 4 cells so the odometer oracle stays cheap.
        static const int parts3[3][3] = {{1, 2, 3}, {1, 1, 2}, {1, 2, 2}};
        const int pick = rng.range(0, 2);
        for (int msg = 1; msg <= 3; ++msg) {
            const int p = parts3[pick][msg - 1];
            (p == 1 ? inst.part.p1 : p == 2 ? inst.part.p2 : inst.part.p3).push_back(msg);
        }
    }
    return inst;
}

}  // namespace

TEST_CASE("printed two-color tables are a valid two-sender coloring") {
    const ConfusionGraph cg = ConfusionGraph::build(cyclic3());
    CHECK_FALSE(validate_coloring(xor_tables(), cg).has_value());
}

TEST_CASE("validator reports the first violating edge with its pattern") {
    const ConfusionGraph cg = ConfusionGraph::build(cyclic3());

    TwoSenderColoring broken1 = xor_tables();
    broken1.table1[2] = 1;  // cell (i=1,k=0) now matches (0,0) across a part-1 edge
    auto v1 = validate_coloring(broken1, cg);
    REQUIRE(v1.has_value());
    CHECK(v1->u == 0);
    CHECK(v1->v == 4);
    CHECK(v1->pattern == "only exclusive part 1 differs: sender-1 colors must differ");

    // Collapsing (1,1,1) onto (0,1,0)'s pair breaks that edge too, though the
    // scan reports an earlier casualty of the same table edit first.
    TwoSenderColoring broken2 = xor_tables();
    broken2.table2[3] = 0;
    auto v2 = validate_coloring(broken2, cg);
    REQUIRE(v2.has_value());
    const std::uint32_t a = 0b010, b = 0b111;
    CHECK(broken2.table1[broken2.vertex_cell1(cg, a)] ==
          broken2.table1[broken2.vertex_cell1(cg, b)]);
    CHECK(broken2.table2[broken2.vertex_cell2(cg, a)] ==
          broken2.table2[broken2.vertex_cell2(cg, b)]);
    CHECK(edge_pattern(cg, a, b) == "common part differs: ordered color pair must differ");

    TwoSenderColoring constant;
    constant.t = 1;
    constant.m1 = constant.m2 = constant.m3 = 1;
    constant.table1.assign(4, 0);
    constant.table2.assign(4, 0);
    constant.num_colors1 = constant.num_colors2 = 1;
    auto v3 = validate_coloring(constant, cg);
    REQUIRE(v3.has_value());
    CHECK(v3->u == 0);
}

TEST_CASE("validator rejects malformed tables") {
    const ConfusionGraph cg = ConfusionGraph::build(cyclic3());
    TwoSenderColoring c = xor_tables();
    c.table1.pop_back();
    CHECK_THROWS_AS(validate_coloring(c, cg), input_error);

    c = xor_tables();
    c.table2[0] = 5;
    CHECK_THROWS_AS(validate_coloring(c, cg), input_error);

    c = xor_tables();
    c.num_colors1 = 3;  // color 2 never used
    CHECK_THROWS_AS(validate_coloring(c, cg), input_error);

    c = xor_tables();
    c.t = 2;
    CHECK_THROWS_AS(validate_coloring(c, cg), input_error);
}

TEST_CASE("exact search on the worked 3-message instance") {
    const OptimalColoring opt = optimal_two_sender_coloring(cyclic3());
    CHECK(opt.budget1 == 2);
    CHECK(opt.budget2 == 2);
    CHECK(opt.rate == Rational{2, 1});
    CHECK(opt.coloring.table1 == std::vector<int>{0, 1, 1, 0});
    CHECK(opt.coloring.table2 == std::vector<int>{0, 1, 1, 0});
    const ConfusionGraph cg = ConfusionGraph::build(cyclic3());
    CHECK_FALSE(validate_coloring(opt.coloring, cg).has_value());

    const OptimalColoring again = optimal_two_sender_coloring(cyclic3());
    CHECK(again.coloring.table1 == opt.coloring.table1);
    CHECK(again.coloring.table2 == opt.coloring.table2);

    const OracleOutcome ref = oracle_beta(cyclic3());
    CHECK(ref.bits == 2);
    CHECK(ref.a1 == 2);
    CHECK(ref.a2 == 2);
}

TEST_CASE("two exclusive single-bit messages need one bit each") {
    TuicpInstance inst;
    inst.d = Digraph(2);
    inst.part.p1 = {1};
    inst.part.p2 = {2};
    inst.t = 1;
    const OptimalColoring opt = optimal_two_sender_coloring(inst);
    CHECK(opt.budget1 == 2);
    CHECK(opt.budget2 == 2);
    CHECK(opt.rate == Rational{2, 1});
}

TEST_CASE("exact search agrees with the odometer oracle on random instances") {
    Rng rng(211);
    for (int trial = 0; trial < 15; ++trial) {
        const TuicpInstance inst = random_small_instance(rng);
        CAPTURE(trial);
        const OracleOutcome ref = oracle_beta(inst);
        const OptimalColoring opt = optimal_two_sender_coloring(inst);
        CHECK(opt.rate == Rational{ref.bits, 1});
        CHECK(opt.budget1 == ref.a1);
        CHECK(opt.budget2 == ref.a2);
        const ConfusionGraph cg = ConfusionGraph::build(inst);
        CHECK_FALSE(validate_coloring(opt.coloring, cg).has_value());
    }
}

TEST_CASE("fully-participated variant-16 singletons: three bits total") {
    const auto& pinned = pinned_case1_digraphs();
    const Digraph single(1);
    const TuicpInstance inst =
        build_fully_participated(single, single, single, pinned.at(16), 1);
    const OptimalColoring opt = optimal_two_sender_coloring(inst);
    CHECK(opt.rate == Rational{3, 1});
    CHECK(opt.budget1 == 2);
    CHECK(opt.budget2 == 4);
    const OracleOutcome ref = oracle_beta(inst);
    CHECK(ref.bits == 3);
    CHECK(ref.a1 == 2);
    CHECK(ref.a2 == 4);
}

TEST_CASE("3-cycle interaction with a two-message common part: exact three bits") {
    // Parts (1,1,2), internal digraphs edgeless, interactions 1->2->3->1.
    Digraph d(4);
    d.add_edge(0, 1);  // receiver 1 knows message 2
    d.add_edge(1, 2);  // receiver 2 knows messages 3 and 4
    d.add_edge(1, 3);
    d.add_edge(2, 0);  // common-part receivers know message 1
    d.add_edge(3, 0);
    TuicpInstance inst;
    inst.d = d;
    inst.part.p1 = {1};
    inst.part.p2 = {2};
    inst.part.p3 = {3, 4};
    inst.t = 1;
    REQUIRE(classify_case(interaction_digraph(inst)).kind == CaseKind::IIE);

    const ConfusionGraph cg = ConfusionGraph::build(inst);
    // The single-sender relaxation already needs 8 colors, so three bits is a
    // floor; the search meets it.
    CHECK(chromatic_number(cg.to_ugraph()).num_colors == 8);
    const OptimalColoring opt = optimal_two_sender_coloring(inst);
    CHECK(opt.rate == Rational{3, 1});
    CHECK(opt.budget1 == 2);
    CHECK(opt.budget2 == 4);
    CHECK_FALSE(validate_coloring(opt.coloring, cg).has_value());
}

TEST_CASE("block-product constructions for the pinned variants") {
    const auto& pinned = pinned_case1_digraphs();
    const Digraph single(1);

    for (int variant : {16, 18, 23}) {
        CAPTURE(variant);
        const TuicpInstance inst =
            build_fully_participated(single, single, single, pinned.at(variant), 1);
        const AchievableColoring ach = achievable_coloring_case1(inst, variant);
        CHECK(ach.rate == Rational{3, 1});
        CHECK(ach.coloring.num_colors1 == 4);
        CHECK(ach.coloring.num_colors2 == 2);
        const ConfusionGraph cg = ConfusionGraph::build(inst);
        CHECK_FALSE(validate_coloring(ach.coloring, cg).has_value());
        // Sender-2 colors are constant across the common label within a block.
        for (std::uint32_t j = 0; j < 2; ++j) {
            CHECK(ach.coloring.table2[ach.coloring.cell2(j, 0)] ==
                  ach.coloring.table2[ach.coloring.cell2(j, 1)]);
        }
        // The exact optimum can only be at or below the construction.
        const OptimalColoring opt = optimal_two_sender_coloring(inst);
        CHECK(!(ach.rate < opt.rate));
    }

    for (int variant : {20, 21, 25}) {
        CAPTURE(variant);
        const TuicpInstance inst =
            build_fully_participated(single, single, single, pinned.at(variant), 1);
        const AchievableColoring ach = achievable_coloring_case1(inst, variant);
        CHECK(ach.rate == Rational{3, 1});
        CHECK(ach.coloring.num_colors1 == 2);
        CHECK(ach.coloring.num_colors2 == 4);
        const ConfusionGraph cg = ConfusionGraph::build(inst);
        CHECK_FALSE(validate_coloring(ach.coloring, cg).has_value());
    }
}

TEST_CASE("block-product construction preconditions") {
    const auto& pinned = pinned_case1_digraphs();
    const Digraph single(1);
    const TuicpInstance h16 =
        build_fully_participated(single, single, single, pinned.at(16), 1);
    CHECK_THROWS_AS(achievable_coloring_case1(h16, 17), precondition_error);
    CHECK_THROWS_AS(achievable_coloring_case1(h16, 18), precondition_error);

    TuicpInstance partial;
    partial.d = Digraph(4);
    partial.d.add_edge(0, 2);
    partial.d.add_edge(3, 2);
    partial.part.p1 = {1, 2};
    partial.part.p2 = {3};
    partial.part.p3 = {4};
    partial.t = 1;
    CHECK_THROWS_AS(achievable_coloring_case1(partial, 16), precondition_error);
}

TEST_CASE("rate-gap report on pinned variants") {
    const auto& pinned = pinned_case1_digraphs();
    const Digraph single(1);
    const TuicpInstance h16 =
        build_fully_participated(single, single, single, pinned.at(16), 1);
    const GapReport gap = conjecture_gap(h16);
    CHECK(gap.variant == 16);
    CHECK(gap.sum_parts == Rational{3, 1});
    CHECK(gap.achievable == Rational{3, 1});
    CHECK(gap.eps_achievable == 0);
    REQUIRE(gap.exact.has_value());
    CHECK(*gap.exact == Rational{3, 1});
    CHECK(gap.eps_exact.has_value());
    CHECK(*gap.eps_exact == 0);

    Digraph two_free(2);
    Digraph two_cycle(2);
    two_cycle.add_edge(0, 1);
    two_cycle.add_edge(1, 0);
    const Digraph* shapes[] = {&single, &two_free, &two_cycle};
    for (int variant : {16, 18, 20, 21, 23, 25}) {
        for (const Digraph* d1 : shapes) {
            for (const Digraph* d3 : shapes) {
                CAPTURE(variant);
                const TuicpInstance inst =
                    build_fully_participated(*d1, single, *d3, pinned.at(variant), 1);
                const GapReport g = conjecture_gap(inst);
                CHECK(g.eps_achievable >= -1);
                CHECK(g.eps_achievable <= 0);
            }
        }
    }

    CHECK_THROWS_AS(conjecture_gap(cyclic3()), precondition_error);
}

TEST_CASE("exact search respects the size cap") {
    Caps caps;
    caps.exact_mt = 2;
    CHECK_THROWS_AS(optimal_two_sender_coloring(cyclic3(), caps), resource_limit_error);
}
