#include <set>

#include "doctest.h"
#include "tsic/confusion.hpp"
#include "tsic/rng.hpp"

using namespace tsic;

namespace {

TuicpInstance cyclic3() {
    // K1={2}, K2={1,3}, K3={1}, singleton parts, t=1.
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

TuicpInstance random_instance(Rng& rng, int max_m, int max_t) {
    const int m = rng.range(1, max_m);
    TuicpInstance inst;
    inst.d = Digraph(m);
    inst.t = rng.range(1, max_t);
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
            if (u != v && rng.coin()) inst.d.add_edge(u, v);
        }
    }
    for (int msg = 1; msg <= m; ++msg) {
        int part = rng.range(1, 3);
        if (part == 1) inst.part.p1.push_back(msg);
        else if (part == 2) inst.part.p2.push_back(msg);
        else inst.part.p3.push_back(msg);
    }
    return inst;
}

}  // namespace

TEST_CASE("confusable predicate with smallest witness") {
    TuicpInstance inst = cyclic3();

    // Figure walk-through: (0,1,0) and (1,1,1) collide at receiver 1.
    CHECK(confusable(bits_from_string("010"), bits_from_string("111"), inst) == 1);
    // x2 flip alone is receiver 2's confusion.
    CHECK(confusable(bits_from_string("000"), bits_from_string("010"), inst) == 2);
    // x2 and x3 flips: receiver 2 is blocked by x3, receiver 3 fires.
    CHECK(confusable(bits_from_string("000"), bits_from_string("011"), inst) == 3);
    // x1 and x2 flips: nobody can tell them apart.
    CHECK_FALSE(confusable(bits_from_string("000"), bits_from_string("110"), inst).has_value());
    CHECK_FALSE(confusable(bits_from_string("101"), bits_from_string("101"), inst).has_value());
    CHECK_THROWS_AS(confusable(bits_from_string("00"), bits_from_string("000"), inst),
                    input_error);
}

TEST_CASE("3-message confusion graph matches the drawn 20-edge figure") {
    ConfusionGraph cg = ConfusionGraph::build(cyclic3());
    CHECK(cg.num_vertices() == 8);
    CHECK(cg.num_edges() == 20);
    CHECK(cg.differences() == std::vector<std::uint32_t>{1, 2, 3, 4, 5});

    using E = std::pair<int, int>;
    auto e = [](const char* a, const char* b) {
        int u = static_cast<int>(bits_to_uint(bits_from_string(a)));
        int v = static_cast<int>(bits_to_uint(bits_from_string(b)));
        return u < v ? E{u, v} : E{v, u};
    };
    std::set<E> drawn{e("010", "011"), e("110", "111"), e("000", "001"), e("100", "101"),
                      e("000", "100"), e("001", "101"), e("010", "110"), e("011", "111"),
                      e("000", "010"), e("100", "110"), e("101", "111"), e("001", "011"),
                      e("010", "111"), e("000", "101"), e("110", "011"), e("100", "001"),
                      e("010", "001"), e("110", "101"), e("000", "011"), e("100", "111")};
    REQUIRE(drawn.size() == 20);
    std::set<E> built;
    for (auto [u, v] : cg.to_ugraph().edges()) built.insert({u, v});
    CHECK(built == drawn);

    // Exhaustive cross-check against the bit-vector predicate.
    for (std::uint32_t x = 0; x < 8; ++x) {
        for (std::uint32_t y = 0; y < 8; ++y) {
            auto w = confusable(bits_from_uint(x, 3), bits_from_uint(y, 3), cyclic3());
            CHECK(cg.adjacent(x, y) == w.has_value());
            if (w) CHECK(cg.witness(x, y) == w);
        }
    }
}

TEST_CASE("confusion graph labels") {
    ConfusionGraph cg = ConfusionGraph::build(cyclic3());
    std::uint32_t v = static_cast<std::uint32_t>(bits_to_uint(bits_from_string("010")));
    CHECK(cg.label(v, 1) == 0);
    CHECK(cg.label(v, 2) == 1);
    CHECK(cg.label(v, 3) == 0);
    CHECK(cg.label_width(1) == 1);

    // Two-message part: label is the concatenation in ascending message order.
    TuicpInstance inst;
    inst.d = Digraph(3);
    inst.part.p1 = {1, 3};
    inst.part.p2 = {2};
    inst.part.p3 = {};
    inst.t = 2;
    ConfusionGraph cg2 = ConfusionGraph::build(inst);
    // bits x1=10, x2=01, x3=11 -> realization 100111.
    std::uint32_t w = static_cast<std::uint32_t>(bits_to_uint(bits_from_string("100111")));
    CHECK(cg2.label(w, 1) == 0b1011);
    CHECK(cg2.label(w, 2) == 0b01);
    CHECK(cg2.label_width(3) == 0);
    CHECK(cg2.label(w, 3) == 0);
}

TEST_CASE("blocks group by part label; an empty part yields one block") {
    ConfusionGraph cg = ConfusionGraph::build(cyclic3());
    auto j = blocks(cg, 2);
    REQUIRE(j.size() == 2);
    CHECK(j[0] == std::vector<std::uint32_t>{0, 1, 4, 5});
    CHECK(j[1] == std::vector<std::uint32_t>{2, 3, 6, 7});

    // Both sender-2 blocks of this instance are complete on 4 vertices.
    for (std::uint32_t g = 0; g < 2; ++g) {
        UGraph b = block_subgraph(cg, 2, g);
        CHECK(b.size() == 4);
        CHECK(b.edge_count() == 6);
    }
    CHECK_FALSE(verify_block_isomorphism(cg, 1).has_value());
    CHECK_FALSE(verify_block_isomorphism(cg, 2).has_value());
    CHECK_FALSE(verify_block_isomorphism(cg, 3).has_value());

    TuicpInstance no_p2;
    no_p2.d = Digraph(2);
    no_p2.d.add_edge(0, 1);
    no_p2.part.p1 = {1, 2};
    no_p2.part.p2 = {};
    no_p2.part.p3 = {};
    no_p2.t = 1;
    ConfusionGraph cg2 = ConfusionGraph::build(no_p2);
    auto groups = blocks(cg2, 2);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].size() == cg2.num_vertices());
}

TEST_CASE("axis blocks are pairwise isomorphic on random instances") {
    Rng rng(107);
    for (int trial = 0; trial < 25; ++trial) {
        TuicpInstance inst = random_instance(rng, 4, 2);
        ConfusionGraph cg = ConfusionGraph::build(inst);
        for (int part = 1; part <= 3; ++part) {
            CHECK_FALSE(verify_block_isomorphism(cg, part).has_value());
        }
    }
}

TEST_CASE("sender-2 blocks match the pinned products") {
    Digraph single(1);
    Digraph pair_free(2);  // two messages, no internal edges
    Digraph pair_cycle(2);
    pair_cycle.add_edge(0, 1);
    pair_cycle.add_edge(1, 0);

    const auto& pinned = pinned_case1_digraphs();
    for (int variant : {16, 18, 23}) {
        CAPTURE(variant);
        TuicpInstance small =
            build_fully_participated(single, single, single, pinned.at(variant), 1);
        CHECK_FALSE(verify_jblock_product_iso(small, variant).has_value());

        TuicpInstance wide =
            build_fully_participated(pair_free, single, pair_cycle, pinned.at(variant), 1);
        CHECK_FALSE(verify_jblock_product_iso(wide, variant).has_value());

        TuicpInstance t2 =
            build_fully_participated(pair_cycle, single, single, pinned.at(variant), 2);
        CHECK_FALSE(verify_jblock_product_iso(t2, variant).has_value());
    }

    // Wrong variant id, mismatched interaction digraph, partial participation.
    TuicpInstance h16 = build_fully_participated(single, single, single, pinned.at(16), 1);
    CHECK_THROWS_AS(verify_jblock_product_iso(h16, 17), precondition_error);
    CHECK_THROWS_AS(verify_jblock_product_iso(h16, 18), precondition_error);

    TuicpInstance partial;
    partial.d = Digraph(4);
    partial.d.add_edge(0, 2);  // only one of the two P1->P2 cross edges
    partial.d.add_edge(3, 2);
    partial.part.p1 = {1, 2};
    partial.part.p2 = {3};
    partial.part.p3 = {4};
    partial.t = 1;
    REQUIRE(interaction_digraph(partial) == pinned.at(16));
    CHECK_THROWS_AS(verify_jblock_product_iso(partial, 16), precondition_error);
}

TEST_CASE("confusion caps are enforced") {
    TuicpInstance inst = cyclic3();
    Caps caps;
    caps.predicate_mt = 2;
    CHECK_THROWS_AS(ConfusionGraph::build(inst, caps), resource_limit_error);
    Caps caps2;
    caps2.materialize_mt = 2;
    ConfusionGraph cg = ConfusionGraph::build(inst);
    CHECK_THROWS_AS(cg.to_ugraph(caps2), resource_limit_error);
}

TEST_CASE("confusion dot labels carry the part tuples") {
    ConfusionGraph cg = ConfusionGraph::build(cyclic3());
    std::string dot = to_dot(cg);
    CHECK(dot.find("0 [label=\"(0,0,0)\"]") != std::string::npos);
    CHECK(dot.find("5 [label=\"(1,0,1)\"]") != std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);
}

TEST_CASE("degenerate empty sub-digraph confusion graph") {
    ConfusionGraph cg = ConfusionGraph::build_single(Digraph(0), 1);
    CHECK(cg.num_vertices() == 1);
    CHECK(cg.num_edges() == 0);
    UGraph g = cg.to_ugraph();
    CHECK(g.size() == 1);
}
