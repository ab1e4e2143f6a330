#include "tsic/coloring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "tsic/graph_algos.hpp"

namespace tsic {

std::uint32_t TwoSenderColoring::vertex_cell1(const ConfusionGraph& cg, std::uint32_t v) const {
    return cell1(cg.label(v, 1), cg.label(v, 3));
}

std::uint32_t TwoSenderColoring::vertex_cell2(const ConfusionGraph& cg, std::uint32_t v) const {
    return cell2(cg.label(v, 2), cg.label(v, 3));
}

int TwoSenderColoring::total_bits() const {
    return ceil_log2(num_colors1) + ceil_log2(num_colors2);
}

std::string edge_pattern(const ConfusionGraph& cg, std::uint32_t u, std::uint32_t v) {
    const std::uint32_t d = u ^ v;
    const bool di = cg.label(d, 1) != 0;
    const bool dj = cg.label(d, 2) != 0;
    const bool dk = cg.label(d, 3) != 0;
    if (dk) return "common part differs: ordered color pair must differ";
    if (di && dj) return "both exclusive parts differ: ordered color pair must differ";
    if (di) return "only exclusive part 1 differs: sender-1 colors must differ";
    return "only exclusive part 2 differs: sender-2 colors must differ";
}

namespace {

void check_table(const std::vector<int>& table, std::size_t cells, int num_colors,
                 const char* name) {
    if (table.size() != cells) {
        throw input_error(std::string(name) + " has " + std::to_string(table.size()) +
                          " cells, expected " + std::to_string(cells));
    }
    if (num_colors <= 0) throw input_error(std::string(name) + " has no colors");
    std::vector<char> used(static_cast<std::size_t>(num_colors), 0);
    for (int c : table) {
        if (c < 0 || c >= num_colors) {
            throw input_error(std::string(name) + " color out of range: " + std::to_string(c));
        }
        used[static_cast<std::size_t>(c)] = 1;
    }
    for (int c = 0; c < num_colors; ++c) {
        if (!used[static_cast<std::size_t>(c)]) {
            throw input_error(std::string(name) + " color unused: " + std::to_string(c));
        }
    }
}

}  // namespace

std::optional<ColoringViolation> validate_coloring(const TwoSenderColoring& c,
                                                   const ConfusionGraph& cg) {
    const MessagePartition& part = cg.partition();
    if (c.t != cg.t() || c.m1 != static_cast<int>(part.p1.size()) ||
        c.m2 != static_cast<int>(part.p2.size()) || c.m3 != static_cast<int>(part.p3.size())) {
        throw input_error("coloring domain does not match the confusion graph");
    }
    check_table(c.table1, c.num_cells1(), c.num_colors1, "table 1");
    check_table(c.table2, c.num_cells2(), c.num_colors2, "table 2");

    const std::uint32_t n = cg.num_vertices();
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t d : cg.differences()) {
            const std::uint32_t v = u ^ d;
            if (v < u) continue;
            if (c.table1[c.vertex_cell1(cg, u)] == c.table1[c.vertex_cell1(cg, v)] &&
                c.table2[c.vertex_cell2(cg, u)] == c.table2[c.vertex_cell2(cg, v)]) {
                return ColoringViolation{u, v, edge_pattern(cg, u, v)};
            }
        }
    }
    return std::nullopt;
}

namespace {

// Constraints on the two cell tables induced by the confusable differences.
// A difference d splits into per-part label deltas (di, dj, dk); it shifts a
// table-1 cell by e1 = (di << w3) | dk and a table-2 cell by e2 = (dj << w3) | dk.
//   dj == 0 and dk == 0: the table-2 cells coincide, so table 1 must differ.
//   di == 0 and dk == 0: table 2 must differ.
//   otherwise: for each common label k, if any i leaves table 1 equal across
//   the shift, then every j must get distinct table-2 colors across it.
struct ConstraintSet {
    int w1 = 0, w2 = 0, w3 = 0;
    std::uint32_t n1 = 1, n2 = 1;
    std::vector<std::uint32_t> pure1;  // table-1 cell deltas that always force inequality
    std::vector<std::uint32_t> pure2;
    struct Group {
        std::uint32_t di = 0, dk = 0;
        std::vector<std::uint32_t> e2s;  // table-2 deltas sharing this (di, dk)
    };
    std::vector<Group> groups;
};

ConstraintSet build_constraints(const ConfusionGraph& cg) {
    ConstraintSet cs;
    cs.w1 = cg.label_width(1);
    cs.w2 = cg.label_width(2);
    cs.w3 = cg.label_width(3);
    cs.n1 = 1u << (cs.w1 + cs.w3);
    cs.n2 = 1u << (cs.w2 + cs.w3);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> grouped;
    for (std::uint32_t d : cg.differences()) {
        const std::uint32_t di = cg.label(d, 1);
        const std::uint32_t dj = cg.label(d, 2);
        const std::uint32_t dk = cg.label(d, 3);
        if (dj == 0 && dk == 0) {
            cs.pure1.push_back(di << cs.w3);
        } else if (di == 0 && dk == 0) {
            cs.pure2.push_back(dj << cs.w3);
        } else {
            grouped[{di, dk}].push_back((dj << cs.w3) | dk);
        }
    }
    for (auto& [key, e2s] : grouped) {
        std::sort(e2s.begin(), e2s.end());
        cs.groups.push_back({key.first, key.second, std::move(e2s)});
    }
    return cs;
}

UGraph delta_graph(std::uint32_t n, const std::vector<std::uint32_t>& deltas) {
    UGraph g(static_cast<int>(n));
    for (std::uint32_t c = 0; c < n; ++c) {
        for (std::uint32_t e : deltas) {
            const std::uint32_t o = c ^ e;
            if (o > c) g.add_edge(static_cast<int>(c), static_cast<int>(o));
        }
    }
    return g;
}

// Lexicographically least proper coloring of g using at most `budget` colors,
// restricted to first-occurrence color order (every valid coloring has exactly
// one such relabeling, so the restriction loses no solutions).
bool lex_color(const UGraph& g, int budget, std::vector<int>& out) {
    const int n = g.size();
    out.assign(static_cast<std::size_t>(n), -1);
    if (n == 0) return true;
    std::vector<int> max_before(static_cast<std::size_t>(n) + 1, -1);
    auto conflicts = [&](int c, int x) {
        if (c == 0) return false;
        const std::uint64_t* row = g.row_ptr(c);
        const int last = (c - 1) >> 6;
        for (int w = 0; w <= last; ++w) {
            std::uint64_t word = row[w];
            if (w == c >> 6) word &= (1ull << (c & 63)) - 1;
            while (word) {
                const int o = (w << 6) + __builtin_ctzll(word);
                if (out[o] == x) return true;
                word &= word - 1;
            }
        }
        return false;
    };
    int c = 0;
    while (true) {
        const int limit = std::min(max_before[c] + 1, budget - 1);
        int x = out[c] + 1;
        while (x <= limit && conflicts(c, x)) ++x;
        if (x > limit) {
            out[c] = -1;
            if (--c < 0) return false;
            continue;
        }
        out[c] = x;
        max_before[c + 1] = std::max(max_before[c], x);
        if (++c == n) return true;
    }
}

// Sender-2 feasibility for a fully assigned table 1: pure table-2 constraints
// plus the inequalities fired by table-1 equalities across each group shift.
bool table2_feasible(const ConstraintSet& cs, const UGraph& base2, const std::vector<int>& j1,
                     int budget2, std::vector<int>& out) {
    UGraph g2 = base2;
    const std::uint32_t kcount = 1u << cs.w3;
    const std::uint32_t icount = 1u << cs.w1;
    const std::uint32_t jcount = 1u << cs.w2;
    for (const auto& grp : cs.groups) {
        for (std::uint32_t k = 0; k < kcount; ++k) {
            bool eq1 = false;
            for (std::uint32_t i = 0; i < icount && !eq1; ++i) {
                eq1 = j1[(i << cs.w3) | k] == j1[((i ^ grp.di) << cs.w3) | (k ^ grp.dk)];
            }
            if (!eq1) continue;
            for (std::uint32_t e2 : grp.e2s) {
                for (std::uint32_t j = 0; j < jcount; ++j) {
                    const std::uint32_t cell = (j << cs.w3) | k;
                    g2.add_edge(static_cast<int>(cell), static_cast<int>(cell ^ e2));
                }
            }
        }
    }
    return lex_color(g2, budget2, out);
}

// Enumerates first-occurrence-ordered proper table-1 assignments in
// lexicographic order; accepts the first whose induced table-2 problem is
// colorable within budget2.
bool try_budget(const ConstraintSet& cs, const UGraph& base2, int budget1, int budget2,
                std::vector<int>& j1, std::vector<int>& j2) {
    const int n1 = static_cast<int>(cs.n1);
    j1.assign(static_cast<std::size_t>(n1), -1);
    std::vector<int> max_before(static_cast<std::size_t>(n1) + 1, -1);
    auto conflicts = [&](int c, int x) {
        for (std::uint32_t e : cs.pure1) {
            const int o = static_cast<int>(static_cast<std::uint32_t>(c) ^ e);
            if (o < c && j1[o] == x) return true;
        }
        return false;
    };
    int c = 0;
    while (true) {
        const int limit = std::min(max_before[c] + 1, budget1 - 1);
        int x = j1[c] + 1;
        while (x <= limit && conflicts(c, x)) ++x;
        if (x > limit) {
            j1[c] = -1;
            if (--c < 0) return false;
            continue;
        }
        j1[c] = x;
        max_before[c + 1] = std::max(max_before[c], x);
        if (c + 1 == n1) {
            if (table2_feasible(cs, base2, j1, budget2, j2)) return true;
            continue;  // retry further colors for the last cell
        }
        ++c;
    }
}

int distinct_colors(const std::vector<int>& table) {
    int mx = -1;
    for (int c : table) mx = std::max(mx, c);
    return mx + 1;
}

}  // namespace

OptimalColoring optimal_two_sender_coloring(const TuicpInstance& inst, const Caps& caps) {
    const ValidationInfo info = validate_instance(inst);
    require_cap(inst.m() * inst.t, caps.exact_mt, "exact two-sender search");
    const ConfusionGraph cg = ConfusionGraph::build(inst, caps);
    const ConstraintSet cs = build_constraints(cg);
    const UGraph base1 = delta_graph(cs.n1, cs.pure1);
    const UGraph base2 = delta_graph(cs.n2, cs.pure2);

    // Necessary palette sizes: table 1 properly colors its pure-constraint
    // graph, table 2 likewise, and the color-pair count covers any clique of
    // the confusion graph.
    const int lb1 = std::max(1, clique_number_lb(base1));
    const int lb2 = std::max(1, clique_number_lb(base2));
    const std::uint64_t lb_pairs =
        cg.mt() <= caps.materialize_mt
            ? static_cast<std::uint64_t>(std::max(1, clique_number_lb(cg.to_ugraph(caps))))
            : 1;

    const int n1 = static_cast<int>(cs.n1);
    const int n2 = static_cast<int>(cs.n2);
    const int obj_min = ceil_log2(lb1) + ceil_log2(lb2);
    const int obj_max = ceil_log2(n1) + ceil_log2(n2);
    std::vector<int> j1, j2;
    for (int obj = obj_min; obj <= obj_max; ++obj) {
        for (int s = std::max(2, lb1 + lb2); s <= n1 + n2; ++s) {
            for (int a1 = std::max({1, lb1, s - n2}); a1 <= std::min(n1, s - lb2); ++a1) {
                const int a2 = s - a1;
                if (ceil_log2(a1) + ceil_log2(a2) != obj) continue;
                if (static_cast<std::uint64_t>(a1) * static_cast<std::uint64_t>(a2) < lb_pairs)
                    continue;
                if (!try_budget(cs, base2, a1, a2, j1, j2)) continue;
                OptimalColoring result;
                result.coloring.t = inst.t;
                result.coloring.m1 = info.m1;
                result.coloring.m2 = info.m2;
                result.coloring.m3 = info.m3;
                result.coloring.table1 = j1;
                result.coloring.table2 = j2;
                result.coloring.num_colors1 = distinct_colors(j1);
                result.coloring.num_colors2 = distinct_colors(j2);
                // At the first feasible budget every witness is onto both
                // palettes; a mismatch means the budget order was violated.
                if (result.coloring.num_colors1 != a1 || result.coloring.num_colors2 != a2) {
                    throw std::logic_error("two-sender search returned a non-onto witness");
                }
                result.budget1 = a1;
                result.budget2 = a2;
                result.rate = Rational{ceil_log2(a1) + ceil_log2(a2), inst.t};
                return result;
            }
        }
    }
    throw std::logic_error("two-sender search exhausted all budgets");
}

namespace {

TwoSenderColoring swap_tables(const TwoSenderColoring& c) {
    TwoSenderColoring s;
    s.t = c.t;
    s.m1 = c.m2;
    s.m2 = c.m1;
    s.m3 = c.m3;
    s.table1 = c.table2;
    s.table2 = c.table1;
    s.num_colors1 = c.num_colors2;
    s.num_colors2 = c.num_colors1;
    return s;
}

}  // namespace

AchievableColoring achievable_coloring_case1(const TuicpInstance& inst, int variant,
                                             const Caps& caps) {
    const ValidationInfo info = validate_instance(inst);
    const auto& pinned = pinned_case1_digraphs();
    const auto it = pinned.find(variant);
    if (it == pinned.end()) {
        throw precondition_error("no dedicated construction for variant " +
                                 std::to_string(variant));
    }
    if (interaction_digraph(inst) != it->second) {
        throw precondition_error("interaction digraph is not the pinned digraph of variant " +
                                 std::to_string(variant));
    }
    if (!is_fully_participated(inst)) {
        throw precondition_error("construction requires a fully-participated instance");
    }

    if (variant == 20 || variant == 21 || variant == 25) {
        const int base = variant == 20 ? 16 : variant == 21 ? 18 : 23;
        AchievableColoring inner = achievable_coloring_case1(swap_labels_12(inst), base, caps);
        AchievableColoring result;
        result.coloring = swap_tables(inner.coloring);
        result.rate = inner.rate;
        result.provenance = inner.provenance + "; exclusive part labels exchanged (variant " +
                            std::to_string(variant) + ")";
        const ConfusionGraph cg = ConfusionGraph::build(inst, caps);
        if (validate_coloring(result.coloring, cg)) {
            throw std::logic_error("swapped construction failed validation");
        }
        return result;
    }

    const Digraph d1 = part_subdigraph(inst, 1);
    const Digraph d2 = part_subdigraph(inst, 2);
    const Digraph d3 = part_subdigraph(inst, 3);
    const UGraph g1 = ConfusionGraph::build_single(d1, inst.t, caps).to_ugraph(caps);
    const UGraph g2 = ConfusionGraph::build_single(d2, inst.t, caps).to_ugraph(caps);
    const UGraph g3 = ConfusionGraph::build_single(d3, inst.t, caps).to_ugraph(caps);

    require_cap(static_cast<long long>(g1.size()) * g3.size(), caps.chromatic_vertices,
                "product chromatic number");
    UGraph product;
    std::string name;
    if (variant == 16) {
        product = disj_product(g1, g3);
        name = "disjunctive product of part-1 and part-3 confusion graphs";
    } else if (variant == 18) {
        product = lex_product(g1, g3);
        name = "lexicographic product of part-1 over part-3 confusion graphs";
    } else {
        product = lex_product(g3, g1);
        name = "lexicographic product of part-3 over part-1 confusion graphs";
    }
    const ColoringResult cp = chromatic_number(product, caps.chromatic_vertices);
    const ColoringResult c2 = chromatic_number(g2, caps.chromatic_vertices);

    AchievableColoring result;
    TwoSenderColoring& c = result.coloring;
    c.t = inst.t;
    c.m1 = info.m1;
    c.m2 = info.m2;
    c.m3 = info.m3;
    c.table1.assign(c.num_cells1(), 0);
    c.table2.assign(c.num_cells2(), 0);
    const int w1 = c.w1();
    const int w3 = c.w3();
    for (std::uint32_t i = 0; i < (1u << w1); ++i) {
        for (std::uint32_t k = 0; k < (1u << w3); ++k) {
            const std::uint32_t pv = variant == 23 ? (k << w1) | i : (i << w3) | k;
            c.table1[c.cell1(i, k)] = cp.colors[pv];
        }
    }
    for (std::uint32_t j = 0; j < (1u << c.w2()); ++j) {
        for (std::uint32_t k = 0; k < (1u << w3); ++k) {
            c.table2[c.cell2(j, k)] = c2.colors[j];
        }
    }
    c.num_colors1 = cp.num_colors;
    c.num_colors2 = c2.num_colors;
    result.rate = c.rate();
    result.provenance = name + ", applied identically to every sender-2 block (variant " +
                        std::to_string(variant) + ")";

    const ConfusionGraph cg = ConfusionGraph::build(inst, caps);
    if (validate_coloring(c, cg)) {
        throw std::logic_error("block-product construction failed validation");
    }
    return result;
}

GapReport conjecture_gap(const TuicpInstance& inst, const Caps& caps) {
    validate_instance(inst);
    const auto variant = pinned_variant(interaction_digraph(inst));
    if (!variant) {
        throw precondition_error("gap report requires a pinned acyclic interaction digraph");
    }
    if (!is_fully_participated(inst)) {
        throw precondition_error("gap report requires a fully-participated instance");
    }

    GapReport report;
    report.variant = *variant;
    int sum_bits = 0;
    for (int part = 1; part <= 3; ++part) {
        const UGraph g =
            ConfusionGraph::build_single(part_subdigraph(inst, part), inst.t, caps).to_ugraph(caps);
        sum_bits += ceil_log2(chromatic_number(g, caps.chromatic_vertices).num_colors);
    }
    report.sum_parts = Rational{sum_bits, inst.t};

    const AchievableColoring ach = achievable_coloring_case1(inst, *variant, caps);
    report.achievable = ach.rate;
    report.eps_achievable = ach.rate.num - sum_bits;

    if (inst.m() * inst.t <= caps.exact_mt) {
        const OptimalColoring opt = optimal_two_sender_coloring(inst, caps);
        report.exact = opt.rate;
        report.eps_exact = opt.rate.num - sum_bits;
    }
    return report;
}

}  // namespace tsic
