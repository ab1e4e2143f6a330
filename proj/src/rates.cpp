#include "tsic/rates.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "tsic/codes.hpp"
#include "tsic/confusion.hpp"
#include "tsic/graph_algos.hpp"

namespace tsic {

namespace {

// Bits needed by the optimal single-sender code, or nullopt when the
// confusion graph would blow past the size caps.
std::optional<int> single_bits(const Digraph& d, int t, const Caps& caps) {
    const int mt = d.size() * t;
    if (mt > caps.predicate_mt || mt > caps.materialize_mt) return std::nullopt;
    if ((1ll << mt) > caps.chromatic_vertices) return std::nullopt;
    return single_sender_code(d, t, caps).p;
}

std::vector<int> part_vertices(const TuicpInstance& inst, std::array<int, 2> parts) {
    std::vector<int> vs;
    for (int p : parts) {
        for (int msg : inst.part.part(p)) vs.push_back(msg - 1);
    }
    std::sort(vs.begin(), vs.end());
    return vs;
}

std::string expression_for(CaseKind kind) {
    switch (kind) {
        case CaseKind::I:
        case CaseKind::IIA: return "b1 + b2 + b3";
        case CaseKind::IIB: return "max(b3, b1 + b2)";
        case CaseKind::IIC: return "b2 + max(b1, b3)";
        case CaseKind::IID: return "b1 + max(b2, b3)";
        case CaseKind::IIE: return "max(b1 + b2, b1 + b3, b2 + b3)";
        case CaseKind::IIBEUnresolved: break;
    }
    throw std::logic_error("no rate expression for label " + case_kind_str(kind));
}

int evaluate_bits(CaseKind kind, int p1, int p2, int p3) {
    switch (kind) {
        case CaseKind::I:
        case CaseKind::IIA: return p1 + p2 + p3;
        case CaseKind::IIB: return std::max(p3, p1 + p2);
        case CaseKind::IIC: return p2 + std::max(p1, p3);
        case CaseKind::IID: return p1 + std::max(p2, p3);
        case CaseKind::IIE: return std::max({p1 + p2, p1 + p3, p2 + p3});
        case CaseKind::IIBEUnresolved: break;
    }
    throw std::logic_error("no rate expression for label " + case_kind_str(kind));
}

}  // namespace

Rational beta_t_single(const Digraph& d, int t, const Caps& caps) {
    return {single_sender_code(d, t, caps).p, t};
}

const BoundItem& LowerBounds::best() const {
    if (items.empty()) throw std::logic_error("empty rate-floor list");
    const BoundItem* b = &items.front();
    for (const auto& item : items) {
        if (b->value < item.value) b = &item;
    }
    return *b;
}

LowerBounds lower_bounds(const TuicpInstance& inst, const Caps& caps) {
    validate_instance(inst);
    LowerBounds lb;
    lb.items.push_back({Rational{0, 1}, "rates are nonnegative"});

    for (int p = 1; p <= 3; ++p) {
        if (auto bits = single_bits(part_subdigraph(inst, p), inst.t, caps)) {
            lb.items.push_back({Rational{*bits, inst.t},
                                "both transmissions together must decode part " +
                                    std::to_string(p) + " alone"});
        }
    }
    const std::pair<int, std::array<int, 2>> deletions[] = {{1, {2, 3}}, {2, {1, 3}}};
    for (const auto& [gone, kept] : deletions) {
        const std::vector<int> vs = part_vertices(inst, kept);
        if (auto bits = single_bits(induced_subdigraph(inst.d, vs), inst.t, caps)) {
            lb.items.push_back({Rational{*bits, inst.t},
                                "deleting exclusive part " + std::to_string(gone) +
                                    " leaves a sub-problem both transmissions must decode"});
        }
    }
    if (auto bits = single_bits(inst.d, inst.t, caps)) {
        lb.items.push_back(
            {Rational{*bits, inst.t}, "a single sender seeing every message needs this much"});
    }
    return lb;
}

ConstructionFormula construction_formula(const TuicpInstance& inst, const Caps& caps) {
    validate_instance(inst);
    const InteractionMask h = interaction_digraph(inst);
    const std::optional<int> variant = pinned_variant(h);
    if (!variant) {
        throw precondition_error("no closed-form construction rate for interaction " + h.str());
    }
    if (!is_fully_participated(inst)) {
        throw precondition_error("closed-form construction rate requires full participation");
    }
    if (*variant == 20 || *variant == 21 || *variant == 25) {
        ConstructionFormula swapped = construction_formula(swap_labels_12(inst), caps);
        swapped.variant = *variant;
        swapped.expression += ", with parts 1 and 2 exchanged";
        return swapped;
    }

    const UGraph g1 = ConfusionGraph::build_single(part_subdigraph(inst, 1), inst.t, caps)
                          .to_ugraph(caps);
    const UGraph g2 = ConfusionGraph::build_single(part_subdigraph(inst, 2), inst.t, caps)
                          .to_ugraph(caps);
    const UGraph g3 = ConfusionGraph::build_single(part_subdigraph(inst, 3), inst.t, caps)
                          .to_ugraph(caps);
    require_cap(static_cast<long long>(g1.size()) * g3.size(), caps.chromatic_vertices,
                "product chromatic number");
    UGraph product(0);
    std::string name;
    switch (*variant) {
        case 16:
            product = disj_product(g1, g3);
            name = "chi(disjunctive(G1, G3))";
            break;
        case 18:
            product = lex_product(g1, g3);
            name = "chi(lexicographic(G1, G3))";
            break;
        case 23:
            product = lex_product(g3, g1);
            name = "chi(lexicographic(G3, G1))";
            break;
        default:
            throw std::logic_error("unhandled pinned variant");
    }
    const int bits = ceil_log2(chromatic_number(product, caps.chromatic_vertices).num_colors) +
                     ceil_log2(chromatic_number(g2, caps.chromatic_vertices).num_colors);
    ConstructionFormula result;
    result.variant = *variant;
    result.rate = {bits, inst.t};
    result.expression =
        "(ceil-log2 " + name + " + ceil-log2 chi(G2)) / t over per-part confusion graphs";
    return result;
}

CaseRateRows case_rate_rows(const TuicpInstance& inst, const Caps& caps) {
    validate_instance(inst);
    CaseRateRows result;
    result.label = classify_case(interaction_digraph(inst));
    int p[4] = {0, 0, 0, 0};
    for (int part = 1; part <= 3; ++part) {
        const auto bits = single_bits(part_subdigraph(inst, part), inst.t, caps);
        if (!bits) {
            throw resource_limit_error("part " + std::to_string(part) +
                                       " confusion graph exceeds the size caps");
        }
        p[part] = *bits;
    }
    result.b1 = {p[1], inst.t};
    result.b2 = {p[2], inst.t};
    result.b3 = {p[3], inst.t};
    for (CaseKind kind : result.label.table2_candidates()) {
        result.candidates.push_back(
            {kind, expression_for(kind), Rational{evaluate_bits(kind, p[1], p[2], p[3]), inst.t}});
    }
    return result;
}

RateReport sandwich_check(const TuicpInstance& inst, const Caps& caps) {
    const ValidationInfo info = validate_instance(inst);
    (void)info;
    const InteractionMask h = interaction_digraph(inst);
    const bool full = is_fully_participated(inst);

    RateReport report;
    report.t = inst.t;
    report.label = classify_case(h);
    report.variant = pinned_variant(h);
    report.lower = lower_bounds(inst, caps);
    report.case_rows = case_rate_rows(inst, caps);

    const int p1 = static_cast<int>(report.case_rows->b1.num);
    const int p2 = static_cast<int>(report.case_rows->b2.num);
    const int p3 = static_cast<int>(report.case_rows->b3.num);
    report.achievable = {p1 + p2 + p3, inst.t};
    report.achievable_provenance = "each part sent separately with its own optimal code";

    if (report.variant && full) {
        try {
            report.construction = construction_formula(inst, caps);
            const AchievableColoring ach = achievable_coloring_case1(inst, *report.variant, caps);
            if (ach.rate < report.achievable) {
                report.achievable = ach.rate;
                report.achievable_provenance = ach.provenance;
            }
        } catch (const resource_limit_error&) {
            // too large for the construction's chromatic computations; keep the fallback
        }
    }
    if (report.label.kind == CaseKind::IIE && full && inst.m() * inst.t <= caps.predicate_mt) {
        try {
            const TwoSenderCode code = construct_case2e_code(inst, true, caps);
            if (code.rate() < report.achievable) {
                report.achievable = code.rate();
                report.achievable_provenance = code.provenance;
            }
        } catch (const resource_limit_error&) {
        }
    }

    if (inst.m() * inst.t <= caps.exact_mt) {
        report.exact = optimal_two_sender_coloring(inst, caps).rate;
    }
    if (report.exact) {
        if (report.construction) report.construction_confirmed = (*report.exact == report.construction->rate);
        bool any = false;
        for (const auto& cand : report.case_rows->candidates) any = any || cand.rate == *report.exact;
        report.case_rows_confirmed = any;
    }
    if (report.variant && full) {
        const int sum_bits = p1 + p2 + p3;
        report.eps_achievable = static_cast<int>(report.achievable.num) - sum_bits;
        if (report.exact) report.eps_exact = static_cast<int>(report.exact->num) - sum_bits;
    }

    const Rational& floor = report.lower.best().value;
    if (report.achievable < floor) {
        throw std::logic_error("rate floor " + floor.str() + " exceeds achievable rate " +
                               report.achievable.str());
    }
    if (report.exact && (*report.exact < floor || report.achievable < *report.exact)) {
        throw std::logic_error("exact rate " + report.exact->str() +
                               " escapes the floor/achievable sandwich");
    }
    return report;
}

}  // namespace tsic
