#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsic/coloring.hpp"
#include "tsic/model.hpp"
#include "tsic/rational.hpp"

namespace tsic {

// Optimal single-sender rate for t-bit messages over side-information
// digraph d: ceil(log2 chi(confusion graph)) / t.
Rational beta_t_single(const Digraph& d, int t, const Caps& caps = {});

struct BoundItem {
    Rational value;
    std::string justification;
};

struct LowerBounds {
    std::vector<BoundItem> items;  // never empty
    const BoundItem& best() const;
};

// Rate floors: the whole-graph single-sender relaxation, plus sub-problems
// obtained by deleting an exclusive part or keeping a single part (both
// transmissions concatenated must still decode what remains). Items that
// would exceed the size caps are skipped.
LowerBounds lower_bounds(const TuicpInstance& inst, const Caps& caps = {});

// Closed-form rate of the block-product construction for the six pinned
// acyclic interaction digraphs. Requires full participation.
struct ConstructionFormula {
    int variant = 0;
    Rational rate{0, 1};
    std::string expression;
};
ConstructionFormula construction_formula(const TuicpInstance& inst, const Caps& caps = {});

// Case-keyed combination of the three per-part rates. Interaction digraphs
// whose case is not settled carry one candidate per contender.
struct CaseRateRow {
    CaseKind kind = CaseKind::I;
    std::string expression;
    Rational rate{0, 1};
};
struct CaseRateRows {
    CaseLabel label;
    Rational b1{0, 1}, b2{0, 1}, b3{0, 1};  // per-part single-sender rates
    std::vector<CaseRateRow> candidates;
};
CaseRateRows case_rate_rows(const TuicpInstance& inst, const Caps& caps = {});

// Everything known about one instance's optimal rate, squeezed from both
// sides. Throws std::logic_error if the sides ever cross.
struct RateReport {
    int t = 1;
    CaseLabel label;
    std::optional<int> variant;  // pinned acyclic interaction digraph, if any

    LowerBounds lower;
    Rational achievable{0, 1};
    std::string achievable_provenance;
    std::optional<Rational> exact;  // present when m*t is within the exact cap

    std::optional<ConstructionFormula> construction;
    std::optional<CaseRateRows> case_rows;
    std::optional<bool> construction_confirmed;  // exact == closed form, at this t
    std::optional<bool> case_rows_confirmed;  // exact matches some candidate

    // Bit gap to the sum of per-part rates, for pinned fully-participated
    // instances: t * (rate - (b1 + b2 + b3)).
    std::optional<int> eps_achievable;
    std::optional<int> eps_exact;
};
RateReport sandwich_check(const TuicpInstance& inst, const Caps& caps = {});

}  // namespace tsic
