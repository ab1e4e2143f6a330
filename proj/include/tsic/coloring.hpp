#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsic/confusion.hpp"
#include "tsic/rational.hpp"

namespace tsic {

// Two per-sender color tables over the confusion graph. Sender 1 colors cells
// indexed by the (part-1 label, part-3 label) pair, sender 2 by (part-2 label,
// part-3 label); a cell id packs the pair as label * 2^(t*m3) + part3_label.
// A vertex's ordered color pair is (table1[cell1], table2[cell2]).
struct TwoSenderColoring {
    int t = 1;
    int m1 = 0;
    int m2 = 0;
    int m3 = 0;
    std::vector<int> table1;  // 2^(t*(m1+m3)) entries
    std::vector<int> table2;  // 2^(t*(m2+m3)) entries
    int num_colors1 = 0;
    int num_colors2 = 0;

    int w1() const { return t * m1; }
    int w2() const { return t * m2; }
    int w3() const { return t * m3; }
    std::size_t num_cells1() const { return std::size_t{1} << (w1() + w3()); }
    std::size_t num_cells2() const { return std::size_t{1} << (w2() + w3()); }
    std::uint32_t cell1(std::uint32_t i, std::uint32_t k) const {
        return (i << w3()) | k;
    }
    std::uint32_t cell2(std::uint32_t j, std::uint32_t k) const {
        return (j << w3()) | k;
    }
    std::uint32_t vertex_cell1(const ConfusionGraph& cg, std::uint32_t v) const;
    std::uint32_t vertex_cell2(const ConfusionGraph& cg, std::uint32_t v) const;

    // log2-ceiling of the two palette sizes; the coding cost of the tables.
    int total_bits() const;
    Rational rate() const { return Rational{total_bits(), t}; }
};

struct ColoringViolation {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    // Which label segments differ across the offending edge, and therefore
    // which color-distinctness rule was broken.
    std::string pattern;
};

// Identifies the distinctness rule an edge imposes, from its label deltas:
//   only part 1 differs      -> sender-1 colors must differ
//   only part 2 differs      -> sender-2 colors must differ
//   parts 1 and 2 differ     -> the ordered pair must differ
//   part 3 differs           -> the ordered pair must differ
std::string edge_pattern(const ConfusionGraph& cg, std::uint32_t u, std::uint32_t v);

// nullopt when every confusion edge receives distinct ordered color pairs;
// otherwise the first violating edge (smallest u, then smallest v).
// Malformed tables (wrong domain sizes, out-of-range colors, unused colors)
// throw input_error.
std::optional<ColoringViolation> validate_coloring(const TwoSenderColoring& c,
                                                   const ConfusionGraph& cg);

struct OptimalColoring {
    TwoSenderColoring coloring;
    int budget1 = 0;  // final palette size of table 1
    int budget2 = 0;
    Rational rate;    // (ceil_log2 budget1 + ceil_log2 budget2) / t
};

// Exact minimum of (ceil_log2 |J1| + ceil_log2 |J2|)/t over all valid two-sender
// colorings. Budgets are tried in nondecreasing objective order, ties broken by
// smaller budget sum then smaller sender-1 budget; the witness is the
// lexicographically least assignment over cells of table 1 then table 2.
// Requires m*t within the exact-search cap.
OptimalColoring optimal_two_sender_coloring(const TuicpInstance& inst, const Caps& caps = {});

struct AchievableColoring {
    TwoSenderColoring coloring;
    Rational rate;
    std::string provenance;  // which construction produced it
};

// The dedicated constructions for the six pinned acyclic interaction variants:
// sender 1 colors every sender-2 block identically with an optimal coloring of
// the variant's product graph (disjunctive for 16, lexicographic part1-over-part3
// for 18, part3-over-part1 for 23); sender 2 colors blocks with an optimal
// coloring of its own sub-problem's confusion graph. Variants 20/21/25 are
// handled by exchanging the exclusive part labels. The instance must be fully
// participated with exactly the variant's interaction digraph.
AchievableColoring achievable_coloring_case1(const TuicpInstance& inst, int variant,
                                             const Caps& caps = {});

struct GapReport {
    int variant = 0;
    Rational sum_parts;                // sum of the three per-part optimal rates
    Rational achievable;               // rate of the dedicated construction
    int eps_achievable = 0;            // t * (achievable - sum_parts)
    std::optional<Rational> exact;     // absent when over the exact-search cap
    std::optional<int> eps_exact;      // t * (exact - sum_parts)
};

// Gap between the whole-instance rates and the sum of per-part rates, for
// fully-participated instances on a pinned acyclic variant.
GapReport conjecture_gap(const TuicpInstance& inst, const Caps& caps = {});

}  // namespace tsic
