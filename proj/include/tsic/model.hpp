#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsic/digraph.hpp"

namespace tsic {

// Message ids are 1-based. P1 is exclusive to sender 1, P2 to sender 2, P3 is shared.
struct MessagePartition {
    std::vector<int> p1, p2, p3;  // each sorted ascending

    const std::vector<int>& part(int i) const;
    // 1, 2 or 3; throws input_error when the message is in no part.
    int part_of(int msg) const;
};

struct TuicpInstance {
    Digraph d;               // vertex v-1 carries message v
    MessagePartition part;
    int t = 1;

    int m() const { return d.size(); }
};

struct ValidationInfo {
    int m1 = 0, m2 = 0, m3 = 0;
};

// Checks part disjointness/coverage, id ranges, t >= 1. Throws input_error with the
// offending ids spelled out.
ValidationInfo validate_instance(const TuicpInstance& inst);

// 3-vertex interaction digraph as a 6-bit mask.
// Bit order: (1,2), (2,1), (1,3), (3,1), (2,3), (3,2).
class InteractionMask {
public:
    InteractionMask() : bits_(0) {}
    explicit InteractionMask(unsigned bits) : bits_(static_cast<std::uint8_t>(bits & 0x3f)) {}

    static int bit_index(int i, int j);

    bool has(int i, int j) const { return (bits_ >> bit_index(i, j)) & 1u; }
    void set(int i, int j) { bits_ |= 1u << bit_index(i, j); }
    unsigned bits() const { return bits_; }

    bool is_subset_of(InteractionMask other) const { return (bits_ & ~other.bits_) == 0; }

    // Canonical rendering, e.g. "{(1,3),(2,3),(3,1)}"; pairs in ascending (i,j) order.
    std::string str() const;

    Digraph as_digraph() const;        // vertices 0,1,2 stand for parts 1,2,3
    InteractionMask swap12() const;    // exchange part labels 1 and 2

    friend bool operator==(InteractionMask a, InteractionMask b) { return a.bits_ == b.bits_; }
    friend bool operator!=(InteractionMask a, InteractionMask b) { return a.bits_ != b.bits_; }
    friend bool operator<(InteractionMask a, InteractionMask b) { return a.bits_ < b.bits_; }

private:
    std::uint8_t bits_;
};

enum class CaseKind { I, IIA, IIB, IIC, IID, IIE, IIBEUnresolved };

std::string case_kind_str(CaseKind k);

struct CaseLabel {
    CaseKind kind = CaseKind::I;

    std::string str() const { return case_kind_str(kind); }
    // Candidate rows for the optimal-rate table; two entries for the unresolved label.
    std::vector<CaseKind> table2_candidates() const;
};

// Interaction digraph: (i,j) present iff some edge runs from part i to part j.
InteractionMask interaction_digraph(const TuicpInstance& inst);

// Participation per present interaction: full means every cross pair (u in Pi, v in Pj)
// is an edge.
enum class Participation { Full, Partial };
std::map<std::pair<int, int>, Participation> participation_map(const TuicpInstance& inst);
bool is_fully_participated(const TuicpInstance& inst);

// Structural classification of the 64 interaction digraphs:
//   I    : acyclic
//   II-A : cyclic, part 3 on no cycle
//   II-C : 2-cycle {1,3} present, 2-cycle {2,3} absent
//   II-D : 2-cycle {2,3} present, 2-cycle {1,3} absent
//   II-B : exactly {(1,3),(3,1),(2,3),(3,2)}
//   II-E : cyclic, neither 2-cycle {1,3} nor {2,3}, part 3 on a cycle
//   II-B/E-unresolved : both 2-cycles plus at least one edge between parts 1 and 2
CaseLabel classify_case(InteractionMask h);

// The six acyclic interaction digraphs with dedicated achievable constructions,
// keyed by their conventional variant numbers.
//   16: {(1,2),(3,2)}        20: its 1<->2 swap
//   18: {(1,2),(3,1),(3,2)}  21: its 1<->2 swap
//   23: {(1,2),(1,3),(3,2)}  25: its 1<->2 swap
const std::map<int, InteractionMask>& pinned_case1_digraphs();

// Variant number of a pinned acyclic interaction digraph, if it is one.
std::optional<int> pinned_variant(InteractionMask h);

// Fully-participated instance: internal edges from d1/d2/d3, every cross pair of each
// interaction in h added. Messages are numbered P1 first, then P2, then P3.
TuicpInstance build_fully_participated(const Digraph& d1, const Digraph& d2, const Digraph& d3,
                                       InteractionMask h, int t);

// Exchange the exclusive parts (P1 <-> P2); the digraph itself is unchanged.
TuicpInstance swap_labels_12(const TuicpInstance& inst);

// Sub-digraph induced by part i's messages, ascending (the problem restricted to Pi).
Digraph part_subdigraph(const TuicpInstance& inst, int part);

}  // namespace tsic
