#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsic/bits.hpp"
#include "tsic/config.hpp"
#include "tsic/graph_algos.hpp"
#include "tsic/model.hpp"
#include "tsic/ugraph.hpp"

namespace tsic {

// Realizations x, y are confusable when some receiver r sees x_r != y_r while every
// message in K_r agrees. Returns the smallest such receiver (1-based), or nullopt.
// Bit vectors hold the m*t message bits, x1 first, most significant bit first.
std::optional<int> confusable(const BitVec& x, const BitVec& y, const TuicpInstance& inst);

// Confusion graph on all 2^(m*t) realizations. Whether x and y collide depends only on
// x XOR y, so the graph is stored as one table over difference values: adjacency checks
// and edge sweeps never materialize an adjacency matrix.
class ConfusionGraph {
public:
    // Full instance graph; requires m*t within the predicate cap.
    static ConfusionGraph build(const TuicpInstance& inst, const Caps& caps = {}, int threads = 1);

    // Single-sender graph of a bare side-information digraph (all messages in one part).
    static ConfusionGraph build_single(const Digraph& d, int t, const Caps& caps = {},
                                       int threads = 1);

    int m() const { return m_; }
    int t() const { return t_; }
    int mt() const { return m_ * t_; }
    std::uint32_t num_vertices() const { return 1u << mt(); }
    std::size_t num_edges() const;

    bool adjacent(std::uint32_t x, std::uint32_t y) const {
        return x != y && conf_[x ^ y] != 0;
    }
    // Smallest receiver witnessing the confusion, or nullopt.
    std::optional<int> witness(std::uint32_t x, std::uint32_t y) const {
        if (x == y || conf_[x ^ y] == 0) return std::nullopt;
        return static_cast<int>(conf_[x ^ y]);
    }

    // Nonzero difference values d with x ~ x^d, ascending.
    const std::vector<std::uint32_t>& differences() const { return deltas_; }

    // Part labels of a realization: the concatenated bits of that part's messages.
    std::uint32_t label(std::uint32_t v, int part) const;
    int label_width(int part) const;  // t * |P_part|

    // Materialized copy; requires m*t within the materialization cap.
    UGraph to_ugraph(const Caps& caps = {}) const;

    const MessagePartition& partition() const { return part_; }

private:
    int m_ = 0, t_ = 1;
    MessagePartition part_;
    std::vector<std::uint8_t> conf_;     // indexed by difference, 0 or witness receiver
    std::vector<std::uint32_t> deltas_;  // nonzero confusable differences, ascending
};

// Blocks along one part axis: group g holds the vertices whose part label equals g.
// Groups come back label-ascending, members ascending.
std::vector<std::vector<std::uint32_t>> blocks(const ConfusionGraph& cg, int part);

// Induced subgraph of one block, vertices relabeled in member order.
UGraph block_subgraph(const ConfusionGraph& cg, int part, std::uint32_t label_value,
                      const Caps& caps = {});

// All blocks along the axis pairwise isomorphic? Each is checked against block 0;
// returns the first failing block label, or nullopt when the family is uniform.
std::optional<std::uint32_t> verify_block_isomorphism(const ConfusionGraph& cg, int part,
                                                      const Caps& caps = {});

// For the pinned acyclic variants 16/18/23 on fully-participated instances, each
// sender-2 block must be isomorphic to the variant's product of the part graphs:
//   16: disjunctive(G1, G3)    18: lexicographic(G1, G3)    23: lexicographic(G3, G1)
// where Gi is the confusion graph of part i's sub-digraph. Returns the first failing
// block label, or nullopt.
std::optional<std::uint32_t> verify_jblock_product_iso(const TuicpInstance& inst, int variant,
                                                       const Caps& caps = {});

// DOT rendering with per-part tuple labels.
std::string to_dot(const ConfusionGraph& cg);

}  // namespace tsic
