#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsic/bits.hpp"
#include "tsic/coloring.hpp"
#include "tsic/confusion.hpp"
#include "tsic/model.hpp"

namespace tsic {

using Codeword = BitVec;

// XOR with the shorter word zero-padded at its trailing (least significant)
// end, so both words stay aligned at the leading bit.
Codeword xor_zero_pad(const Codeword& a, const Codeword& b);

// 1-based inclusive slice from the leading bit. `from == to + 1` yields the
// empty word; anything else out of range throws input_error.
Codeword slice(const Codeword& w, int from, int to);

// Fixed-length code for a single sender serving every message of a digraph:
// one codeword per realization of the m*t bits.
struct SingleSenderCode {
    int t = 1;
    int m = 0;
    int p = 0;           // codeword length in bits
    int num_colors = 1;  // colors of the underlying confusion-graph coloring
    std::vector<Codeword> words;
};

// Two-sender code: sender 1 sees only the part-1/part-3 bits, sender 2 only
// the part-2/part-3 bits, so codewords are indexed by the same cells as the
// coloring tables.
struct TwoSenderCode {
    int t = 1;
    int m1 = 0, m2 = 0, m3 = 0;
    int p1 = 0, p2 = 0;  // per-sender codeword lengths in bits
    std::vector<Codeword> enc1;
    std::vector<Codeword> enc2;
    std::string provenance;

    int w1() const { return t * m1; }
    int w2() const { return t * m2; }
    int w3() const { return t * m3; }
    std::size_t cell1(std::uint32_t i, std::uint32_t k) const {
        return (static_cast<std::size_t>(i) << w3()) | k;
    }
    std::size_t cell2(std::uint32_t j, std::uint32_t k) const {
        return (static_cast<std::size_t>(j) << w3()) | k;
    }
    const Codeword& word1_for(const ConfusionGraph& cg, std::uint32_t v) const {
        return enc1[cell1(cg.label(v, 1), cg.label(v, 3))];
    }
    const Codeword& word2_for(const ConfusionGraph& cg, std::uint32_t v) const {
        return enc2[cell2(cg.label(v, 2), cg.label(v, 3))];
    }
    int total_bits() const { return p1 + p2; }
    Rational rate() const { return {total_bits(), t}; }
};

struct CodeCollision {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    int receiver = 0;  // a receiver that cannot tell u from v
};

// Binary-expand each color table of a valid two-sender coloring into
// fixed-width codewords.
TwoSenderCode code_from_coloring(const TwoSenderColoring& c);

// Optimal fixed-length single-sender code for t-bit messages: color the
// confusion graph, then binary-expand the colors.
SingleSenderCode single_sender_code(const Digraph& d, int t, const Caps& caps = {});

// Code for fully-participated instances whose three interaction pairs all
// run both ways: build optimal per-part codes, fold the common-part word
// (truncated to the shortest per-part length) into both senders by XOR, and
// append any leftover common-part bits to one sender. `tail_to_sender1`
// picks who carries the leftover; `allow_other_cases` skips the interaction
// precondition.
TwoSenderCode construct_case2e_code(const TuicpInstance& inst, bool tail_to_sender1 = true,
                                    const Caps& caps = {}, bool allow_other_cases = false);

// Exhaustively checks that no confusable pair of realizations shares both
// codewords. Returns the first collision, or nullopt when the code decodes.
std::optional<CodeCollision> verify_decodability(const TwoSenderCode& code,
                                                 const TuicpInstance& inst,
                                                 const Caps& caps = {});

}  // namespace tsic
