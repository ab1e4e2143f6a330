#include "tsic/codes.hpp"

#include <algorithm>
#include <stdexcept>

#include "tsic/graph_algos.hpp"

namespace tsic {

namespace {

Codeword concat(Codeword a, const Codeword& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

Codeword xor_zero_pad(const Codeword& a, const Codeword& b) {
    const Codeword& longer = a.size() >= b.size() ? a : b;
    const Codeword& shorter = a.size() >= b.size() ? b : a;
    Codeword out = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i) out[i] ^= shorter[i];
    return out;
}

Codeword slice(const Codeword& w, int from, int to) {
    const int len = static_cast<int>(w.size());
    if (from < 1 || to > len || from > to + 1) {
        throw input_error("slice [" + std::to_string(from) + ":" + std::to_string(to) +
                          "] out of range for a " + std::to_string(len) + "-bit word");
    }
    return Codeword(w.begin() + (from - 1), w.begin() + to);
}

TwoSenderCode code_from_coloring(const TwoSenderColoring& c) {
    TwoSenderCode code;
    code.t = c.t;
    code.m1 = c.m1;
    code.m2 = c.m2;
    code.m3 = c.m3;
    if (c.table1.size() != c.num_cells1() || c.table2.size() != c.num_cells2()) {
        throw input_error("coloring tables do not match the declared part sizes");
    }
    code.p1 = ceil_log2(c.num_colors1);
    code.p2 = ceil_log2(c.num_colors2);
    code.enc1.reserve(c.table1.size());
    for (int color : c.table1) code.enc1.push_back(bits_from_uint(color, code.p1));
    code.enc2.reserve(c.table2.size());
    for (int color : c.table2) code.enc2.push_back(bits_from_uint(color, code.p2));
    code.provenance = "binary expansion of a two-sender coloring";
    return code;
}

SingleSenderCode single_sender_code(const Digraph& d, int t, const Caps& caps) {
    const ConfusionGraph cg = ConfusionGraph::build_single(d, t, caps);
    const ColoringResult col = chromatic_number(cg.to_ugraph(caps), caps.chromatic_vertices);
    SingleSenderCode code;
    code.t = t;
    code.m = d.size();
    code.num_colors = col.num_colors;
    code.p = ceil_log2(col.num_colors);
    code.words.reserve(cg.num_vertices());
    for (std::uint32_t v = 0; v < cg.num_vertices(); ++v) {
        code.words.push_back(bits_from_uint(col.colors[v], code.p));
    }
    for (std::uint32_t u = 0; u < cg.num_vertices(); ++u) {
        for (std::uint32_t delta : cg.differences()) {
            if ((u ^ delta) > u && code.words[u] == code.words[u ^ delta]) {
                throw std::logic_error("single-sender code failed its own confusion check");
            }
        }
    }
    return code;
}

TwoSenderCode construct_case2e_code(const TuicpInstance& inst, bool tail_to_sender1,
                                    const Caps& caps, bool allow_other_cases) {
    const ValidationInfo info = validate_instance(inst);
    if (!is_fully_participated(inst)) {
        throw precondition_error("common-part folding code requires full participation");
    }
    if (!allow_other_cases) {
        const CaseLabel label = classify_case(interaction_digraph(inst));
        if (label.kind != CaseKind::IIE) {
            throw precondition_error(
                "common-part folding code expects two-way interaction between every "
                "pair of parts (" + label.str() + " found); set allow_other_cases to force");
        }
    }

    const SingleSenderCode c1 = single_sender_code(part_subdigraph(inst, 1), inst.t, caps);
    const SingleSenderCode c2 = single_sender_code(part_subdigraph(inst, 2), inst.t, caps);
    const SingleSenderCode c3 = single_sender_code(part_subdigraph(inst, 3), inst.t, caps);
    const int b1 = c1.p, b2 = c2.p, b3 = c3.p;
    const int q = std::min({b1, b2, b3});

    TwoSenderCode code;
    code.t = inst.t;
    code.m1 = info.m1;
    code.m2 = info.m2;
    code.m3 = info.m3;
    code.p1 = b1 + (tail_to_sender1 ? b3 - q : 0);
    code.p2 = b2 + (tail_to_sender1 ? 0 : b3 - q);
    code.enc1.resize(std::size_t{1} << (code.w1() + code.w3()));
    code.enc2.resize(std::size_t{1} << (code.w2() + code.w3()));
    for (std::uint32_t k = 0; k < (1u << code.w3()); ++k) {
        const Codeword prefix = slice(c3.words[k], 1, q);
        const Codeword tail = slice(c3.words[k], q + 1, b3);
        for (std::uint32_t i = 0; i < (1u << code.w1()); ++i) {
            Codeword w = xor_zero_pad(c1.words[i], prefix);
            if (tail_to_sender1) w = concat(std::move(w), tail);
            code.enc1[code.cell1(i, k)] = std::move(w);
        }
        for (std::uint32_t j = 0; j < (1u << code.w2()); ++j) {
            Codeword w = xor_zero_pad(c2.words[j], prefix);
            if (!tail_to_sender1) w = concat(std::move(w), tail);
            code.enc2[code.cell2(j, k)] = std::move(w);
        }
    }
    code.provenance =
        "per-part optimal codes of " + std::to_string(b1) + "/" + std::to_string(b2) + "/" +
        std::to_string(b3) + " bits; common-part word truncated to " + std::to_string(q) +
        " bits and folded into both senders" +
        (b3 > q ? "; " + std::to_string(b3 - q) + "-bit tail on sender " +
                      (tail_to_sender1 ? std::string("1") : std::string("2"))
                : std::string());

    if (auto collision = verify_decodability(code, inst, caps)) {
        const std::string where = "realizations " + std::to_string(collision->u) + "," +
                                  std::to_string(collision->v) + " (receiver " +
                                  std::to_string(collision->receiver) + ")";
        if (allow_other_cases) {
            throw precondition_error("forced folding code does not decode here: " + where);
        }
        throw std::logic_error("constructed code failed decodability at " + where);
    }
    return code;
}

std::optional<CodeCollision> verify_decodability(const TwoSenderCode& code,
                                                 const TuicpInstance& inst, const Caps& caps) {
    const ValidationInfo info = validate_instance(inst);
    if (code.t != inst.t || code.m1 != info.m1 || code.m2 != info.m2 || code.m3 != info.m3) {
        throw input_error("code dimensions do not match the instance");
    }
    const ConfusionGraph cg = ConfusionGraph::build(inst, caps);
    for (std::uint32_t u = 0; u < cg.num_vertices(); ++u) {
        for (std::uint32_t delta : cg.differences()) {
            const std::uint32_t v = u ^ delta;
            if (v < u) continue;
            if (code.word1_for(cg, u) == code.word1_for(cg, v) &&
                code.word2_for(cg, u) == code.word2_for(cg, v)) {
                return CodeCollision{u, v, *cg.witness(u, v)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace tsic
