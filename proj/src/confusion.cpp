#include "tsic/confusion.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace tsic {

namespace {

// Bit mask of message msg's t-bit segment inside a realization integer.
std::uint32_t segment_mask(int m, int t, int msg) {
    std::uint32_t seg = (t >= 32) ? ~0u : ((1u << t) - 1);
    return seg << ((m - msg) * t);
}

struct ReceiverMasks {
    std::uint32_t own;   // the receiver's message bits
    std::uint32_t side;  // all side-information bits
};

std::vector<ReceiverMasks> receiver_masks(const Digraph& d, int t) {
    const int m = d.size();
    std::vector<ReceiverMasks> rm(static_cast<std::size_t>(m));
    for (int r = 1; r <= m; ++r) {
        std::uint32_t side = 0;
        for (int j = 1; j <= m; ++j) {
            if (j != r && d.has_edge(r - 1, j - 1)) side |= segment_mask(m, t, j);
        }
        rm[static_cast<std::size_t>(r - 1)] = {segment_mask(m, t, r), side};
    }
    return rm;
}

// Fills conf[d] with the smallest witness receiver for every difference in [lo, hi).
void fill_range(std::vector<std::uint8_t>& conf, const std::vector<ReceiverMasks>& rm,
                std::uint32_t lo, std::uint32_t hi) {
    for (std::uint32_t d = lo; d < hi; ++d) {
        if (d == 0) continue;
        for (std::size_t r = 0; r < rm.size(); ++r) {
            if ((d & rm[r].own) != 0 && (d & rm[r].side) == 0) {
                conf[d] = static_cast<std::uint8_t>(r + 1);
                break;
            }
        }
    }
}

}  // namespace

std::optional<int> confusable(const BitVec& x, const BitVec& y, const TuicpInstance& inst) {
    validate_instance(inst);
    const std::size_t want = static_cast<std::size_t>(inst.m()) * inst.t;
    if (x.size() != want || y.size() != want) {
        throw input_error("realization must have m*t = " + std::to_string(want) + " bits");
    }
    const int m = inst.m();
    const int t = inst.t;
    for (int r = 1; r <= m; ++r) {
        bool own_differs = false;
        for (int b = 0; b < t; ++b) {
            std::size_t pos = static_cast<std::size_t>((r - 1) * t + b);
            if (x[pos] != y[pos]) {
                own_differs = true;
                break;
            }
        }
        if (!own_differs) continue;
        bool side_agrees = true;
        for (int j = 1; j <= m && side_agrees; ++j) {
            if (j == r || !inst.d.has_edge(r - 1, j - 1)) continue;
            for (int b = 0; b < t; ++b) {
                std::size_t pos = static_cast<std::size_t>((j - 1) * t + b);
                if (x[pos] != y[pos]) {
                    side_agrees = false;
                    break;
                }
            }
        }
        if (side_agrees) return r;
    }
    return std::nullopt;
}

ConfusionGraph ConfusionGraph::build(const TuicpInstance& inst, const Caps& caps, int threads) {
    validate_instance(inst);
    return [&] {
        ConfusionGraph cg;
        cg.m_ = inst.m();
        cg.t_ = inst.t;
        cg.part_ = inst.part;
        const int mt = cg.mt();
        require_cap(mt, caps.predicate_mt, "confusion predicate");
        auto rm = receiver_masks(inst.d, cg.t_);
        cg.conf_.assign(std::size_t{1} << mt, 0);
        const std::uint32_t n = 1u << mt;
        const int workers = std::max(1, std::min(threads, 64));
        if (workers == 1 || n < 1u << 12) {
            fill_range(cg.conf_, rm, 0, n);
        } else {
            std::vector<std::thread> pool;
            std::uint32_t chunk = (n + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                std::uint32_t lo = w * chunk;
                std::uint32_t hi = std::min(n, lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back(fill_range, std::ref(cg.conf_), std::cref(rm), lo, hi);
            }
            for (auto& th : pool) th.join();
        }
        for (std::uint32_t d = 1; d < n; ++d) {
            if (cg.conf_[d]) cg.deltas_.push_back(d);
        }
        return cg;
    }();
}

ConfusionGraph ConfusionGraph::build_single(const Digraph& d, int t, const Caps& caps,
                                            int threads) {
    TuicpInstance inst;
    inst.d = d;
    inst.t = t;
    for (int v = 1; v <= d.size(); ++v) inst.part.p1.push_back(v);
    if (d.size() == 0) {
        // Degenerate part: one realization, no confusions.
        ConfusionGraph cg;
        cg.m_ = 0;
        cg.t_ = t;
        cg.conf_.assign(1, 0);
        return cg;
    }
    return build(inst, caps, threads);
}

std::size_t ConfusionGraph::num_edges() const {
    return static_cast<std::size_t>(num_vertices()) * deltas_.size() / 2;
}

int ConfusionGraph::label_width(int part) const {
    return t_ * static_cast<int>(part_.part(part).size());
}

std::uint32_t ConfusionGraph::label(std::uint32_t v, int part) const {
    std::uint32_t out = 0;
    const std::uint32_t seg = (t_ >= 32) ? ~0u : ((1u << t_) - 1);
    for (int msg : part_.part(part)) {
        std::uint32_t piece = (v >> ((m_ - msg) * t_)) & seg;
        out = (out << t_) | piece;
    }
    return out;
}

UGraph ConfusionGraph::to_ugraph(const Caps& caps) const {
    require_cap(mt(), caps.materialize_mt, "confusion materialization");
    UGraph g(static_cast<int>(num_vertices()));
    for (std::uint32_t x = 0; x < num_vertices(); ++x) {
        for (std::uint32_t d : deltas_) {
            std::uint32_t y = x ^ d;
            if (x < y) g.add_edge(static_cast<int>(x), static_cast<int>(y));
        }
    }
    return g;
}

std::vector<std::vector<std::uint32_t>> blocks(const ConfusionGraph& cg, int part) {
    const int width = cg.label_width(part);
    std::vector<std::vector<std::uint32_t>> groups(std::size_t{1} << width);
    for (std::uint32_t v = 0; v < cg.num_vertices(); ++v) {
        groups[cg.label(v, part)].push_back(v);
    }
    return groups;
}

UGraph block_subgraph(const ConfusionGraph& cg, int part, std::uint32_t label_value,
                      const Caps& caps) {
    const int width = cg.label_width(part);
    if (label_value >= (std::uint32_t{1} << width)) {
        throw input_error("block label out of range");
    }
    std::vector<std::uint32_t> members;
    for (std::uint32_t v = 0; v < cg.num_vertices(); ++v) {
        if (cg.label(v, part) == label_value) members.push_back(v);
    }
    require_cap(static_cast<long long>(members.size()), caps.iso_vertices, "block materialization");
    UGraph g(static_cast<int>(members.size()));
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            if (cg.adjacent(members[a], members[b])) {
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    return g;
}

std::optional<std::uint32_t> verify_block_isomorphism(const ConfusionGraph& cg, int part,
                                                      const Caps& caps) {
    const int width = cg.label_width(part);
    const std::uint32_t groups = std::uint32_t{1} << width;
    if (groups <= 1) return std::nullopt;
    UGraph first = block_subgraph(cg, part, 0, caps);
    for (std::uint32_t g = 1; g < groups; ++g) {
        UGraph other = block_subgraph(cg, part, g, caps);
        if (!find_isomorphism(first, other, caps.iso_vertices).has_value()) return g;
    }
    return std::nullopt;
}

std::optional<std::uint32_t> verify_jblock_product_iso(const TuicpInstance& inst, int variant,
                                                       const Caps& caps) {
    if (variant != 16 && variant != 18 && variant != 23) {
        throw precondition_error("product block structure is pinned for variants 16, 18, 23");
    }
    validate_instance(inst);
    InteractionMask h = interaction_digraph(inst);
    if (h != pinned_case1_digraphs().at(variant)) {
        throw precondition_error("instance interaction digraph is not variant " +
                                 std::to_string(variant));
    }
    if (!is_fully_participated(inst)) {
        throw precondition_error("instance must be fully participated");
    }

    UGraph g1 = ConfusionGraph::build_single(part_subdigraph(inst, 1), inst.t, caps).to_ugraph(caps);
    UGraph g3 = ConfusionGraph::build_single(part_subdigraph(inst, 3), inst.t, caps).to_ugraph(caps);
    require_cap(static_cast<long long>(g1.size()) * g3.size(), caps.iso_vertices,
                "product isomorphism");
    UGraph product = variant == 16   ? disj_product(g1, g3)
                     : variant == 18 ? lex_product(g1, g3)
                                     : lex_product(g3, g1);

    ConfusionGraph cg = ConfusionGraph::build(inst, caps);
    const std::uint32_t groups = std::uint32_t{1} << cg.label_width(2);
    const std::uint32_t n1 = static_cast<std::uint32_t>(g1.size());
    const std::uint32_t n3 = static_cast<std::uint32_t>(g3.size());
    // Block members are ordered part-1 label major, part-3 label minor, so the
    // pair (a, b) sits at a*n3 + b; the product puts it at the same index
    // (disjunctive, part1-over-part3 lexicographic) or at b*n1 + a
    // (part3-over-part1). Checking that explicit bijection edge-by-edge is a
    // full isomorphism proof; the generic search is only a fallback.
    const auto natural = [&](std::uint32_t idx) {
        return variant == 23 ? (idx % n3) * n1 + idx / n3 : idx;
    };
    for (std::uint32_t g = 0; g < groups; ++g) {
        UGraph block = block_subgraph(cg, 2, g, caps);
        if (block.size() != product.size()) return g;
        bool natural_ok = true;
        for (int u = 0; u < block.size() && natural_ok; ++u) {
            for (int v = u + 1; v < block.size(); ++v) {
                if (block.adjacent(u, v) != product.adjacent(natural(u), natural(v))) {
                    natural_ok = false;
                    break;
                }
            }
        }
        if (natural_ok) continue;
        if (!find_isomorphism(block, product, caps.iso_vertices).has_value()) return g;
    }
    return std::nullopt;
}

std::string to_dot(const ConfusionGraph& cg) {
    std::ostringstream os;
    os << "graph G {\n";
    for (std::uint32_t v = 0; v < cg.num_vertices(); ++v) {
        os << "  " << v << " [label=\"(";
        for (int part = 1; part <= 3; ++part) {
            if (part > 1) os << ",";
            const int w = cg.label_width(part);
            std::uint32_t lab = cg.label(v, part);
            for (int b = w - 1; b >= 0; --b) os << ((lab >> b) & 1);
        }
        os << ")\"];\n";
    }
    for (std::uint32_t x = 0; x < cg.num_vertices(); ++x) {
        for (std::uint32_t d : cg.differences()) {
            std::uint32_t y = x ^ d;
            if (x < y) os << "  " << x << " -- " << y << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace tsic
