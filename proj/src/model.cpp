#include "tsic/model.hpp"

#include <algorithm>
#include <sstream>

namespace tsic {

const std::vector<int>& MessagePartition::part(int i) const {
    switch (i) {
        case 1: return p1;
        case 2: return p2;
        case 3: return p3;
        default: throw input_error("part index must be 1, 2 or 3");
    }
}

int MessagePartition::part_of(int msg) const {
    for (int i = 1; i <= 3; ++i) {
        const auto& p = part(i);
        if (std::binary_search(p.begin(), p.end(), msg)) return i;
    }
    throw input_error("message " + std::to_string(msg) + " is in no part");
}

ValidationInfo validate_instance(const TuicpInstance& inst) {
    const int m = inst.m();
    if (m < 1) throw input_error("instance needs at least one message");
    if (inst.t < 1) throw input_error("t must be >= 1");
    std::vector<int> owner(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 1; i <= 3; ++i) {
        const auto& p = inst.part.part(i);
        if (!std::is_sorted(p.begin(), p.end())) {
            throw input_error("part P" + std::to_string(i) + " must be sorted ascending");
        }
        for (int msg : p) {
            if (msg < 1 || msg > m) {
                throw input_error("part P" + std::to_string(i) + " has out-of-range message " +
                                  std::to_string(msg));
            }
            if (owner[static_cast<std::size_t>(msg)] != 0) {
                throw input_error("message " + std::to_string(msg) + " appears in P" +
                                  std::to_string(owner[static_cast<std::size_t>(msg)]) +
                                  " and P" + std::to_string(i));
            }
            owner[static_cast<std::size_t>(msg)] = i;
        }
    }
    for (int msg = 1; msg <= m; ++msg) {
        if (owner[static_cast<std::size_t>(msg)] == 0) {
            throw input_error("message " + std::to_string(msg) + " is in no part");
        }
    }
    return ValidationInfo{static_cast<int>(inst.part.p1.size()),
                          static_cast<int>(inst.part.p2.size()),
                          static_cast<int>(inst.part.p3.size())};
}

int InteractionMask::bit_index(int i, int j) {
    static constexpr std::array<std::pair<int, int>, 6> order{
        {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}};
    for (std::size_t b = 0; b < order.size(); ++b) {
        if (order[b].first == i && order[b].second == j) return static_cast<int>(b);
    }
    throw input_error("interaction pair out of range: (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
}

std::string InteractionMask::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (i != j && has(i, j)) {
                if (!first) os << ",";
                os << "(" << i << "," << j << ")";
                first = false;
            }
        }
    }
    os << "}";
    return os.str();
}

Digraph InteractionMask::as_digraph() const {
    Digraph d(3);
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (i != j && has(i, j)) d.add_edge(i - 1, j - 1);
        }
    }
    return d;
}

InteractionMask InteractionMask::swap12() const {
    InteractionMask out;
    auto sw = [](int v) { return v == 1 ? 2 : v == 2 ? 1 : 3; };
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (i != j && has(i, j)) out.set(sw(i), sw(j));
        }
    }
    return out;
}

std::string case_kind_str(CaseKind k) {
    switch (k) {
        case CaseKind::I: return "I";
        case CaseKind::IIA: return "II-A";
        case CaseKind::IIB: return "II-B";
        case CaseKind::IIC: return "II-C";
        case CaseKind::IID: return "II-D";
        case CaseKind::IIE: return "II-E";
        case CaseKind::IIBEUnresolved: return "II-B/E-unresolved";
    }
    return "?";
}

std::vector<CaseKind> CaseLabel::table2_candidates() const {
    if (kind == CaseKind::IIBEUnresolved) return {CaseKind::IIB, CaseKind::IIE};
    return {kind};
}

InteractionMask interaction_digraph(const TuicpInstance& inst) {
    InteractionMask h;
    for (auto [u, v] : inst.d.edges()) {
        int pi = inst.part.part_of(u + 1);
        int pj = inst.part.part_of(v + 1);
        if (pi != pj) h.set(pi, pj);
    }
    return h;
}

std::map<std::pair<int, int>, Participation> participation_map(const TuicpInstance& inst) {
    InteractionMask h = interaction_digraph(inst);
    std::map<std::pair<int, int>, Participation> out;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (i == j || !h.has(i, j)) continue;
            bool full = true;
            for (int u : inst.part.part(i)) {
                for (int v : inst.part.part(j)) {
                    if (!inst.d.has_edge(u - 1, v - 1)) {
                        full = false;
                        break;
                    }
                }
                if (!full) break;
            }
            out[{i, j}] = full ? Participation::Full : Participation::Partial;
        }
    }
    return out;
}

bool is_fully_participated(const TuicpInstance& inst) {
    for (auto& [pair, p] : participation_map(inst)) {
        if (p != Participation::Full) return false;
    }
    return true;
}

CaseLabel classify_case(InteractionMask h) {
    const bool cyc13 = h.has(1, 3) && h.has(3, 1);
    const bool cyc23 = h.has(2, 3) && h.has(3, 2);
    Digraph hd = h.as_digraph();
    if (is_acyclic(hd)) return {CaseKind::I};

    if (cyc13 && cyc23) {
        // With both part-3 2-cycles the only remaining freedom is the 1-2 edges.
        if (!h.has(1, 2) && !h.has(2, 1)) return {CaseKind::IIB};
        return {CaseKind::IIBEUnresolved};
    }
    if (cyc13) return {CaseKind::IIC};
    if (cyc23) return {CaseKind::IID};

    auto cyc = cycle_vertices(hd);
    const bool v3_on_cycle = std::find(cyc.begin(), cyc.end(), 2) != cyc.end();
    if (!v3_on_cycle) return {CaseKind::IIA};
    return {CaseKind::IIE};
}

const std::map<int, InteractionMask>& pinned_case1_digraphs() {
    static const std::map<int, InteractionMask> pinned = [] {
        std::map<int, InteractionMask> m;
        InteractionMask h16, h18, h23;
        h16.set(1, 2);
        h16.set(3, 2);
        h18.set(1, 2);
        h18.set(3, 1);
        h18.set(3, 2);
        h23.set(1, 2);
        h23.set(1, 3);
        h23.set(3, 2);
        m.emplace(16, h16);
        m.emplace(18, h18);
        m.emplace(23, h23);
        m.emplace(20, h16.swap12());
        m.emplace(21, h18.swap12());
        m.emplace(25, h23.swap12());
        return m;
    }();
    return pinned;
}

std::optional<int> pinned_variant(InteractionMask h) {
    for (const auto& [variant, mask] : pinned_case1_digraphs()) {
        if (mask == h) return variant;
    }
    return std::nullopt;
}

TuicpInstance build_fully_participated(const Digraph& d1, const Digraph& d2, const Digraph& d3,
                                       InteractionMask h, int t) {
    const int n1 = d1.size(), n2 = d2.size(), n3 = d3.size();
    const int m = n1 + n2 + n3;
    TuicpInstance inst;
    inst.d = Digraph(m);
    inst.t = t;
    for (int v = 1; v <= n1; ++v) inst.part.p1.push_back(v);
    for (int v = 1; v <= n2; ++v) inst.part.p2.push_back(n1 + v);
    for (int v = 1; v <= n3; ++v) inst.part.p3.push_back(n1 + n2 + v);

    auto offset = [&](int part) { return part == 1 ? 0 : part == 2 ? n1 : n1 + n2; };
    const Digraph* internal[3] = {&d1, &d2, &d3};
    for (int p = 1; p <= 3; ++p) {
        for (auto [u, v] : internal[p - 1]->edges()) {
            inst.d.add_edge(offset(p) + u, offset(p) + v);
        }
    }
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (i == j || !h.has(i, j)) continue;
            const auto& pi = inst.part.part(i);
            const auto& pj = inst.part.part(j);
            if (pi.empty() || pj.empty()) {
                throw precondition_error("interaction (" + std::to_string(i) + "," +
                                         std::to_string(j) + ") requires nonempty parts");
            }
            for (int u : pi) {
                for (int v : pj) inst.d.add_edge(u - 1, v - 1);
            }
        }
    }
    return inst;
}

TuicpInstance swap_labels_12(const TuicpInstance& inst) {
    TuicpInstance out = inst;
    std::swap(out.part.p1, out.part.p2);
    return out;
}

Digraph part_subdigraph(const TuicpInstance& inst, int part) {
    std::vector<int> vs;
    for (int msg : inst.part.part(part)) vs.push_back(msg - 1);
    return induced_subdigraph(inst.d, vs);
}

}  // namespace tsic
