#include "tsic/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace tsic {

Digraph induced_subdigraph(const Digraph& d, std::span<const int> vs) {
    std::uint64_t seen = 0;
    for (int v : vs) {
        if (v < 0 || v >= d.size()) throw input_error("induced: vertex out of range");
        if ((seen >> v) & 1ull) throw input_error("induced: duplicate vertex");
        seen |= 1ull << v;
    }
    Digraph sub(static_cast<int>(vs.size()));
    for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = 0; b < vs.size(); ++b) {
            if (a != b && d.has_edge(vs[a], vs[b])) {
                sub.add_edge(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    return sub;
}

namespace {

// Tarjan strongly connected components; returns component id per vertex plus sizes.
struct SccResult {
    std::vector<int> comp;
    std::vector<int> comp_size;
};

SccResult scc(const Digraph& d) {
    const int n = d.size();
    SccResult res;
    res.comp.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    int next_index = 0;

    // Iterative DFS to avoid recursion limits; frames hold (vertex, remaining out-mask).
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<std::pair<int, std::uint64_t>> frames;
        frames.push_back({root, d.out_mask(root)});
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;
        while (!frames.empty()) {
            auto& [v, rest] = frames.back();
            if (rest) {
                int w = __builtin_ctzll(rest);
                rest &= rest - 1;
                if (index[static_cast<std::size_t>(w)] == -1) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] =
                        next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                    frames.push_back({w, d.out_mask(w)});
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
                }
            } else {
                if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                    int id = static_cast<int>(res.comp_size.size());
                    int members = 0;
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = false;
                        res.comp[static_cast<std::size_t>(w)] = id;
                        ++members;
                        if (w == v) break;
                    }
                    res.comp_size.push_back(members);
                }
                int finished = v;
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().first;
                    low[static_cast<std::size_t>(parent)] =
                        std::min(low[static_cast<std::size_t>(parent)],
                                 low[static_cast<std::size_t>(finished)]);
                }
            }
        }
    }
    return res;
}

}  // namespace

bool is_acyclic(const Digraph& d) { return cycle_vertices(d).empty(); }

std::vector<int> cycle_vertices(const Digraph& d) {
    // No self loops, so a vertex is on a cycle iff its SCC has >= 2 members.
    SccResult r = scc(d);
    std::vector<int> out;
    for (int v = 0; v < d.size(); ++v) {
        if (r.comp_size[static_cast<std::size_t>(r.comp[static_cast<std::size_t>(v)])] >= 2) {
            out.push_back(v);
        }
    }
    return out;
}

int max_acyclic_induced(const Digraph& d, int cap) {
    const int n = d.size();
    require_cap(n, cap, "acyclic enumeration");
    if (n == 0) return 0;
    // acyc[S]: induced sub-digraph on S can be peeled sink-first.
    std::vector<std::uint8_t> acyc(1ull << n, 0);
    acyc[0] = 1;
    int best = 0;
    for (std::uint64_t s = 1; s < (1ull << n); ++s) {
        std::uint64_t rest = s;
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            if ((d.out_mask(v) & s & ~(1ull << v)) == 0 && acyc[s & ~(1ull << v)]) {
                acyc[s] = 1;
                best = std::max(best, __builtin_popcountll(s));
                break;
            }
        }
    }
    return best;
}

std::string to_dot(const Digraph& d) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (int v = 0; v < d.size(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : d.edges()) os << "  " << u << " -> " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace tsic
