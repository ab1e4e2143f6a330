#include "tsic/graph_algos.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace tsic {

UGraph lex_product(const UGraph& g1, const UGraph& g2) {
    const int n1 = g1.size(), n2 = g2.size();
    UGraph p(n1 * n2);
    for (int a1 = 0; a1 < n1; ++a1) {
        for (int b1 = 0; b1 < n2; ++b1) {
            const int u = a1 * n2 + b1;
            for (int a2 = a1; a2 < n1; ++a2) {
                for (int b2 = (a2 == a1 ? b1 + 1 : 0); b2 < n2; ++b2) {
                    const int v = a2 * n2 + b2;
                    if (g1.adjacent(a1, a2) || (a1 == a2 && g2.adjacent(b1, b2))) {
                        p.add_edge(u, v);
                    }
                }
            }
        }
    }
    return p;
}

UGraph disj_product(const UGraph& g1, const UGraph& g2) {
    const int n1 = g1.size(), n2 = g2.size();
    UGraph p(n1 * n2);
    for (int a1 = 0; a1 < n1; ++a1) {
        for (int b1 = 0; b1 < n2; ++b1) {
            const int u = a1 * n2 + b1;
            for (int a2 = a1; a2 < n1; ++a2) {
                for (int b2 = (a2 == a1 ? b1 + 1 : 0); b2 < n2; ++b2) {
                    const int v = a2 * n2 + b2;
                    if (g1.adjacent(a1, a2) || g2.adjacent(b1, b2)) p.add_edge(u, v);
                }
            }
        }
    }
    return p;
}

namespace {

int max_clique_exact64(const UGraph& g) {
    const int n = g.size();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0ull);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && g.adjacent(u, v)) adj[static_cast<std::size_t>(u)] |= 1ull << v;
        }
    }
    int best = 0;
    // Carraghan-Pardalos: candidates shrink in ascending id order.
    auto go = [&](auto&& self, std::uint64_t cand, int size) -> void {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        while (cand) {
            if (size + __builtin_popcountll(cand) <= best) return;
            int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            self(self, cand & adj[static_cast<std::size_t>(v)], size + 1);
        }
        best = std::max(best, size);
    };
    go(go, n >= 64 ? ~0ull : ((1ull << n) - 1), 0);
    return best;
}

int greedy_clique(const UGraph& g) {
    const int n = g.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
        bool fits = true;
        for (int u : clique) {
            if (!g.adjacent(u, v)) {
                fits = false;
                break;
            }
        }
        if (fits) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

// Saturation-first vertex choice shared by the greedy bound and the exact search.
// Highest saturation wins, ties go to the smallest vertex id.
int pick_dsatur_vertex(const UGraph& g, const std::vector<int>& colors, int palette) {
    const int n = g.size();
    int best = -1, best_sat = -1;
    std::vector<std::uint64_t> seen(static_cast<std::size_t>((palette + 64) / 64));
    for (int v = 0; v < n; ++v) {
        if (colors[static_cast<std::size_t>(v)] != -1) continue;
        std::fill(seen.begin(), seen.end(), 0ull);
        int sat = 0;
        g.for_each_neighbor(v, [&](int u) {
            int c = colors[static_cast<std::size_t>(u)];
            if (c >= 0 && !((seen[static_cast<std::size_t>(c >> 6)] >> (c & 63)) & 1ull)) {
                seen[static_cast<std::size_t>(c >> 6)] |= 1ull << (c & 63);
                ++sat;
            }
        });
        if (sat > best_sat) {
            best_sat = sat;
            best = v;
        }
    }
    return best;
}

ColoringResult dsatur_greedy(const UGraph& g) {
    const int n = g.size();
    ColoringResult r;
    r.colors.assign(static_cast<std::size_t>(n), -1);
    for (int step = 0; step < n; ++step) {
        int v = pick_dsatur_vertex(g, r.colors, n);
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        g.for_each_neighbor(v, [&](int u) {
            int c = r.colors[static_cast<std::size_t>(u)];
            if (c >= 0) used[static_cast<std::size_t>(c)] = true;
        });
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        r.colors[static_cast<std::size_t>(v)] = c;
        r.num_colors = std::max(r.num_colors, c + 1);
    }
    return r;
}

}  // namespace

int clique_number_lb(const UGraph& g) {
    if (g.size() == 0) return 0;
    return g.size() <= 64 ? max_clique_exact64(g) : greedy_clique(g);
}

ColoringResult chromatic_number(const UGraph& g, int vertex_cap) {
    const int n = g.size();
    require_cap(n, vertex_cap, "chromatic search");
    if (n == 0) return {0, {}};

    const int lb = clique_number_lb(g);
    ColoringResult best = dsatur_greedy(g);
    if (best.num_colors == lb) return best;

    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    // Branch and bound; a new color may only be introduced as the next unused id,
    // which breaks color symmetry without losing any chromatic value.
    auto go = [&](auto&& self, int colored, int used) -> void {
        if (used >= best.num_colors) return;
        if (colored == n) {
            best.num_colors = used;
            best.colors = colors;
            return;
        }
        int v = pick_dsatur_vertex(g, colors, best.num_colors);
        std::vector<bool> banned(static_cast<std::size_t>(used + 1), false);
        g.for_each_neighbor(v, [&](int u) {
            int c = colors[static_cast<std::size_t>(u)];
            if (c >= 0) banned[static_cast<std::size_t>(c)] = true;
        });
        // Reuse an existing color when allowed; a fresh color is worthwhile only if the
        // result could still beat the incumbent.
        const int limit = (used + 1 < best.num_colors) ? used + 1 : used;
        for (int c = 0; c < limit; ++c) {
            if (c < used && banned[static_cast<std::size_t>(c)]) continue;
            colors[static_cast<std::size_t>(v)] = c;
            self(self, colored + 1, std::max(used, c + 1));
            colors[static_cast<std::size_t>(v)] = -1;
            if (best.num_colors == lb) return;
        }
    };
    go(go, 0, 0);
    return best;
}

namespace {

// One round of neighborhood refinement shared by both graphs. Returns false when the
// class signatures of the two graphs diverge (then no isomorphism exists).
bool refine_classes(const UGraph& g1, const UGraph& g2, std::vector<int>& c1,
                    std::vector<int>& c2, int& num_classes) {
    using Sig = std::pair<int, std::vector<int>>;
    const int n = g1.size();
    auto signature = [](const UGraph& g, const std::vector<int>& c, int v) {
        Sig s{c[static_cast<std::size_t>(v)], {}};
        g.for_each_neighbor(v, [&](int u) { s.second.push_back(c[static_cast<std::size_t>(u)]); });
        std::sort(s.second.begin(), s.second.end());
        return s;
    };
    std::map<Sig, int> ids;
    std::vector<Sig> s1(static_cast<std::size_t>(n)), s2(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        s1[static_cast<std::size_t>(v)] = signature(g1, c1, v);
        s2[static_cast<std::size_t>(v)] = signature(g2, c2, v);
        ids.emplace(s1[static_cast<std::size_t>(v)], 0);
        ids.emplace(s2[static_cast<std::size_t>(v)], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> h1(static_cast<std::size_t>(next), 0), h2(static_cast<std::size_t>(next), 0);
    for (int v = 0; v < n; ++v) {
        c1[static_cast<std::size_t>(v)] = ids[s1[static_cast<std::size_t>(v)]];
        c2[static_cast<std::size_t>(v)] = ids[s2[static_cast<std::size_t>(v)]];
        ++h1[static_cast<std::size_t>(c1[static_cast<std::size_t>(v)])];
        ++h2[static_cast<std::size_t>(c2[static_cast<std::size_t>(v)])];
    }
    num_classes = next;
    return h1 == h2;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const UGraph& g1, const UGraph& g2,
                                                 int vertex_cap) {
    if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    const int n = g1.size();
    require_cap(n, vertex_cap, "isomorphism search");
    if (n == 0) return std::vector<int>{};

    std::vector<int> c1(static_cast<std::size_t>(n), 0), c2(static_cast<std::size_t>(n), 0);
    int classes = 1;
    for (int round = 0; round <= n; ++round) {
        int before = classes;
        if (!refine_classes(g1, g2, c1, c2, classes)) return std::nullopt;
        if (classes == before && round > 0) break;
    }

    std::vector<int> class_size(static_cast<std::size_t>(classes), 0);
    for (int v = 0; v < n; ++v) ++class_size[static_cast<std::size_t>(c1[static_cast<std::size_t>(v)])];

    // Map rare classes first; candidates ascend by id for reproducibility.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = c1[static_cast<std::size_t>(a)], cb = c1[static_cast<std::size_t>(b)];
        int sa = class_size[static_cast<std::size_t>(ca)], sb = class_size[static_cast<std::size_t>(cb)];
        if (sa != sb) return sa < sb;
        if (ca != cb) return ca < cb;
        return a < b;
    });

    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(classes));
    for (int v = 0; v < n; ++v) candidates[static_cast<std::size_t>(c2[static_cast<std::size_t>(v)])].push_back(v);

    std::vector<int> mapping(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);

    auto go = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int w : candidates[static_cast<std::size_t>(c1[static_cast<std::size_t>(v)])]) {
            if (used[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth; ++d) {
                int u = order[d];
                if (g1.adjacent(v, u) != g2.adjacent(w, mapping[static_cast<std::size_t>(u)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
            mapping[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!go(go, 0)) return std::nullopt;
    return mapping;
}

}  // namespace tsic
