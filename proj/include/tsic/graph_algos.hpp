#pragma once

#include <optional>
#include <vector>

#include "tsic/ugraph.hpp"

namespace tsic {

// Lexicographic product g1[g2]: (a1,b1) ~ (a2,b2) iff a1~a2 in g1, or a1==a2 and b1~b2 in g2.
// Vertex (a,b) gets id a*|g2| + b.
UGraph lex_product(const UGraph& g1, const UGraph& g2);

// Disjunctive product g1*g2: (a1,b1) ~ (a2,b2) iff a1~a2 in g1 or b1~b2 in g2.
UGraph disj_product(const UGraph& g1, const UGraph& g2);

struct ColoringResult {
    int num_colors = 0;
    std::vector<int> colors;  // proper coloring with values 0..num_colors-1
};

// Exact chromatic number by DSATUR-ordered branch and bound with a clique lower bound.
// Ties break toward the smallest vertex id, colors are tried smallest first, so the
// witness is reproducible. Throws resource_limit_error above vertex_cap.
ColoringResult chromatic_number(const UGraph& g, int vertex_cap = 4096);

// A clique size: exact for n <= 64, greedy (still a real clique) above. Always <= chi.
int clique_number_lb(const UGraph& g);

// Vertex bijection g1 -> g2 preserving adjacency both ways, or nullopt. Deterministic
// search: degree/neighborhood refinement first, then backtracking in class order.
std::optional<std::vector<int>> find_isomorphism(const UGraph& g1, const UGraph& g2,
                                                 int vertex_cap = 4096);

inline bool are_isomorphic(const UGraph& g1, const UGraph& g2, int vertex_cap = 4096) {
    return find_isomorphism(g1, g2, vertex_cap).has_value();
}

}  // namespace tsic
