#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tsic/config.hpp"

namespace tsic {

// Simple digraph on vertices 0..n-1, no self loops, adjacency kept as 64-bit row masks.
// Side-information digraphs and interaction digraphs are small; 64 vertices is plenty.
class Digraph {
public:
    Digraph() : n_(0) {}
    explicit Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n), 0ull) {
        if (n < 0 || n > 64) throw input_error("digraph order must be in [0, 64]");
    }

    int size() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw input_error("self loop rejected: " + std::to_string(u));
        out_[static_cast<std::size_t>(u)] |= 1ull << v;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (out_[static_cast<std::size_t>(u)] >> v) & 1ull;
    }

    std::uint64_t out_mask(int u) const {
        check_vertex(u);
        return out_[static_cast<std::size_t>(u)];
    }

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (auto row : out_) c += static_cast<std::size_t>(__builtin_popcountll(row));
        return c;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u) {
            std::uint64_t row = out_[static_cast<std::size_t>(u)];
            while (row) {
                int v = __builtin_ctzll(row);
                es.emplace_back(u, v);
                row &= row - 1;
            }
        }
        return es;
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw input_error("digraph vertex out of range: " + std::to_string(v));
    }

    int n_;
    std::vector<std::uint64_t> out_;
};

// Sub-digraph induced by vs, relabeled to 0..|vs|-1 in the order given.
// Duplicate or out-of-range entries are input errors.
Digraph induced_subdigraph(const Digraph& d, std::span<const int> vs);

bool is_acyclic(const Digraph& d);

// Vertices lying on at least one directed cycle, ascending.
std::vector<int> cycle_vertices(const Digraph& d);

// Order of a largest acyclic induced sub-digraph, by subset enumeration. n <= cap.
int max_acyclic_induced(const Digraph& d, int cap = 20);

std::string to_dot(const Digraph& d);

}  // namespace tsic
