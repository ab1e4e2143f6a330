#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tsic/config.hpp"

namespace tsic {

// Undirected simple graph with dynamic bitset adjacency rows.
// Confusion graphs materialize up to 2^14 vertices, so rows are word vectors.
class UGraph {
public:
    UGraph() : n_(0), words_(0) {}
    explicit UGraph(int n)
        : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * words_, 0ull) {
        if (n < 0) throw input_error("graph order must be nonnegative");
    }

    int size() const { return n_; }
    int words_per_row() const { return words_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw input_error("self loop rejected: " + std::to_string(u));
        set_bit(u, v);
        set_bit(v, u);
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (row_ptr(u)[v >> 6] >> (v & 63)) & 1ull;
    }

    const std::uint64_t* row_ptr(int v) const {
        return rows_.data() + static_cast<std::size_t>(v) * words_;
    }

    int degree(int v) const {
        check_vertex(v);
        const std::uint64_t* r = row_ptr(v);
        int c = 0;
        for (int w = 0; w < words_; ++w) c += __builtin_popcountll(r[w]);
        return c;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u) {
            const std::uint64_t* r = row_ptr(u);
            for (int w = 0; w < words_; ++w) {
                std::uint64_t word = r[w];
                while (word) {
                    int v = (w << 6) + __builtin_ctzll(word);
                    if (v > u) es.emplace_back(u, v);
                    word &= word - 1;
                }
            }
        }
        return es;
    }

    template <class F>
    void for_each_neighbor(int u, F&& f) const {
        const std::uint64_t* r = row_ptr(u);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t word = r[w];
            while (word) {
                f((w << 6) + __builtin_ctzll(word));
                word &= word - 1;
            }
        }
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw input_error("graph vertex out of range: " + std::to_string(v));
    }
    void set_bit(int u, int v) {
        rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> rows_;
};

std::string to_dot(const UGraph& g);

}  // namespace tsic
