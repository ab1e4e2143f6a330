#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsic/config.hpp"

namespace tsic {

// A bit string, most significant bit first. Element values are 0 or 1.
using BitVec = std::vector<std::uint8_t>;

inline std::string bits_to_string(const BitVec& b) {
    std::string s;
    s.reserve(b.size());
    for (auto v : b) s.push_back(v ? '1' : '0');
    return s;
}

inline BitVec bits_from_string(const std::string& s) {
    BitVec b;
    b.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw input_error("bit string must contain only 0/1: " + s);
        b.push_back(c == '1' ? 1 : 0);
    }
    return b;
}

// Value of a bit string as an unsigned integer, MSB first.
inline std::uint64_t bits_to_uint(const BitVec& b) {
    std::uint64_t v = 0;
    for (auto bit : b) v = (v << 1) | bit;
    return v;
}

inline BitVec bits_from_uint(std::uint64_t v, int width) {
    BitVec b(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) b[width - 1 - i] = (v >> i) & 1;
    return b;
}

}  // namespace tsic
