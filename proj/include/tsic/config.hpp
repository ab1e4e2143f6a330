#pragma once

#include <stdexcept>
#include <string>

namespace tsic {

// Input that fails structural validation (bad ids, overlapping parts, malformed JSON, ...).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Operation called on an instance that does not meet its stated requirements
// (wrong case label, not fully participated, ...).
struct precondition_error : input_error {
    explicit precondition_error(const std::string& what) : input_error(what) {}
};

// A configured resource cap would be exceeded. Caps are errors, never approximations.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Hard limits for the exhaustive engines. All checks compare against these values and
// refuse to run past them; results below the caps are exact.
struct Caps {
    int materialize_mt = 14;    // adjacency materialization: m*t <= this
    int exact_mt = 12;          // exact two-sender search: m*t <= this
    int predicate_mt = 24;      // pairwise predicate sweeps: m*t <= this
    int chromatic_vertices = 4096;
    int iso_vertices = 4096;
    int acyclic_n = 20;         // max acyclic induced sub-digraph enumeration
};

struct RunConfig {
    Caps caps;
    int threads = 1;
    unsigned long long seed = 0;
    std::string format = "markdown";  // markdown | json | dot (per command)
};

inline void require_cap(long long value, long long cap, const std::string& name) {
    if (value > cap) {
        throw resource_limit_error(name + " cap exceeded: " + std::to_string(value) +
                                   " > " + std::to_string(cap));
    }
}

}  // namespace tsic
