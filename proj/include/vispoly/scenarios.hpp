#pragma once

#include "vispoly/polygon.hpp"

#include <cstdint>

namespace vispoly {

struct CombScenario {
    PolygonWithHoles polygon;
    Point v0;  // designated query vertex on the left wall
};

// Worst-case room for triangular expansion: a 4k+2 by 4k rectangle with k
// unit-diameter diamond holes on the vertical midline and k collinear
// subdivision vertices on each side wall. Deterministic in k.
CombScenario gen_comb(int k);

// Seeded random simple polygon: n distinct points on an integer grid, a
// random tour, then repeated 2-opt uncrossing until the boundary is simple.
// Each uncross strictly shortens the tour, so the process terminates.
SimplePolygon gen_random_simple(int n, std::uint64_t seed);

// Random polygon with hole_count small random holes placed inside,
// rejection-sampled against overlap. Throws std::invalid_argument if no
// placement is found within the attempt budget.
PolygonWithHoles gen_random_with_holes(int n_outer, int hole_count, std::uint64_t seed);

// Deterministic seeded stream used by the generators; exposed for callers
// that need reproducible auxiliary randomness (query sampling, tests).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }
};

}  // namespace vispoly
