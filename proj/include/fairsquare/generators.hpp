#pragma once

#include "fairsquare/instance.hpp"

namespace fairsq {

// Deterministic generator for randomized corpora (splitmix64 core).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);
    long range(long lo, long hi);  // inclusive
};

// Random piecewise-uniform measure: up to `max_cells` disjoint grid-aligned
// cells inside `cake`, sampled within `window`, with positive total value.
Measure random_measure(Rng& rng, const Region& cake, const Rect& window, int max_cells = 4);

// Staircase with exactly k corners on a half-integer grid.
Staircase random_staircase(Rng& rng, int k);

// Valid partner matrix: n rows of m non-negative integers summing to >= n.
std::vector<std::vector<long>> random_partner_matrix(Rng& rng, int n, int m);

std::vector<PlayerSpec> random_players(Rng& rng, const Region& cake, const Rect& window, int n,
                                       int honest_count, int max_cells = 4);

}  // namespace fairsq
