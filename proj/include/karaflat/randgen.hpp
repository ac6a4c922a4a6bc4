#pragma once

#include <cstdint>
#include <random>

#include "karaflat/poly.hpp"

namespace karaflat {

// Engine for one (size, trial) cell, derived from the run seed so every
// algorithm in a cell sees the same inputs and runs are reproducible
// within a build.
std::mt19937_64 rng_for_cell(std::uint64_t seed, std::uint64_t n, std::uint64_t trial);

// Random polynomial with `length` coefficients in [-coeff_bound, coeff_bound]
// and a nonzero leading coefficient, so the canonical degree is length - 1.
Polynomial random_polynomial(std::mt19937_64& rng, std::size_t length,
                             std::int64_t coeff_bound);

}  // namespace karaflat
