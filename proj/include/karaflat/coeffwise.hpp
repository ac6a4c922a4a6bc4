#pragma once

#include <cstddef>
#include <cstdint>

#include "karaflat/poly.hpp"
#include "karaflat/series.hpp"

namespace karaflat {

// Single-coefficient convolution formulas.  Both compute the degree-m
// coefficient of g * h by walking the flattened summation one coefficient
// at a time, trading all shift/add propagation for bitwise membership
// tests.  Deliberately unoptimized; they serve as independently derived
// coefficient oracles.

// Iverson-bracket weights:
//   tau_k(m, j)     = [k & (m - j) = 0]      (does degree j shift-add into m?)
//   upsilon_k(j, t) = [k & (j - t) = j - t]  (is degree t subtracted into j?)
int iverson_tau(std::size_t k, std::size_t m, std::size_t j);
int iverson_upsilon(std::size_t k, std::size_t j, std::size_t t);

// Tally of cells visited with a nonzero weight, for comparing the two
// predicate forms against each other.
struct CoeffTally {
    std::uint64_t outer_cells = 0;  // (k, j) pairs with nonzero tau weight
    std::uint64_t inner_cells = 0;  // (j, t) pairs with nonzero upsilon weight
};

// tau/upsilon form.  Requires both prefixes to hold more than m coefficients.
Int coeff_product(const SeriesPrefix& g, const SeriesPrefix& h, std::size_t m,
                  CoeffTally* tally = nullptr);

// Sierpinski-triangle form: the same value with every weight expressed
// through T(n, k) = [k & (n - k) = 0].
Int coeff_product_sierpinski(const SeriesPrefix& g, const SeriesPrefix& h, std::size_t m,
                             CoeffTally* tally = nullptr);

}  // namespace karaflat
