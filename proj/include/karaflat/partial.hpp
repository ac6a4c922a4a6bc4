#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "karaflat/poly.hpp"

namespace karaflat {

// Indices m of the indirect summands that can contribute to the output
// coefficient of degree d.  Membership is decided by
//   ((d - m) mod 2^(floor(log2 m) + 1)) < 2^(floor(log2 m)).
struct ContributionSet {
    std::size_t d = 0;
    std::vector<std::size_t> members;
};

bool in_contribution_set(std::size_t m, std::size_t d);
ContributionSet contribution_set(std::size_t d);

// Direct block: (1 + x + ... + x^(n-1)) * (A termwise B), with the n kept
// products counted and the geometric factor applied as n shift/adds.
Polynomial part_direct(const Polynomial& a, const Polynomial& b, std::size_t n,
                       MulCounter& muls);

// Recursive multiplier plugged into the indirect summands.  The size_t
// argument is the structural (padded) length of the compressed operands.
using Multiplier = std::function<Polynomial(const Polynomial&, const Polynomial&,
                                            std::size_t, MulCounter&)>;

// Summand m of the indirect block, leading minus sign included.  With
// k = floor(log2 m) it masks (1 - x^(2^k)) A and (1 - x^(2^k)) B down to
// degrees m, m + 2^(k+1), m + 2*2^(k+1), ... < n, compresses both onto that
// grid, multiplies the compressed pair via `recurse`, and restores
//   -(1 + x + ... + x^(2^k - 1)) / x^m  times the expanded product.
Polynomial part_indirect_summand(const Polynomial& a, const Polynomial& b, std::size_t n,
                                 std::size_t m, const Multiplier& recurse, MulCounter& muls);

// part_direct plus all n-1 indirect summands, recursing into itself; equals
// the schoolbook product with exactly 3^(log2 n) counted multiplications.
Polynomial multiply_partial(const Polynomial& a, const Polynomial& b, MulCounter& muls);

}  // namespace karaflat
