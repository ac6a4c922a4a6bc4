#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "karaflat/poly.hpp"

namespace karaflat {

// sigma_k: -1 when the binary weight of k is odd, +1 otherwise.
int sigma(std::size_t k);

// Pascal's triangle mod 2: T(n, k) = [k & (n - k) = 0], zero for k > n.
int sierpinski_T(std::size_t n, std::size_t k);

// One reflected-binary-code step: given the Gray code g of k-1, returns
// (Gray code of k, index of the flipped bit).
std::pair<std::size_t, unsigned> gray_step(std::size_t g, std::size_t k);

// Exact value num / 2^exp; canonical form has num odd or exp = 0.
class DyadicRational {
public:
    DyadicRational() = default;
    DyadicRational(Int num, unsigned exp);

    const Int& num() const { return num_; }
    unsigned exp() const { return exp_; }

    friend bool operator==(const DyadicRational&, const DyadicRational&) = default;

private:
    Int num_;
    unsigned exp_ = 0;
};

// Takagi function at a dyadic rational in [0, 1]:
//   tau(x) = sum over i >= 0 of s(2^i x) / 2^i,
// with s the distance to the nearest integer.  All terms past the exponent
// of x vanish, so the value is an exact dyadic rational.
DyadicRational takagi_dyadic(const DyadicRational& x);

// Cumulated differences between the counts of ones and zeros in the binary
// expansions of 1..d; the value at 0 is 0 by convention.
std::int64_t a268289_count(std::size_t d);

// First `count` terms of the same sequence.
std::vector<std::int64_t> a268289_count_prefix(std::size_t count);

// The same value through the Takagi identity
//   d - 2^k tau((d + 1) / 2^k - 1),  k = floor(log2 d);
// throws NonIntegerResult if the scaled Takagi value is not an integer.
std::int64_t a268289_takagi(std::size_t d);

// Terms 0 .. 2^upto_s - 1 built from u_0 = 0 by doubling blocks with
//   u_{n + 2^s} = u_n + (n + 1)(floor(log2 n) - s + 2) + 2^s
//                 - 2^(floor(log2 n) + 1),
// using floor(log2 0) = -1 inside the rule.
std::vector<std::int64_t> a268289_recurrence(unsigned upto_s);

}  // namespace karaflat
