#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "karaflat/poly.hpp"

namespace karaflat {

// Iterative Karatsuba: the ternary recursion replaced by one summation of n
// masked termwise products.  For n = 2^d the product is
//
//   A * B = sum over k = 0..n-1 of
//           fbar_k * ( sigma_k * fbar_k * x^k (.) fdot_k A (.) fdot_k B )
//
// where (.) is the termwise product,
//   fdot_k = prod over set bits j of k   of (1 - x^(2^j))   (subtracting factor)
//   fbar_k = prod over unset bits j < d  of (1 + x^(2^j))   (termwise mask)
// and sigma_k is -1 when the binary weight of k is odd, +1 otherwise.
// Term k keeps exactly 2^(d - popcount k) coefficient products; the total
// over all terms is 3^d, the same elementary multiplications the recursive
// algorithm performs.

// The structured description of one summation term.
struct FlatTermPlan {
    std::size_t k = 0;
    BinomialProduct mask_factors;      // fbar_k: plus factors at unset bits
    BinomialProduct subtract_factors;  // fdot_k: minus factors at set bits
    int sign = 1;                      // sigma_k
    std::size_t lt_degree = 0;         // degree of the leading term of fdot_k (= k)
};

FlatTermPlan plan_term(std::size_t k, unsigned order);

// Value of one summand.  The mask sigma_k * x^k * fbar_k is applied before
// the coefficient pairs are multiplied, so only kept products are computed
// and counted; the trailing fbar_k factor is applied as shift/adds.
Polynomial flat_term_value(const FlatTermPlan& plan, const Polynomial& a,
                           const Polynomial& b, MulCounter& muls);

using FlatTermObserver = std::function<void(const FlatTermPlan& plan,
                                            const Polynomial& term, std::uint64_t kept)>;

Polynomial multiply_flat(const Polynomial& a, const Polynomial& b, MulCounter& muls,
                         const FlatTermObserver& observer = {});

// One record per loop pass of multiply_gray (pass 0 is the initial
// all-mask state).  Snapshots are taken after the factor updates and the
// term evaluation of that pass.
struct GrayIteration {
    std::size_t k = 0;                      // loop index
    std::optional<unsigned> flipped_level;  // lowest set bit of k; empty for pass 0
    std::size_t gray = 0;                   // Gray code of k
    int sign = 1;                           // sigma_gray
    unsigned factor_muls = 0;               // factor-set multiplications this pass
    unsigned factor_divs = 0;               // factor-set divisions this pass
    BinomialProduct mask_factors;           // fbar state
    BinomialProduct subtract_factors;       // fdot state
    Polynomial mask;                        // expansion of fbar
    Polynomial sub_a;                       // running fdot * A
    Polynomial sub_b;                       // running fdot * B
    Polynomial term;                        // summand added this pass
    std::uint64_t kept = 0;                 // counted products this pass
};

using GrayObserver = std::function<void(const GrayIteration&)>;

// Same summation, enumerated in Gray-code order so that consecutive terms
// differ in a single factor: each pass multiplies one factor into one of
// fdot/fbar and exactly divides the complementary factor out of the other.
// The products fdot*A and fdot*B and the mask expansion are carried along
// and updated incrementally instead of being rebuilt.
Polynomial multiply_gray(const Polynomial& a, const Polynomial& b, MulCounter& muls,
                         const GrayObserver& observer = {});

}  // namespace karaflat
