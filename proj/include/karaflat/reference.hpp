#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "karaflat/poly.hpp"

namespace karaflat {

// Radix-3 label of a recursion-tree node, root-to-node digit order.
// Branches 0 and 1 take the even/odd halves, branch 2 the difference
// product.  A path with no digit 2 is "direct"; reading its digits in
// reverse as binary gives the index of the coefficient pair multiplied at
// the leaf it leads to.
class PathLabel {
public:
    PathLabel() = default;
    explicit PathLabel(std::vector<std::uint8_t> digits);

    void push(std::uint8_t digit);
    void pop();

    const std::vector<std::uint8_t>& digits() const { return digits_; }
    std::size_t length() const { return digits_.size(); }

    bool is_direct() const;

    // r = (d_m d_{m-1} ... d_1) read as binary; throws NotDirectPath if any
    // digit is 2.
    std::size_t direct_index() const;

    friend bool operator==(const PathLabel&, const PathLabel&) = default;

private:
    std::vector<std::uint8_t> digits_;
};

// Even-degree and odd-degree parts, both compressed by stride 2.
std::pair<Polynomial, Polynomial> split_interleaved(const Polynomial& p);

// Karatsuba with the low/high halves split.  Inputs are zero-padded to a
// common power-of-two length n; exactly 3^(log2 n) elementary
// multiplications are performed.
Polynomial karatsuba_traditional(const Polynomial& p, const Polynomial& q, MulCounter& muls);

// Called at every leaf of the interleaved recursion with the leaf's path
// and the two coefficients about to be multiplied.
using LeafObserver =
    std::function<void(const PathLabel& path, const Int& a, const Int& b)>;

// Karatsuba with the even/odd split; the splitting polynomial at depth t is
// x^(2^t).  Same padding and multiplication count as the traditional form.
Polynomial karatsuba_interleaved(const Polynomial& p, const Polynomial& q, MulCounter& muls,
                                 const LeafObserver& observer = {});

// Contribution of the direct leaf at `path` to the full product of A and B
// (both taken at padded length 2^m, m = path length):
//   (1 + x + ... + x^(2^m - 1)) * a_r * b_r * x^r.
Polynomial direct_leaf_contribution(const PathLabel& path, const Polynomial& a,
                                    const Polynomial& b);

}  // namespace karaflat
