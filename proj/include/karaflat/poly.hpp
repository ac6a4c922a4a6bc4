#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "karaflat/errors.hpp"

namespace karaflat {

// Coefficient ring: arbitrary-precision signed integers.  Intermediate
// values in the flattened formulas grow beyond machine words for large
// random inputs, and all verification is done by exact equality.
using Int = boost::multiprecision::cpp_int;

// Counts elementary coefficient-by-coefficient multiplications.  Owned by
// the caller of each top-level operation; nothing in the library shares
// counters behind the caller's back.
struct MulCounter {
    std::uint64_t count = 0;

    void add(std::uint64_t n = 1) { count += n; }
};

// Dense integer polynomial in one indeterminate, stored in ascending
// degree.  Always kept canonical: no trailing zero coefficient, and the
// zero polynomial is the empty sequence.  degree() reports -1 for the zero
// polynomial; that sentinel must never reach a log2.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<long long> coeffs) {
        c_.reserve(coeffs.size());
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static Polynomial monomial(Int coeff, std::size_t degree);

    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Coefficient of x^i, zero beyond the stored length.
    const Int& coeff(std::size_t i) const;

    const std::vector<Int>& coeffs() const { return c_; }

    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

enum class Sign { plus, minus };

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);

// Multiplication by x^k.
Polynomial shift(const Polynomial& p, std::size_t k);

// Coefficientwise (Hadamard) product.  One elementary multiplication is
// counted per position where both stored coefficients are nonzero.
Polynomial termwise(const Polynomial& p, const Polynomial& q, MulCounter& muls);

// Cauchy product by the double loop; counts (deg p + 1) * (deg q + 1)
// elementary multiplications for nonzero operands.  The oracle every other
// multiplication routine is checked against.
Polynomial schoolbook_mul(const Polynomial& p, const Polynomial& q, MulCounter& muls);

// p * (1 +/- x^(2^level)), as shifts and additions only.
Polynomial mul_binomial(const Polynomial& p, Sign sign, unsigned level);

// Exact quotient p / (1 +/- x^(2^level)); throws NonExactDivision if a
// remainder appears.
Polynomial div_binomial(const Polynomial& p, Sign sign, unsigned level);

// p * (1 + x + ... + x^(count-1)), as a running-sum sweep.
Polynomial mul_geometric(const Polynomial& p, std::size_t count);

// Maps the coefficient at degree offset + i*step to degree i.  Every
// nonzero coefficient must lie on that grid, else StrideViolation.
Polynomial compress_stride(const Polynomial& p, std::size_t step, std::size_t offset);

// Inverse of compress_stride: coefficient i goes to degree offset + i*step.
Polynomial expand_stride(const Polynomial& p, std::size_t step, std::size_t offset);

// A polynomial used under the termwise product to keep, drop or flip
// selected coefficients.  Coefficients are restricted to {-1, 0, +1}.
// Applying a mask is bookkeeping, never a counted multiplication.
class Mask {
public:
    explicit Mask(Polynomial p);

    const Polynomial& poly() const { return p_; }

    // Termwise product with the mask; uncounted.
    Polynomial apply(const Polynomial& p) const;

private:
    Polynomial p_;
};

// (1 - x^n) / (1 - x^step) * x^offset: ones exactly at degrees
// offset, offset + step, offset + 2*step, ... strictly below n.
// n and step must be powers of two with step | n and offset < n.
Mask geometric_mask(std::size_t n, std::size_t step, std::size_t offset);

// Termwise product of p and q restricted to the support of the mask, with
// the mask's sign folded in.  The mask is applied before multiplying, so
// dropped positions are never computed; one elementary multiplication is
// counted per position the mask keeps.
Polynomial masked_termwise(const Mask& mask, const Polynomial& p, const Polynomial& q,
                           MulCounter& muls);

enum class FactorState : unsigned char { absent, plus, minus };

// Structured product of factors (1 +/- x^(2^level)), at most one factor per
// level.  Expanding any such product gives a polynomial with coefficients
// in {-1, 0, +1}, exactly 2^(present factors) of them nonzero, and degree
// equal to the sum of 2^level over present factors.
class BinomialProduct {
public:
    explicit BinomialProduct(unsigned order) : states_(order, FactorState::absent) {}

    unsigned order() const { return static_cast<unsigned>(states_.size()); }

    FactorState factor(unsigned level) const { return states_.at(level); }
    BinomialProduct& set_factor(unsigned level, FactorState s) {
        states_.at(level) = s;
        return *this;
    }

    unsigned present_count() const;
    unsigned minus_count() const;

    Polynomial expand() const;

    // (degree, sign) of the leading term of the expansion, computed from
    // the factor set alone.
    std::pair<std::size_t, int> leading_term() const;

private:
    std::vector<FactorState> states_;
};

// Text format: `#`-prefixed comment lines, remaining tokens are decimal
// integers separated by any whitespace, ascending degree.  Empty input is
// the zero polynomial.
Polynomial parse_poly(std::string_view text);

// Raw token list of the same format, without canonical trimming; used where
// the provided prefix length matters.
std::vector<Int> parse_coeff_tokens(std::string_view text);

// One coefficient per line.
std::string serialize_poly(const Polynomial& p);

namespace detail {

// In-place p *= (1 +/- x^(2^level)); grows the buffer, no trimming.
void mul_binomial_inplace(std::vector<Int>& c, Sign sign, unsigned level);

// In-place p /= (1 +/- x^(2^level)); shrinks the buffer, no trimming.
// Throws NonExactDivision on any remainder.
void div_binomial_inplace(std::vector<Int>& c, Sign sign, unsigned level);

}  // namespace detail

}  // namespace karaflat
