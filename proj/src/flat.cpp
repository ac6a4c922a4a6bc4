#include "karaflat/flat.hpp"

#include <bit>
#include <stdexcept>

#include "karaflat/seqs.hpp"

namespace karaflat {

namespace {

// Applies the subtracting factors, keeping only the first max_len
// coefficients; the mask never reads past that window.
Polynomial apply_subtract_factors(const Polynomial& p, std::size_t bits,
                                  std::size_t max_len) {
    std::vector<Int> c = p.coeffs();
    for (unsigned level = 0; bits >> level; ++level) {
        if ((bits >> level) & 1) {
            detail::mul_binomial_inplace(c, Sign::minus, level);
            if (c.size() > max_len) c.resize(max_len);
        }
    }
    return Polynomial(std::move(c));
}

const Int& at_or_zero(const std::vector<Int>& c, std::size_t i) {
    static const Int kZero = 0;
    return i < c.size() ? c[i] : kZero;
}

// Termwise product under the mask sign * x^offset * fbar: fbar's support,
// shifted by offset, selects the kept positions; one elementary
// multiplication is counted per kept position.
std::vector<Int> kept_products(const std::vector<Int>& fbar, std::size_t offset, int sign,
                               const std::vector<Int>& ua, const std::vector<Int>& ub,
                               MulCounter& muls) {
    std::vector<Int> w(offset + fbar.size());
    for (std::size_t e = 0; e < fbar.size(); ++e) {
        if (fbar[e].is_zero()) continue;
        const std::size_t pos = offset + e;
        w[pos] = at_or_zero(ua, pos) * at_or_zero(ub, pos);
        if (sign < 0) w[pos] = -w[pos];
        muls.add();
    }
    return w;
}

void apply_mask_factors_inplace(std::vector<Int>& c, std::size_t subtract_bits,
                                unsigned order) {
    for (unsigned level = 0; level < order; ++level) {
        if (!((subtract_bits >> level) & 1)) {
            detail::mul_binomial_inplace(c, Sign::plus, level);
        }
    }
}

void accumulate(std::vector<Int>& acc, const std::vector<Int>& term) {
    if (term.size() > acc.size()) acc.resize(term.size());
    for (std::size_t i = 0; i < term.size(); ++i) {
        if (!term[i].is_zero()) acc[i] += term[i];
    }
}

}  // namespace

FlatTermPlan plan_term(std::size_t k, unsigned order) {
    if (order < 64 && k >= (std::size_t(1) << order)) {
        throw std::invalid_argument("term index k must be below 2^order");
    }
    FlatTermPlan plan{k, BinomialProduct(order), BinomialProduct(order),
                      std::popcount(k) % 2 == 0 ? 1 : -1, k};
    for (unsigned level = 0; level < order; ++level) {
        if ((k >> level) & 1) plan.subtract_factors.set_factor(level, FactorState::minus);
        else plan.mask_factors.set_factor(level, FactorState::plus);
    }
    return plan;
}

Polynomial flat_term_value(const FlatTermPlan& plan, const Polynomial& a,
                           const Polynomial& b, MulCounter& muls) {
    const Polynomial fbar = plan.mask_factors.expand();
    const std::size_t window = plan.k + fbar.size();
    const Polynomial ua = apply_subtract_factors(a, plan.k, window);
    const Polynomial ub = apply_subtract_factors(b, plan.k, window);
    std::vector<Int> w =
        kept_products(fbar.coeffs(), plan.k, plan.sign, ua.coeffs(), ub.coeffs(), muls);
    apply_mask_factors_inplace(w, plan.k, plan.mask_factors.order());
    return Polynomial(std::move(w));
}

Polynomial multiply_flat(const Polynomial& a, const Polynomial& b, MulCounter& muls,
                         const FlatTermObserver& observer) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t n = std::bit_ceil(std::max(a.size(), b.size()));
    const unsigned d = static_cast<unsigned>(std::bit_width(n) - 1);
    std::vector<Int> acc;
    for (std::size_t k = 0; k < n; ++k) {
        const FlatTermPlan plan = plan_term(k, d);
        const std::uint64_t before = muls.count;
        const Polynomial term = flat_term_value(plan, a, b, muls);
        if (observer) observer(plan, term, muls.count - before);
        accumulate(acc, term.coeffs());
    }
    return Polynomial(std::move(acc));
}

Polynomial multiply_gray(const Polynomial& a, const Polynomial& b, MulCounter& muls,
                         const GrayObserver& observer) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t n = std::bit_ceil(std::max(a.size(), b.size()));
    const unsigned d = static_cast<unsigned>(std::bit_width(n) - 1);

    BinomialProduct mask_factors(d), subtract_factors(d);
    for (unsigned level = 0; level < d; ++level) {
        mask_factors.set_factor(level, FactorState::plus);
    }
    std::vector<Int> mask_vec = mask_factors.expand().coeffs();  // all ones, length n
    std::vector<Int> sub_a = a.coeffs();
    std::vector<Int> sub_b = b.coeffs();
    std::size_t gray = 0;

    std::vector<Int> acc;
    const auto add_term = [&](std::size_t k, std::optional<unsigned> flipped,
                              unsigned factor_muls, unsigned factor_divs) {
        const int sign = std::popcount(gray) % 2 == 0 ? 1 : -1;
        const std::uint64_t before = muls.count;
        std::vector<Int> term = kept_products(mask_vec, gray, sign, sub_a, sub_b, muls);
        const std::uint64_t kept = muls.count - before;
        apply_mask_factors_inplace(term, gray, d);
        accumulate(acc, term);
        if (observer) {
            observer(GrayIteration{k, flipped, gray, sign, factor_muls, factor_divs,
                                   mask_factors, subtract_factors,
                                   Polynomial(std::vector<Int>(mask_vec)),
                                   Polynomial(std::vector<Int>(sub_a)),
                                   Polynomial(std::vector<Int>(sub_b)),
                                   Polynomial(std::move(term)), kept});
        }
    };

    add_term(0, std::nullopt, 0, 0);

    for (std::size_t k = 1; k < n; ++k) {
        const auto [next_gray, j] = gray_step(gray, k);
        unsigned factor_muls = 0;
        unsigned factor_divs = 0;
        if (((gray >> j) & 1) == 0) {
            // Enable the subtracting factor at level j, retire the mask one.
            subtract_factors.set_factor(j, FactorState::minus);
            detail::mul_binomial_inplace(sub_a, Sign::minus, j);
            detail::mul_binomial_inplace(sub_b, Sign::minus, j);
            ++factor_muls;
            mask_factors.set_factor(j, FactorState::absent);
            detail::div_binomial_inplace(mask_vec, Sign::plus, j);
            ++factor_divs;
        } else {
            subtract_factors.set_factor(j, FactorState::absent);
            detail::div_binomial_inplace(sub_a, Sign::minus, j);
            detail::div_binomial_inplace(sub_b, Sign::minus, j);
            ++factor_divs;
            mask_factors.set_factor(j, FactorState::plus);
            detail::mul_binomial_inplace(mask_vec, Sign::plus, j);
            ++factor_muls;
        }
        gray = next_gray;
        add_term(k, j, factor_muls, factor_divs);
    }
    return Polynomial(std::move(acc));
}

}  // namespace karaflat
