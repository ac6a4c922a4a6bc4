#include "karaflat/partial.hpp"

#include <bit>
#include <stdexcept>

namespace karaflat {

namespace {

// Exact division by x^m; the m low coefficients must be zero.
Polynomial exact_shift_down(const Polynomial& p, std::size_t m) {
    if (p.is_zero()) return {};
    for (std::size_t i = 0; i < m && i < p.size(); ++i) {
        if (p.coeff(i) != 0) {
            throw NonExactDivision("low-order residue in division by x^m");
        }
    }
    if (p.size() <= m) return {};
    std::vector<Int> c(p.coeffs().begin() + static_cast<std::ptrdiff_t>(m),
                       p.coeffs().end());
    return Polynomial(std::move(c));
}

// The recursion on fixed-length padded buffers.  Level by level this is
// part_direct plus the n-1 indirect summands with the recursion plugged
// into itself, with the masking, compression and prefactor expansion fused
// into direct index arithmetic on the dense buffers.
std::vector<Int> multiply_partial_rec(const std::vector<Int>& a, const std::vector<Int>& b,
                                      MulCounter& muls) {
    const std::size_t n = a.size();
    std::vector<Int> out(2 * n - 1);

    // Direct block: n kept products swept by the length-n ones window.
    std::vector<Int> kept(n);
    for (std::size_t i = 0; i < n; ++i) {
        kept[i] = a[i] * b[i];
        muls.add();
    }
    Int window = 0;
    for (std::size_t w = 0; w < 2 * n - 1; ++w) {
        if (w < n) window += kept[w];
        if (w >= n) window -= kept[w - n];
        out[w] = window;
    }

    std::vector<Int> fa, fb;  // (1 - x^(2^k)) times a and b, per level
    for (std::size_t m = 1; m < n; ++m) {
        const unsigned k = std::bit_width(m) - 1;
        const std::size_t half = std::size_t(1) << k;
        const std::size_t step = half * 2;
        if (m == half) {  // first summand of the level: refresh the factors
            fa.assign(n, Int());
            fb.assign(n, Int());
            for (std::size_t j = 0; j < n; ++j) {
                fa[j] = j >= half ? a[j] - a[j - half] : a[j];
                fb[j] = j >= half ? b[j] - b[j - half] : b[j];
            }
        }
        const std::size_t inner = n / step;
        std::vector<Int> ca(inner), cb(inner);
        for (std::size_t i = 0; i < inner; ++i) {
            ca[i] = fa[m + i * step];
            cb[i] = fb[m + i * step];
        }
        const std::vector<Int> prod = multiply_partial_rec(ca, cb, muls);
        // Subtract (1 + ... + x^(2^k - 1)) x^m prod(x^step).
        for (std::size_t i = 0; i < prod.size(); ++i) {
            if (prod[i].is_zero()) continue;
            const std::size_t base = m + i * step;
            for (std::size_t t = 0; t < half; ++t) out[base + t] -= prod[i];
        }
    }
    return out;
}

}  // namespace

bool in_contribution_set(std::size_t m, std::size_t d) {
    if (m < 1 || m > d) return false;
    const unsigned k = std::bit_width(m) - 1;
    return ((d - m) % (std::size_t(1) << (k + 1))) < (std::size_t(1) << k);
}

ContributionSet contribution_set(std::size_t d) {
    ContributionSet s;
    s.d = d;
    for (std::size_t m = 1; m <= d; ++m) {
        if (in_contribution_set(m, d)) s.members.push_back(m);
    }
    return s;
}

Polynomial part_direct(const Polynomial& a, const Polynomial& b, std::size_t n,
                       MulCounter& muls) {
    const Polynomial kept = masked_termwise(geometric_mask(n, 1, 0), a, b, muls);
    return mul_geometric(kept, n);
}

Polynomial part_indirect_summand(const Polynomial& a, const Polynomial& b, std::size_t n,
                                 std::size_t m, const Multiplier& recurse,
                                 MulCounter& muls) {
    if (m < 1 || m >= n) throw std::invalid_argument("summand index out of range");
    const unsigned k = std::bit_width(m) - 1;
    const std::size_t step = std::size_t(1) << (k + 1);

    const Mask sel = geometric_mask(n, step, m);
    const Polynomial fa = sel.apply(mul_binomial(a, Sign::minus, k));
    const Polynomial fb = sel.apply(mul_binomial(b, Sign::minus, k));

    // Variable substitution before the recursive call: both masked factors
    // live on the grid m + i*step and compress to length n/step.
    const Polynomial ca = compress_stride(fa, step, m);
    const Polynomial cb = compress_stride(fb, step, m);
    const Polynomial prod = recurse(ca, cb, n / step, muls);

    const Polynomial full = shift(expand_stride(prod, step, 0), 2 * m);
    const Polynomial reduced = exact_shift_down(full, m);
    return -mul_geometric(reduced, std::size_t(1) << k);
}

Polynomial multiply_partial(const Polynomial& a, const Polynomial& b, MulCounter& muls) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t n = std::bit_ceil(std::max(a.size(), b.size()));
    std::vector<Int> pa = a.coeffs(), pb = b.coeffs();
    pa.resize(n);
    pb.resize(n);
    return Polynomial(multiply_partial_rec(pa, pb, muls));
}

}  // namespace karaflat
