#include "karaflat/series.hpp"

#include <bit>
#include <stdexcept>

namespace karaflat {

namespace {

// Truncated in-place p *= (1 - x^(2^level)) on a fixed-length prefix.
// Binomial factors only move coefficients upward, so truncating each step
// loses nothing below the truncation order.
void trunc_mul_minus(std::vector<Int>& c, unsigned level) {
    const std::size_t s = std::size_t(1) << level;
    for (std::size_t i = c.size(); i-- > s;) c[i] -= c[i - s];
}

void trunc_mul_plus(std::vector<Int>& c, unsigned level) {
    const std::size_t s = std::size_t(1) << level;
    for (std::size_t i = c.size(); i-- > s;) c[i] += c[i - s];
}

void require_order(const SeriesPrefix& p, std::size_t n) {
    if (p.order() < n) {
        throw std::invalid_argument("series prefix holds fewer coefficients than the "
                                    "requested order");
    }
}

std::vector<Int> conv_partial_rec(const std::vector<Int>& f, const std::vector<Int>& g,
                                  const SeriesSummandObserver& observer, bool top) {
    const std::size_t n = f.size();
    std::vector<Int> out(n);
    Int running = 0;
    for (std::size_t i = 0; i < n; ++i) {
        running += f[i] * g[i];
        out[i] = running;
    }
    for (std::size_t m = 1; m < n; ++m) {
        const unsigned k = std::bit_width(m) - 1;
        const std::size_t step = std::size_t(1) << (k + 1);
        const std::size_t inner = (n - m + step - 1) / step;

        std::vector<Int> fa = f, gb = g;
        trunc_mul_minus(fa, k);
        trunc_mul_minus(gb, k);
        std::vector<Int> ca(inner), cb(inner);
        for (std::size_t i = 0; i < inner; ++i) {
            ca[i] = fa[m + i * step];
            cb[i] = gb[m + i * step];
        }
        const std::vector<Int> prod = conv_partial_rec(ca, cb, {}, false);

        // Subtract (1 + x + ... + x^(2^k - 1)) x^m prod(x^step), truncated.
        std::vector<Int> summand(top && observer ? n : 0);
        for (std::size_t i = 0; i < inner; ++i) {
            const std::size_t base = m + i * step;
            for (std::size_t t = 0; t < (std::size_t(1) << k) && base + t < n; ++t) {
                out[base + t] -= prod[i];
                if (!summand.empty()) summand[base + t] -= prod[i];
            }
        }
        if (top && observer) observer(m, Polynomial(std::move(summand)));
    }
    return out;
}

}  // namespace

SeriesPrefix SeriesPrefix::from_polynomial(const Polynomial& p, std::size_t n) {
    std::vector<Int> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = p.coeff(i);
    return SeriesPrefix(std::move(c));
}

SeriesPrefix SeriesPrefix::truncated(std::size_t n) const {
    if (n > c_.size()) throw std::invalid_argument("cannot extend a series prefix");
    return SeriesPrefix(std::vector<Int>(c_.begin(), c_.begin() + n));
}

SeriesPrefix convolve_series_partial(const SeriesPrefix& f, const SeriesPrefix& g,
                                     std::size_t n, const SeriesSummandObserver& observer) {
    require_order(f, n);
    require_order(g, n);
    if (n == 0) return SeriesPrefix{};
    return SeriesPrefix(conv_partial_rec(f.truncated(n).coeffs(), g.truncated(n).coeffs(),
                                         observer, true));
}

SeriesPrefix convolve_series_flat(const SeriesPrefix& a, const SeriesPrefix& b,
                                  std::size_t n, const SeriesSummandObserver& observer) {
    require_order(a, n);
    require_order(b, n);
    std::vector<Int> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Int> u(a.coeffs().begin(), a.coeffs().begin() + n);
        std::vector<Int> v(b.coeffs().begin(), b.coeffs().begin() + n);
        for (unsigned level = 0; k >> level; ++level) {
            if ((k >> level) & 1) {
                trunc_mul_minus(u, level);
                trunc_mul_minus(v, level);
            }
        }
        const int sign = std::popcount(k) % 2 == 0 ? 1 : -1;
        // Mask support below n: positions whose bits cover k.
        std::vector<Int> w(n);
        for (std::size_t pos = k; pos < n; ++pos) {
            if ((pos & k) != k) continue;
            w[pos] = u[pos] * v[pos];
            if (sign < 0) w[pos] = -w[pos];
        }
        // The infinite mask product: every level absent from k, as far as
        // the truncation order can see.
        for (unsigned level = 0; (std::size_t(1) << level) < n; ++level) {
            if (!((k >> level) & 1)) trunc_mul_plus(w, level);
        }
        for (std::size_t i = 0; i < n; ++i) out[i] += w[i];
        if (observer) observer(k, Polynomial(std::move(w)));
    }
    return SeriesPrefix(std::move(out));
}

}  // namespace karaflat
