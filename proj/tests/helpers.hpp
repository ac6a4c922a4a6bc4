#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "karaflat/poly.hpp"
#include "karaflat/randgen.hpp"

namespace karaflat::testing {

// Independent convolution oracle: result-degree-major loop order, no
// counting, sharing nothing with schoolbook_mul's implementation path.
inline Polynomial convolve_by_degree(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Int> c(p.size() + q.size() - 1);
    for (std::size_t deg = 0; deg < c.size(); ++deg) {
        for (std::size_t i = deg < q.size() ? 0 : deg - q.size() + 1;
             i <= deg && i < p.size(); ++i) {
            c[deg] += p.coeff(i) * q.coeff(deg - i);
        }
    }
    return Polynomial(std::move(c));
}

inline Polynomial oracle_mul(const Polynomial& p, const Polynomial& q) {
    return convolve_by_degree(p, q);
}

inline std::mt19937_64 test_rng(std::uint64_t salt) {
    return rng_for_cell(0x6b617261666c6174ULL, salt, 0);  // fixed master seed
}

inline Polynomial random_poly(std::mt19937_64& rng, std::size_t length,
                              std::int64_t bound = 1000) {
    return random_polynomial(rng, length, bound);
}

}  // namespace karaflat::testing
