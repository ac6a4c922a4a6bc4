#include "karaflat/randgen.hpp"

#include <stdexcept>

namespace karaflat {

std::mt19937_64 rng_for_cell(std::uint64_t seed, std::uint64_t n, std::uint64_t trial) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),  static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(n),     static_cast<std::uint32_t>(n >> 32),
        static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t length,
                             std::int64_t coeff_bound) {
    if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
    if (length == 0) return {};
    std::uniform_int_distribution<std::int64_t> dist(-coeff_bound, coeff_bound);
    std::vector<Int> c(length);
    for (std::size_t i = 0; i < length; ++i) c[i] = dist(rng);
    while (c[length - 1] == 0) c[length - 1] = dist(rng);
    return Polynomial(std::move(c));
}

}  // namespace karaflat
