#include "karaflat/algorithms.hpp"

#include <bit>
#include <stdexcept>

#include "karaflat/flat.hpp"
#include "karaflat/partial.hpp"
#include "karaflat/reference.hpp"

namespace karaflat {

std::string_view algo_name(Algo algo) {
    switch (algo) {
        case Algo::naive: return "naive";
        case Algo::traditional: return "traditional";
        case Algo::interleaved: return "interleaved";
        case Algo::partial: return "partial";
        case Algo::flat: return "flat";
        case Algo::gray: return "gray";
    }
    throw std::logic_error("unknown algorithm");
}

std::optional<Algo> algo_from_name(std::string_view name) {
    for (Algo algo : kAllAlgos) {
        if (algo_name(algo) == name) return algo;
    }
    return std::nullopt;
}

Polynomial run_algo(Algo algo, const Polynomial& a, const Polynomial& b, MulCounter& muls) {
    switch (algo) {
        case Algo::naive: return schoolbook_mul(a, b, muls);
        case Algo::traditional: return karatsuba_traditional(a, b, muls);
        case Algo::interleaved: return karatsuba_interleaved(a, b, muls);
        case Algo::partial: return multiply_partial(a, b, muls);
        case Algo::flat: return multiply_flat(a, b, muls);
        case Algo::gray: return multiply_gray(a, b, muls);
    }
    throw std::logic_error("unknown algorithm");
}

std::uint64_t expected_muls(Algo algo, std::size_t n) {
    if (algo == Algo::naive) return static_cast<std::uint64_t>(n) * n;
    return pow3(static_cast<unsigned>(std::bit_width(n) - 1));
}

std::uint64_t pow3(unsigned exponent) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exponent; ++i) v *= 3;
    return v;
}

}  // namespace karaflat
