#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "karaflat/poly.hpp"

namespace karaflat {

// The multiplication routines the CLI can select.  `naive` is the
// schoolbook oracle; the other five share the 3^(log2 n) multiplication
// count.
enum class Algo { naive, traditional, interleaved, partial, flat, gray };

inline constexpr std::array<Algo, 6> kAllAlgos = {
    Algo::naive,   Algo::traditional, Algo::interleaved,
    Algo::partial, Algo::flat,        Algo::gray};

inline constexpr std::array<Algo, 5> kSubquadraticAlgos = {
    Algo::traditional, Algo::interleaved, Algo::partial, Algo::flat, Algo::gray};

std::string_view algo_name(Algo algo);
std::optional<Algo> algo_from_name(std::string_view name);

Polynomial run_algo(Algo algo, const Polynomial& a, const Polynomial& b, MulCounter& muls);

// 3^d for subquadratic algorithms on padded length n = 2^d; n^2 for naive.
std::uint64_t expected_muls(Algo algo, std::size_t n);

std::uint64_t pow3(unsigned exponent);

}  // namespace karaflat
