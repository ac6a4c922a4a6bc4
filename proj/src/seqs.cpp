#include "karaflat/seqs.hpp"

#include <bit>
#include <stdexcept>

namespace karaflat {

int sigma(std::size_t k) { return std::popcount(k) % 2 == 0 ? 1 : -1; }

int sierpinski_T(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    return (k & (n - k)) == 0 ? 1 : 0;
}

std::pair<std::size_t, unsigned> gray_step(std::size_t g, std::size_t k) {
    if (k == 0) throw std::invalid_argument("gray_step needs a positive k");
    const unsigned j = static_cast<unsigned>(std::countr_zero(k));
    return {g ^ (std::size_t(1) << j), j};
}

DyadicRational::DyadicRational(Int num, unsigned exp) : num_(std::move(num)), exp_(exp) {
    while (exp_ > 0 && num_ % 2 == 0) {
        num_ >>= 1;
        --exp_;
    }
}

DyadicRational takagi_dyadic(const DyadicRational& x) {
    const Int& p = x.num();
    const unsigned e = x.exp();
    if (p < 0 || p > (Int(1) << e)) throw OutOfDomain("takagi argument outside [0, 1]");
    // Term i contributes min(r, 2^f - r) / 2^e with f = e - i, r = p mod 2^f.
    Int total = 0;
    for (unsigned i = 0; i < e; ++i) {
        const unsigned f = e - i;
        const Int modulus = Int(1) << f;
        const Int r = p % modulus;
        const Int mirrored = modulus - r;
        total += r < mirrored ? r : mirrored;
    }
    return DyadicRational(total, e);
}

std::int64_t a268289_count(std::size_t d) {
    std::int64_t acc = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        const int width = std::bit_width(i);
        const int ones = std::popcount(i);
        acc += 2 * ones - width;
    }
    return acc;
}

std::vector<std::int64_t> a268289_count_prefix(std::size_t count) {
    std::vector<std::int64_t> seq(count);
    std::int64_t acc = 0;
    for (std::size_t i = 1; i < count; ++i) {
        acc += 2 * std::popcount(i) - std::bit_width(i);
        seq[i] = acc;
    }
    return seq;
}

std::int64_t a268289_takagi(std::size_t d) {
    if (d == 0) return 0;
    const unsigned k = std::bit_width(d) - 1;
    // (d + 1) / 2^k - 1 as an exact dyadic rational in (0, 1].
    const DyadicRational x(Int(d + 1) - (Int(1) << k), k);
    const DyadicRational t = takagi_dyadic(x);
    if (t.exp() > k) throw NonIntegerResult("scaled Takagi value is not an integer");
    const Int scaled = Int(t.num()) << (k - t.exp());
    const Int value = Int(d) - scaled;
    return value.convert_to<std::int64_t>();
}

std::vector<std::int64_t> a268289_recurrence(unsigned upto_s) {
    std::vector<std::int64_t> u(std::size_t(1) << upto_s);
    u[0] = 0;
    for (unsigned s = 0; s < upto_s; ++s) {
        const std::size_t block = std::size_t(1) << s;
        for (std::size_t n = 0; n < block; ++n) {
            const std::int64_t log2n = n == 0 ? -1 : std::bit_width(n) - 1;
            u[n + block] = u[n] +
                           static_cast<std::int64_t>(n + 1) * (log2n - std::int64_t(s) + 2) +
                           static_cast<std::int64_t>(block) -
                           (std::int64_t(1) << (log2n + 1));
        }
    }
    return u;
}

}  // namespace karaflat
