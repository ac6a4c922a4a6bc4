#include "karaflat/reference.hpp"

#include <bit>
#include <stdexcept>

namespace karaflat {

namespace {

std::vector<Int> padded_coeffs(const Polynomial& p, std::size_t n) {
    std::vector<Int> c = p.coeffs();
    c.resize(n);
    return c;
}

std::size_t common_padded_length(const Polynomial& p, const Polynomial& q) {
    return std::bit_ceil(std::max(p.size(), q.size()));
}

// Both recursions return dense coefficient buffers of length 2n - 1.

std::vector<Int> traditional_rec(const std::vector<Int>& a, const std::vector<Int>& b,
                                 MulCounter& muls) {
    const std::size_t n = a.size();
    if (n == 1) {
        muls.add();
        return {a[0] * b[0]};
    }
    const std::size_t h = n / 2;
    std::vector<Int> a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
    std::vector<Int> b0(b.begin(), b.begin() + h), b1(b.begin() + h, b.end());
    std::vector<Int> da(h), db(h);
    for (std::size_t i = 0; i < h; ++i) {
        da[i] = a1[i] - a0[i];
        db[i] = b1[i] - b0[i];
    }
    const std::vector<Int> p0 = traditional_rec(a0, b0, muls);
    const std::vector<Int> p1 = traditional_rec(a1, b1, muls);
    const std::vector<Int> p2 = traditional_rec(da, db, muls);
    // (X + 1) p0 + X (X + 1) p1 - X p2, with X = x^h.
    std::vector<Int> out(2 * n - 1);
    for (std::size_t i = 0; i < p0.size(); ++i) {
        out[i] += p0[i];
        out[i + h] += p0[i] + p1[i] - p2[i];
        out[i + 2 * h] += p1[i];
    }
    return out;
}

std::vector<Int> interleaved_rec(const std::vector<Int>& a, const std::vector<Int>& b,
                                 MulCounter& muls, const LeafObserver& observer,
                                 PathLabel& path) {
    const std::size_t n = a.size();
    if (n == 1) {
        muls.add();
        if (observer) observer(path, a[0], b[0]);
        return {a[0] * b[0]};
    }
    const std::size_t h = n / 2;
    std::vector<Int> ae(h), ao(h), be(h), bo(h), da(h), db(h);
    for (std::size_t i = 0; i < h; ++i) {
        ae[i] = a[2 * i];
        ao[i] = a[2 * i + 1];
        be[i] = b[2 * i];
        bo[i] = b[2 * i + 1];
        da[i] = ao[i] - ae[i];
        db[i] = bo[i] - be[i];
    }
    path.push(0);
    const std::vector<Int> p0 = interleaved_rec(ae, be, muls, observer, path);
    path.pop();
    path.push(1);
    const std::vector<Int> p1 = interleaved_rec(ao, bo, muls, observer, path);
    path.pop();
    path.push(2);
    const std::vector<Int> p2 = interleaved_rec(da, db, muls, observer, path);
    path.pop();
    // The three partial products live in y = x^2; recombining with X = x:
    // (X + 1) p0(y) + X (X + 1) p1(y) - X p2(y).
    std::vector<Int> out(2 * n - 1);
    for (std::size_t i = 0; i < p0.size(); ++i) {
        out[2 * i] += p0[i];
        out[2 * i + 1] += p0[i] + p1[i] - p2[i];
        out[2 * i + 2] += p1[i];
    }
    return out;
}

}  // namespace

PathLabel::PathLabel(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    for (std::uint8_t d : digits_) {
        if (d > 2) throw std::invalid_argument("path digit outside {0, 1, 2}");
    }
}

void PathLabel::push(std::uint8_t digit) {
    if (digit > 2) throw std::invalid_argument("path digit outside {0, 1, 2}");
    digits_.push_back(digit);
}

void PathLabel::pop() { digits_.pop_back(); }

bool PathLabel::is_direct() const {
    for (std::uint8_t d : digits_) {
        if (d == 2) return false;
    }
    return true;
}

std::size_t PathLabel::direct_index() const {
    std::size_t r = 0;
    for (std::size_t t = 0; t < digits_.size(); ++t) {
        if (digits_[t] == 2) throw NotDirectPath("path contains a digit 2");
        r |= static_cast<std::size_t>(digits_[t]) << t;
    }
    return r;
}

std::pair<Polynomial, Polynomial> split_interleaved(const Polynomial& p) {
    std::vector<Int> even, odd;
    even.reserve((p.size() + 1) / 2);
    odd.reserve(p.size() / 2);
    for (std::size_t i = 0; i < p.size(); ++i) {
        (i % 2 == 0 ? even : odd).push_back(p.coeff(i));
    }
    return {Polynomial(std::move(even)), Polynomial(std::move(odd))};
}

Polynomial karatsuba_traditional(const Polynomial& p, const Polynomial& q, MulCounter& muls) {
    if (p.is_zero() || q.is_zero()) return {};
    const std::size_t n = common_padded_length(p, q);
    return Polynomial(traditional_rec(padded_coeffs(p, n), padded_coeffs(q, n), muls));
}

Polynomial karatsuba_interleaved(const Polynomial& p, const Polynomial& q, MulCounter& muls,
                                 const LeafObserver& observer) {
    if (p.is_zero() || q.is_zero()) return {};
    const std::size_t n = common_padded_length(p, q);
    PathLabel path;
    return Polynomial(
        interleaved_rec(padded_coeffs(p, n), padded_coeffs(q, n), muls, observer, path));
}

Polynomial direct_leaf_contribution(const PathLabel& path, const Polynomial& a,
                                    const Polynomial& b) {
    const std::size_t r = path.direct_index();
    const std::size_t n = std::size_t(1) << path.length();
    const Int product = a.coeff(r) * b.coeff(r);
    return mul_geometric(Polynomial::monomial(product, r), n);
}

}  // namespace karaflat
