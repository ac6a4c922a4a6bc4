#include "karaflat/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace karaflat {

namespace {

const Int kZero = 0;

bool is_pow2(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

Polynomial Polynomial::monomial(Int coeff, std::size_t degree) {
    if (coeff == 0) return {};
    std::vector<Int> c(degree + 1);
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
}

const Int& Polynomial::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

Polynomial Polynomial::operator-() const {
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Polynomial(std::move(c));
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    std::vector<Int> c(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
    std::vector<Int> c(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial shift(const Polynomial& p, std::size_t k) {
    if (p.is_zero()) return {};
    std::vector<Int> c(p.size() + k);
    for (std::size_t i = 0; i < p.size(); ++i) c[i + k] = p.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial termwise(const Polynomial& p, const Polynomial& q, MulCounter& muls) {
    const std::size_t n = std::min(p.size(), q.size());
    std::vector<Int> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (p.coeff(i) != 0 && q.coeff(i) != 0) {
            c[i] = p.coeff(i) * q.coeff(i);
            muls.add();
        }
    }
    return Polynomial(std::move(c));
}

Polynomial schoolbook_mul(const Polynomial& p, const Polynomial& q, MulCounter& muls) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Int> c(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            c[i + j] += p.coeff(i) * q.coeff(j);
            muls.add();
        }
    }
    return Polynomial(std::move(c));
}

namespace detail {

void mul_binomial_inplace(std::vector<Int>& c, Sign sign, unsigned level) {
    if (c.empty()) return;
    const std::size_t s = std::size_t(1) << level;
    const std::size_t old = c.size();
    c.resize(old + s);
    for (std::size_t i = old + s; i-- > s;) {
        const Int& low = c[i - s];
        if (low.is_zero()) continue;
        if (i < old) {
            if (sign == Sign::plus) c[i] += low;
            else c[i] -= low;
        } else {
            c[i] = (sign == Sign::plus) ? low : -low;
        }
    }
}

void div_binomial_inplace(std::vector<Int>& c, Sign sign, unsigned level) {
    const std::size_t s = std::size_t(1) << level;
    const std::size_t n = c.size();
    if (n == 0) return;
    if (n <= s) {
        for (const Int& v : c) {
            if (v != 0) throw NonExactDivision("divisor degree exceeds dividend degree");
        }
        c.clear();
        return;
    }
    // Synthetic division, quotient written over the low n-s positions.
    // For (1 - x^s): q_i = p_i + q_{i-s}; for (1 + x^s): q_i = p_i - q_{i-s}.
    for (std::size_t i = s; i < n - s; ++i) {
        if (c[i - s].is_zero()) continue;
        if (sign == Sign::minus) c[i] += c[i - s];
        else c[i] -= c[i - s];
    }
    // The top s dividend coefficients are untouched; they must match the
    // wrap-around of the quotient exactly.
    for (std::size_t i = n - s; i < n; ++i) {
        const Int& q_top = i >= s ? c[i - s] : kZero;
        if (sign == Sign::minus ? (c[i] != -q_top) : (c[i] != q_top)) {
            throw NonExactDivision("nonzero remainder in binomial division");
        }
    }
    c.resize(n - s);
}

}  // namespace detail

Polynomial mul_binomial(const Polynomial& p, Sign sign, unsigned level) {
    std::vector<Int> c = p.coeffs();
    detail::mul_binomial_inplace(c, sign, level);
    return Polynomial(std::move(c));
}

Polynomial div_binomial(const Polynomial& p, Sign sign, unsigned level) {
    std::vector<Int> c = p.coeffs();
    detail::div_binomial_inplace(c, sign, level);
    return Polynomial(std::move(c));
}

Polynomial mul_geometric(const Polynomial& p, std::size_t count) {
    if (p.is_zero() || count == 0) return {};
    std::vector<Int> c(p.size() + count - 1);
    Int window = 0;  // sum of p over the last `count` degrees
    for (std::size_t i = 0; i < c.size(); ++i) {
        window += p.coeff(i);
        if (i >= count) window -= p.coeff(i - count);
        c[i] = window;
    }
    return Polynomial(std::move(c));
}

Polynomial compress_stride(const Polynomial& p, std::size_t step, std::size_t offset) {
    if (step == 0) throw StrideViolation("stride step must be positive");
    std::vector<Int> c;
    if (p.size() > offset) c.reserve((p.size() - offset) / step + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const bool on_grid = i >= offset && (i - offset) % step == 0;
        if (on_grid) {
            c.push_back(p.coeff(i));
        } else if (p.coeff(i) != 0) {
            throw StrideViolation("nonzero coefficient at degree " + std::to_string(i) +
                                  " off the stride grid");
        }
    }
    return Polynomial(std::move(c));
}

Polynomial expand_stride(const Polynomial& p, std::size_t step, std::size_t offset) {
    if (step == 0) throw StrideViolation("stride step must be positive");
    if (p.is_zero()) return {};
    std::vector<Int> c(offset + (p.size() - 1) * step + 1);
    for (std::size_t i = 0; i < p.size(); ++i) c[offset + i * step] = p.coeff(i);
    return Polynomial(std::move(c));
}

Mask::Mask(Polynomial p) : p_(std::move(p)) {
    for (const Int& v : p_.coeffs()) {
        if (v < -1 || v > 1) throw InvalidMask("mask coefficient outside {-1, 0, +1}");
    }
}

Polynomial Mask::apply(const Polynomial& p) const {
    const std::size_t n = std::min(p.size(), p_.size());
    std::vector<Int> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (p_.coeff(i) == 1) c[i] = p.coeff(i);
        else if (p_.coeff(i) == -1) c[i] = -p.coeff(i);
    }
    return Polynomial(std::move(c));
}

Mask geometric_mask(std::size_t n, std::size_t step, std::size_t offset) {
    if (!is_pow2(n) || !is_pow2(step) || n % step != 0) {
        throw InvalidMask("geometric mask needs powers of two with step | n");
    }
    if (offset >= n) throw InvalidMask("geometric mask offset must be below n");
    std::vector<Int> c(n);
    for (std::size_t i = offset; i < n; i += step) c[i] = 1;
    return Mask(Polynomial(std::move(c)));
}

Polynomial masked_termwise(const Mask& mask, const Polynomial& p, const Polynomial& q,
                           MulCounter& muls) {
    const Polynomial& m = mask.poly();
    std::vector<Int> c(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.coeff(i) == 0) continue;
        c[i] = p.coeff(i) * q.coeff(i);
        if (m.coeff(i) < 0) c[i] = -c[i];
        muls.add();
    }
    return Polynomial(std::move(c));
}

unsigned BinomialProduct::present_count() const {
    unsigned n = 0;
    for (FactorState s : states_) n += (s != FactorState::absent);
    return n;
}

unsigned BinomialProduct::minus_count() const {
    unsigned n = 0;
    for (FactorState s : states_) n += (s == FactorState::minus);
    return n;
}

Polynomial BinomialProduct::expand() const {
    std::vector<Int> c{1};
    for (unsigned level = 0; level < order(); ++level) {
        if (states_[level] == FactorState::absent) continue;
        detail::mul_binomial_inplace(
            c, states_[level] == FactorState::plus ? Sign::plus : Sign::minus, level);
    }
    return Polynomial(std::move(c));
}

std::pair<std::size_t, int> BinomialProduct::leading_term() const {
    std::size_t degree = 0;
    for (unsigned level = 0; level < order(); ++level) {
        if (states_[level] != FactorState::absent) degree += std::size_t(1) << level;
    }
    return {degree, minus_count() % 2 == 0 ? 1 : -1};
}

Polynomial parse_poly(std::string_view text) {
    return Polynomial(parse_coeff_tokens(text));
}

std::vector<Int> parse_coeff_tokens(std::string_view text) {
    std::vector<Int> coeffs;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++col;
            ++i;
            continue;
        }
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        const int tok_line = line;
        const int tok_col = col;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        const std::string_view tok = text.substr(i, j - i);
        std::size_t p = 0;
        if (p < tok.size() && (tok[p] == '-' || tok[p] == '+')) ++p;
        const bool digits = p < tok.size();
        for (std::size_t k = p; k < tok.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(tok[k]))) {
                throw ParseError("bad coefficient token '" + std::string(tok) + "'",
                                 tok_line, tok_col);
            }
        }
        if (!digits) {
            throw ParseError("bad coefficient token '" + std::string(tok) + "'", tok_line,
                             tok_col);
        }
        coeffs.emplace_back(std::string(tok));
        col += static_cast<int>(j - i);
        i = j;
    }
    return coeffs;
}

std::string serialize_poly(const Polynomial& p) {
    std::ostringstream out;
    for (const Int& v : p.coeffs()) out << v << '\n';
    return out.str();
}

}  // namespace karaflat
