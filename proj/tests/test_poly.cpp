#include "doctest.h"

#include "helpers.hpp"
#include "karaflat/poly.hpp"

using namespace karaflat;
using karaflat::testing::oracle_mul;
using karaflat::testing::random_poly;
using karaflat::testing::test_rng;

TEST_CASE("canonical form") {
    CHECK(Polynomial{} == Polynomial{0, 0});
    CHECK(Polynomial{1, 2, 0}.size() == 2);
    CHECK(Polynomial{}.degree() == -1);
    CHECK(Polynomial{5}.degree() == 0);
    CHECK(Polynomial{0, 0, 7}.degree() == 2);
}

TEST_CASE("add") {
    CHECK(add({1, 2}, {0, 0, 3}) == Polynomial{1, 2, 3});
    CHECK(add({1, -1}, {-1, 1}) == Polynomial{});
    CHECK(add({5}, {}) == Polynomial{5});
}

TEST_CASE("sub") {
    CHECK(sub({1, 2}, {1, 2}) == Polynomial{});
    CHECK(sub({}, {3}) == Polynomial{-3});
    CHECK(sub({0, 1}, {1}) == Polynomial{-1, 1});
}

TEST_CASE("shift") {
    CHECK(shift({1, 2}, 2) == Polynomial{0, 0, 1, 2});
    CHECK(shift({}, 5) == Polynomial{});
    CHECK(shift({7}, 0) == Polynomial{7});
}

TEST_CASE("termwise values and counting") {
    MulCounter muls;
    CHECK(termwise({1, 2, 3}, {4, 5, 6}, muls) == Polynomial{4, 10, 18});
    CHECK(muls.count == 3);

    muls = {};
    CHECK(termwise({1, 0, 3}, {0, 5, 6}, muls) == Polynomial{0, 0, 18});
    CHECK(muls.count == 1);  // only index 2 has both factors nonzero

    muls = {};
    CHECK(termwise({1, 2, 3}, {}, muls) == Polynomial{});
    CHECK(muls.count == 0);
}

TEST_CASE("schoolbook against a second loop ordering") {
    MulCounter muls;
    CHECK(schoolbook_mul({1, 1}, {1, 1}, muls) == Polynomial{1, 2, 1});

    const Polynomial a{1, 2, 3, 4};
    const Polynomial b{5, 6, 7, 8};
    const Polynomial expect{5, 16, 34, 60, 61, 52, 32};
    muls = {};
    CHECK(schoolbook_mul(a, b, muls) == expect);
    CHECK(oracle_mul(a, b) == expect);
    CHECK(muls.count == 16);

    muls = {};
    CHECK(schoolbook_mul({2, 3}, {5, 7}, muls) == Polynomial{10, 29, 21});
    CHECK(muls.count == 4);

    auto rng = test_rng(1);
    for (int trial = 0; trial < 25; ++trial) {
        const Polynomial p = random_poly(rng, 1 + trial % 17);
        const Polynomial q = random_poly(rng, 1 + (trial * 7) % 13);
        MulCounter c;
        CHECK(schoolbook_mul(p, q, c) == oracle_mul(p, q));
        CHECK(c.count == p.size() * q.size());
    }
}

TEST_CASE("mul_binomial") {
    CHECK(mul_binomial({1, 2}, Sign::minus, 0) == Polynomial{1, 1, -2});
    CHECK(mul_binomial({1}, Sign::plus, 2) == Polynomial{1, 0, 0, 0, 1});
    CHECK(mul_binomial({}, Sign::minus, 3) == Polynomial{});
}

TEST_CASE("div_binomial") {
    CHECK(div_binomial({1, 1, -2}, Sign::minus, 0) == Polynomial{1, 2});
    CHECK(div_binomial({1, 0, 0, 0, 1}, Sign::plus, 2) == Polynomial{1});
    CHECK_THROWS_AS(div_binomial({1, 1}, Sign::minus, 0), NonExactDivision);
}

TEST_CASE("div_binomial inverts mul_binomial") {
    auto rng = test_rng(2);
    for (unsigned level = 0; level <= 10; ++level) {
        for (Sign sign : {Sign::plus, Sign::minus}) {
            const Polynomial p = random_poly(rng, 1 + (level * 13) % 40);
            CHECK(div_binomial(mul_binomial(p, sign, level), sign, level) == p);
        }
    }
}

TEST_CASE("mul_binomial agrees with schoolbook") {
    auto rng = test_rng(3);
    for (unsigned level = 0; level <= 4; ++level) {
        const Polynomial p = random_poly(rng, 9);
        std::vector<Int> f(1 + (std::size_t(1) << level));
        f[0] = 1;
        f.back() = -1;
        CHECK(mul_binomial(p, Sign::minus, level) == oracle_mul(p, Polynomial(f)));
        f.back() = 1;
        CHECK(mul_binomial(p, Sign::plus, level) == oracle_mul(p, Polynomial(f)));
    }
}

TEST_CASE("geometric_mask") {
    CHECK(geometric_mask(4, 1, 0).poly() == Polynomial{1, 1, 1, 1});
    CHECK(geometric_mask(8, 2, 1).poly() == Polynomial{0, 1, 0, 1, 0, 1, 0, 1});
    CHECK(geometric_mask(8, 4, 2).poly() == Polynomial{0, 0, 1, 0, 0, 0, 1, 0});
    CHECK_THROWS_AS(geometric_mask(8, 3, 0), InvalidMask);
    CHECK_THROWS_AS(geometric_mask(6, 2, 0), InvalidMask);
    CHECK_THROWS_AS(geometric_mask(8, 2, 8), InvalidMask);
}

TEST_CASE("mask validation and application") {
    CHECK_THROWS_AS(Mask(Polynomial{0, 2}), InvalidMask);
    const Mask m(Polynomial{1, 0, -1, 1});
    CHECK(m.apply({5, 6, 7, 8, 9}) == Polynomial{5, 0, -7, 8});

    MulCounter muls;
    CHECK(masked_termwise(m, {5, 6, 7, 8}, {1, 1, 1, 1}, muls) == Polynomial{5, 0, -7, 8});
    CHECK(muls.count == 3);  // one product per kept position
}

TEST_CASE("termwise is commutative, associative, idempotent on masks") {
    auto rng = test_rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial p = random_poly(rng, 12);
        const Polynomial q = random_poly(rng, 15);
        const Polynomial r = random_poly(rng, 9);
        MulCounter c;
        CHECK(termwise(p, q, c) == termwise(q, p, c));
        CHECK(termwise(termwise(p, q, c), r, c) == termwise(p, termwise(q, r, c), c));
    }
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Int> c(16);
        for (auto& v : c) v = bit(rng);
        const Polynomial m(c);
        MulCounter muls;
        CHECK(termwise(m, m, muls) == m);
    }
}

TEST_CASE("ring axioms on random inputs") {
    auto rng = test_rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial p = random_poly(rng, 10);
        const Polynomial q = random_poly(rng, 14);
        const Polynomial r = random_poly(rng, 7);
        CHECK(add(p, q) == add(q, p));
        CHECK(add(add(p, q), r) == add(p, add(q, r)));
        CHECK(sub(add(p, q), q) == p);
        MulCounter c;
        CHECK(schoolbook_mul(p, add(q, r), c) ==
              add(schoolbook_mul(p, q, c), schoolbook_mul(p, r, c)));
    }
}

TEST_CASE("binomial product expansion") {
    BinomialProduct both(2);
    both.set_factor(0, FactorState::plus).set_factor(1, FactorState::plus);
    CHECK(both.expand() == Polynomial{1, 1, 1, 1});
    CHECK(both.leading_term() == std::pair<std::size_t, int>{3, 1});

    BinomialProduct minus0(1);
    minus0.set_factor(0, FactorState::minus);
    CHECK(minus0.expand() == Polynomial{1, -1});
    CHECK(minus0.leading_term() == std::pair<std::size_t, int>{1, -1});

    const BinomialProduct empty(3);
    CHECK(empty.expand() == Polynomial{1});
    CHECK(empty.leading_term() == std::pair<std::size_t, int>{0, 1});
}

TEST_CASE("binomial product invariants") {
    auto rng = test_rng(6);
    std::uniform_int_distribution<int> state(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        BinomialProduct bp(6);
        for (unsigned level = 0; level < 6; ++level) {
            bp.set_factor(level, static_cast<FactorState>(state(rng)));
        }
        const Polynomial e = bp.expand();
        std::size_t nonzero = 0;
        for (const Int& v : e.coeffs()) {
            CHECK(v >= -1);
            CHECK(v <= 1);
            nonzero += v != 0;
        }
        CHECK(nonzero == std::size_t(1) << bp.present_count());
        CHECK(e.degree() == static_cast<int>(bp.leading_term().first));
        CHECK(e.coeffs().back() == bp.leading_term().second);
    }
}

TEST_CASE("all-plus product equals the all-ones mask") {
    for (unsigned d = 0; d <= 8; ++d) {
        BinomialProduct bp(d);
        for (unsigned level = 0; level < d; ++level) bp.set_factor(level, FactorState::plus);
        CHECK(bp.expand() == geometric_mask(std::size_t(1) << d, 1, 0).poly());
    }
}

TEST_CASE("stride compression") {
    CHECK(compress_stride({0, 5, 0, 7}, 2, 1) == Polynomial{5, 7});
    CHECK(expand_stride({5, 7}, 2, 1) == Polynomial{0, 5, 0, 7});
    CHECK_THROWS_AS(compress_stride({1, 1}, 2, 0), StrideViolation);

    auto rng = test_rng(7);
    for (std::size_t step : {std::size_t(1), std::size_t(2), std::size_t(4)}) {
        for (std::size_t offset = 0; offset < step; ++offset) {
            const Polynomial p = random_poly(rng, 11);
            CHECK(compress_stride(expand_stride(p, step, offset), step, offset) == p);
            const Polynomial on_grid = expand_stride(random_poly(rng, 7), step, offset);
            CHECK(expand_stride(compress_stride(on_grid, step, offset), step, offset) ==
                  on_grid);
        }
    }
}

TEST_CASE("mul_geometric matches schoolbook by the ones polynomial") {
    auto rng = test_rng(8);
    for (std::size_t count : {std::size_t(1), std::size_t(2), std::size_t(8)}) {
        const Polynomial p = random_poly(rng, 9);
        const Polynomial ones(std::vector<Int>(count, Int(1)));
        CHECK(mul_geometric(p, count) == oracle_mul(p, ones));
    }
    CHECK(mul_geometric({}, 4) == Polynomial{});
}

TEST_CASE("parse and serialize") {
    CHECK(parse_poly("1 2 3") == Polynomial{1, 2, 3});
    CHECK(parse_poly("# comment\n-4 0 9") == Polynomial{-4, 0, 9});
    CHECK(parse_poly("") == Polynomial{});
    CHECK(parse_poly("# only a comment\n") == Polynomial{});
    CHECK(serialize_poly(Polynomial{10, 29, 21}) == "10\n29\n21\n");
    CHECK(serialize_poly(Polynomial{}) == "");

    try {
        parse_poly("1 x");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 3);
        CHECK(std::string(e.what()).find('x') != std::string::npos);
    }

    try {
        parse_poly("# header\n 12 3q4");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 5);
    }

    auto rng = test_rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const Polynomial p = random_poly(rng, 1 + trial);
        CHECK(parse_poly(serialize_poly(p)) == p);
    }
}
