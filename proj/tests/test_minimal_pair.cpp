#include <random>

#include <gtest/gtest.h>

#include "cyclofact/minimal_pair.hpp"
#include "cyclofact/poly_io.hpp"
#include "oracle.hpp"

using namespace cyclofact;

TEST(MinimalPair, Examples) {
    EXPECT_EQ(minimal_pair(parse_polynomial("X - 3/2")), (MinimalPair{Integer(2), NatPoly{{1, 2}}, NatPoly{{0, 3}}}));
    EXPECT_EQ(minimal_pair(parse_polynomial("X^2 - 3X + 1")),
              (MinimalPair{Integer(1), NatPoly{{2, 1}, {0, 1}}, NatPoly{{1, 3}}}));
    EXPECT_EQ(minimal_pair(parse_polynomial("X - 5/6")), (MinimalPair{Integer(6), NatPoly{{1, 6}}, NatPoly{{0, 5}}}));
    EXPECT_EQ(minimal_pair(parse_polynomial("X^3 - 1/2X + 1/3")),
              (MinimalPair{Integer(6), NatPoly{{3, 6}, {0, 2}}, NatPoly{{1, 3}}}));
}

TEST(MinimalPair, OfRational) {
    EXPECT_EQ(minimal_pair_of_rational(Rat::parse("3/2")), (MinimalPair{Integer(2), NatPoly{{1, 2}}, NatPoly{{0, 3}}}));
    EXPECT_EQ(minimal_pair_of_rational(Rat::parse("2/3")), (MinimalPair{Integer(3), NatPoly{{1, 3}}, NatPoly{{0, 2}}}));
    EXPECT_EQ(minimal_pair_of_rational(Rat(4)), (MinimalPair{Integer(1), NatPoly{{1, 1}}, NatPoly{{0, 4}}}));
    EXPECT_THROW(minimal_pair_of_rational(Rat(0)), domain_error);
    EXPECT_THROW(minimal_pair_of_rational(Rat(-2)), domain_error);
}

TEST(MinimalPair, RejectsNonMonicAndZero) {
    EXPECT_THROW(minimal_pair(parse_polynomial("2X - 3")), domain_error);
    EXPECT_THROW(minimal_pair(parse_polynomial("1/2X^2 + 1")), domain_error);
    EXPECT_THROW(minimal_pair(RatPoly{}), domain_error);
}

namespace {

RatPoly random_monic(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> deg(1, 6);
    const std::size_t d = deg(rng);
    RatPoly f = RatPoly::monomial(d, Rat(1));
    for (std::size_t i = 0; i < d; ++i) f.add_term(i, oracle::random_rat(rng, 20, 12));
    return f;
}

}  // namespace

TEST(MinimalPair, PropertiesOnRandomMonic) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 400; ++i) {
        const RatPoly f = random_monic(rng);
        const MinimalPair mp = minimal_pair(f);

        // reconstruction: ell·f = p − q0
        EXPECT_EQ(to_rat(to_int(mp.p) - to_int(mp.q0)), f.scaled(Rat(mp.ell)));

        // disjoint supports
        for (const auto& [d, c] : mp.p.terms()) EXPECT_EQ(mp.q0.coeff(d), 0);

        // ell is the least positive integer clearing denominators
        Integer den_lcm(1);
        for (const auto& [d, c] : f.terms()) den_lcm = lcm(den_lcm, c.den());
        EXPECT_EQ(mp.ell, den_lcm);
        for (Integer m(1); m < mp.ell && m < 200; ++m) {
            bool integral = true;
            for (const auto& [d, c] : f.terms()) integral = integral && (c * Rat(m)).is_integer();
            EXPECT_FALSE(integral);
        }

        // leading term of f lands in p with coefficient ell
        EXPECT_EQ(mp.p.coeff(f.degree()), mp.ell);
    }
}

TEST(MinimalPair, UniqueUnderRescaling) {
    // Any other integral split m·f = p' − q0' with disjoint supports is a
    // positive multiple of the minimal one.
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        const RatPoly f = random_monic(rng);
        const MinimalPair mp = minimal_pair(f);
        for (long m = 1; m <= 6; ++m) {
            const Integer scale = mp.ell * m;
            const RatPoly g = f.scaled(Rat(scale));
            NatPoly p2, q2;
            for (const auto& [d, c] : g.terms()) {
                ASSERT_TRUE(c.is_integer());
                if (c.sign() > 0) p2.add_term(d, c.num()); else q2.add_term(d, Integer(-c.num()));
            }
            EXPECT_EQ(p2, mp.p.scaled(Integer(m)));
            EXPECT_EQ(q2, mp.q0.scaled(Integer(m)));
        }
    }
}

TEST(MinimalPair, OneIsARootExactlyWhenSidesBalance) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        RatPoly f = random_monic(rng);
        if (i % 3 == 0) {
            // force f(1) = 0 by fixing the constant term
            f.add_term(0, -eval(f, Rat(1)));
        }
        const MinimalPair mp = minimal_pair(f);
        EXPECT_EQ(eval(f, Rat(1)).is_zero(), mp.p.value_at_one() == mp.q0.value_at_one());
    }
}

TEST(MinimalPair, EqualValuesAtRoot) {
    // p(α) = q0(α) at any root α, checked on polynomials with a rational root.
    std::mt19937_64 rng(24);
    for (int i = 0; i < 200; ++i) {
        const Rat root = oracle::random_rat(rng, 15, 9, false) + Rat::parse("1/7");
        RatPoly f = RatPoly{{1, Rat(1)}, {0, -root}} * random_monic(rng);
        const MinimalPair mp = minimal_pair(f);
        EXPECT_EQ(eval(mp.p, root), eval(mp.q0, root));
    }
}
