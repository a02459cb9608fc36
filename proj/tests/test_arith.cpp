#include <gtest/gtest.h>

#include <random>

#include "hybridseq/quad_ext.hpp"
#include "hybridseq/rational.hpp"

using namespace hybridseq;

namespace {

Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (;;) {
        Rational r(num(rng), den(rng));
        if (!nonzero || !r.is_zero()) return r;
    }
}

bool canonical(const Rational& r) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return g == 1 && r.denominator() > 0;
}

}  // namespace

TEST(Rational, TextbookCases) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(rat_arith(Rational(1, 2), Rational(1, 3), RatOp::add), Rational(5, 6));
    Rational x(-7, 9);
    EXPECT_EQ(rat_arith(x, Rational(1, 1), RatOp::mul), x);
    EXPECT_THROW(rat_arith(Rational(3, 4), Rational(0, 1), RatOp::div), division_by_zero);
    EXPECT_THROW(Rational(1, 0), division_by_zero);
}

TEST(Rational, CanonicalForm) {
    Rational r(6, -4);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rational(8, 4).str(), "2");
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("5/2"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("-4"), Rational(-4));
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_THROW(Rational::parse("10/-4"), parse_error);
    EXPECT_THROW(Rational::parse("1/0"), std::exception);
    EXPECT_THROW(Rational::parse("abc"), parse_error);
    EXPECT_THROW(Rational::parse(""), parse_error);
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
    std::mt19937_64 rng(20260417);
    for (int t = 0; t < 500; ++t) {
        Rational x = random_rational(rng), y = random_rational(rng), z = random_rational(rng);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x - x, Rational(0));
        if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), Rational(1));
        EXPECT_TRUE(canonical(x * y + z));
        EXPECT_TRUE(canonical(x - y * z));
    }
}

TEST(Rational, PowAndBinomial) {
    EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
    EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
    EXPECT_EQ(pow(Rational(-5), 0), Rational(1));
    EXPECT_THROW(pow(Rational(0), -1), division_by_zero);
    EXPECT_EQ(binomial(10, 3), Rational(120));
    EXPECT_EQ(binomial(60, 30), Rational(mpz_class("118264581564861424"), mpz_class(1)));
}

TEST(QuadExt, DefiningRelation) {
    QuadExt s5 = QuadExt::sqrt_of(5);
    QuadExt sq = s5 * s5;
    EXPECT_TRUE(sq.is_rational());
    EXPECT_EQ(sq.rat(), Rational(5));
}

TEST(QuadExt, RootRelations) {
    // a=b=c=1: α = (1+√5)/2, β = (1−√5)/2
    QuadExt alpha(Rational(1, 2), Rational(1, 2), 5), beta(Rational(1, 2), Rational(-1, 2), 5);
    QuadExt prod = alpha * beta;
    EXPECT_TRUE(prod.is_rational());
    EXPECT_EQ(prod.rat(), Rational(-1));
    EXPECT_EQ(alpha * alpha, alpha + Rational(1));
    EXPECT_EQ(quad_pow(alpha, 0), QuadExt::rational(1, 5));
}

TEST(QuadExt, MixedRadicandsRejected) {
    EXPECT_THROW(QuadExt::sqrt_of(5) + QuadExt::sqrt_of(3), radicand_mismatch);
    EXPECT_THROW(QuadExt::sqrt_of(5) * QuadExt::sqrt_of(3), radicand_mismatch);
    EXPECT_THROW(QuadExt(1, 1, 0), std::exception);
}

TEST(QuadExt, Inverse) {
    EXPECT_EQ(quad_inv(QuadExt::rational(1, 7)), QuadExt::rational(1, 7));
    EXPECT_EQ(quad_inv(QuadExt::sqrt_of(5)), QuadExt(0, Rational(1, 5), 5));
    EXPECT_THROW(quad_inv(QuadExt(3, 1, 9)), degenerate_extension);
    EXPECT_THROW(quad_inv(QuadExt(0, 0, 5)), division_by_zero);
}

TEST(QuadExt, CommutativeRingProperties) {
    std::mt19937_64 rng(7);
    const Rational radicands[] = {5, -3, 9, Rational(17, 4)};
    for (const auto& d : radicands)
        for (int t = 0; t < 200; ++t) {
            QuadExt x(random_rational(rng), random_rational(rng), d);
            QuadExt y(random_rational(rng), random_rational(rng), d);
            QuadExt z(random_rational(rng), random_rational(rng), d);
            EXPECT_EQ(x * y, y * x);
            EXPECT_EQ((x * y) * z, x * (y * z));
            EXPECT_EQ(x * (y + z), x * y + x * z);
            EXPECT_EQ(x * x.conjugate(), QuadExt::rational(x.field_norm(), d));
            try {
                QuadExt xi = quad_inv(x);
                EXPECT_EQ(quad_mul(x, xi), QuadExt::rational(1, d));
            } catch (const error&) {
                EXPECT_TRUE(x.field_norm().is_zero());
            }
        }
}

TEST(QuadExt, PowMatchesRepeatedProduct) {
    QuadExt x(Rational(2, 3), Rational(-1, 5), 7);
    QuadExt acc = QuadExt::rational(1, 7);
    for (long n = 0; n <= 25; ++n) {
        EXPECT_EQ(quad_pow(x, n), acc);
        acc = acc * x;
    }
}
