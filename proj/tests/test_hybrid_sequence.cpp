#include <gtest/gtest.h>

#include "hybridseq/hybrid_sequence.hpp"

using namespace hybridseq;

TEST(HybridSeq, InitialTermFormula) {
    for (auto p : {RecurrenceParams::make(2, 3, 1, 5, -4), RecurrenceParams::make(Rational(5, 2), -1, 2, 1, 1)}) {
        HybridSeq k(p, kind_of(p));
        const auto& [a, b, c, w0, w1] = p;
        EXPECT_EQ(k(0), (RationalHybrid{w0, w1, a * w1 + c * w0, (a * b + c) * w1 + b * c * w0}));
    }
}

TEST(HybridSeq, FibonacciTerms) {
    auto kf = family_lookup("fibonacci");
    EXPECT_EQ(kf(0), (RationalHybrid{0, 1, 1, 2}));
    EXPECT_EQ(kf(2), (RationalHybrid{1, 2, 3, 5}));
    EXPECT_EQ(kf(7), (RationalHybrid{13, 21, 34, 55}));
    EXPECT_EQ(kf.character(0), Rational(-5));
    EXPECT_EQ(kf.character(1), Rational(-11));
}

TEST(HybridSeq, ZeroSequenceHasZeroCharacter) {
    HybridSeq z(RecurrenceParams::make(2, 3, 1, 0, 0), SeqKind::general);
    for (long n = -3; n <= 10; ++n) EXPECT_EQ(z.character(n), Rational(0));
}

TEST(HybridSeq, BinetMatchesComponents) {
    auto kf = family_lookup("fibonacci");
    SeqParams fp(kf.params());
    EXPECT_EQ(hybrid_term_binet(kf, 7), lift(kf(7), fp.delta_sq()));

    auto p = RecurrenceParams::make(2, 3, 1, 0, 1);
    HybridSeq k(p, kind_of(p));
    SeqParams sp(p);
    EXPECT_EQ(k(5).re, Rational(55));
    EXPECT_EQ(k(5).i, Rational(126));
    for (long n = 0; n <= 20; ++n) EXPECT_EQ(hybrid_term_binet(k, n), lift(k(n), sp.delta_sq())) << n;
}

TEST(Families, TableTuples) {
    auto tuple = [](const char* name, std::vector<Rational> free = {}) { return find_family(name).instantiate(free); };
    EXPECT_EQ(tuple("fibonacci"), RecurrenceParams::make(1, 1, 1, 0, 1));
    EXPECT_EQ(tuple("lucas"), RecurrenceParams::make(1, 1, 1, 2, 1));
    EXPECT_EQ(tuple("pell"), RecurrenceParams::make(2, 2, 1, 0, 1));
    EXPECT_EQ(tuple("pell-lucas"), RecurrenceParams::make(2, 2, 1, 2, 2));
    EXPECT_EQ(tuple("k-pell", {3}), RecurrenceParams::make(2, 2, 3, 0, 1));
    EXPECT_EQ(tuple("jacobsthal"), RecurrenceParams::make(1, 1, 2, 0, 1));
    EXPECT_EQ(tuple("jacobsthal-lucas"), RecurrenceParams::make(1, 1, 2, 2, 1));
    EXPECT_EQ(tuple("horadam", {3, 4, 2, -1}), RecurrenceParams::make(2, 2, 1, 3, 4));
    EXPECT_EQ(tuple("gen-bi-periodic-lucas", {2, 3, 1}), RecurrenceParams::make(2, 3, 1, 2, 3));
}

TEST(Families, Errors) {
    EXPECT_THROW(find_family("tribonacci"), unknown_family);
    std::vector<Rational> none;
    EXPECT_THROW(find_family("k-pell").instantiate(none), invalid_parameters);
    std::vector<Rational> extra = {1};
    EXPECT_THROW(find_family("fibonacci").instantiate(extra), invalid_parameters);
}
