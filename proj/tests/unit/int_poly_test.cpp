#include <gtest/gtest.h>

#include "sumgrowth/error.hpp"
#include "sumgrowth/int_poly.hpp"

using namespace sumgrowth;

TEST(IntPolynomial, TrimsLeadingZeros) {
    IntPolynomial p(std::vector<Integer>{1, 2, 0, 0});
    EXPECT_EQ(p.degree(), 1);
    EXPECT_TRUE(IntPolynomial(std::vector<Integer>{0, 0}).is_zero());
    EXPECT_EQ(IntPolynomial().degree(), -1);
}

TEST(IntPolynomial, ParsesGrammar) {
    EXPECT_EQ(IntPolynomial::parse("x^2-2"), (IntPolynomial{-2, 0, 1}));
    EXPECT_EQ(IntPolynomial::parse("6*x^2-6"), (IntPolynomial{-6, 0, 6}));
    EXPECT_EQ(IntPolynomial::parse(" x ^ 3 - x - 1 "), (IntPolynomial{-1, -1, 0, 1}));
    EXPECT_EQ(IntPolynomial::parse("-x+7"), (IntPolynomial{7, -1}));
    EXPECT_EQ(IntPolynomial::parse("2x - 3"), (IntPolynomial{-3, 2}));
    EXPECT_EQ(IntPolynomial::parse("5"), IntPolynomial::constant(5));
    EXPECT_EQ(IntPolynomial::parse("x^2 + x^2"), (IntPolynomial{0, 0, 2}));
    EXPECT_EQ(IntPolynomial::parse("123456789012345678901234567890*x"),
              IntPolynomial::monomial(Integer("123456789012345678901234567890"), 1));
}

TEST(IntPolynomial, RejectsMalformedText) {
    for (const char* bad : {"", "x^", "2**x", "x^2 -", "y+1", "1.5*x", "x^2^3", "(x+1)", "i*x"}) {
        EXPECT_THROW(IntPolynomial::parse(bad), Error) << bad;
    }
}

TEST(IntPolynomial, FormatsAndReparses) {
    for (const char* s : {"x^2 - 2", "6*x^2 - 6", "-x^3 + x - 1", "x", "0", "-4"}) {
        IntPolynomial p = IntPolynomial::parse(s);
        EXPECT_EQ(p.to_string(), s);
        EXPECT_EQ(IntPolynomial::parse(p.to_string()), p);
    }
}

TEST(IntPolynomial, ContentAndPrimitivePart) {
    IntPolynomial p{6, 0, -6};
    EXPECT_EQ(p.content(), 6);
    EXPECT_EQ(p.primitive_part(), (IntPolynomial{-1, 0, 1}));
}

TEST(IntPolynomial, ExactDivision) {
    IntPolynomial a{-1, 1}, b{1, 1};
    IntPolynomial q;
    ASSERT_TRUE(divides_exactly(a, a * b, &q));
    EXPECT_EQ(q, b);
    EXPECT_FALSE(divides_exactly(IntPolynomial{1, 2}, IntPolynomial{1, 1}));
    EXPECT_FALSE(divides_exactly(IntPolynomial{0, 2}, IntPolynomial{0, 1}));
}

TEST(IntPolynomial, GcdIsPrimitive) {
    IntPolynomial a = IntPolynomial{-1, 1} * IntPolynomial{2, 1};
    IntPolynomial b = IntPolynomial{-1, 1} * IntPolynomial{3, 0, 1} * Integer(4);
    EXPECT_EQ(gcd(a, b), (IntPolynomial{-1, 1}));
    EXPECT_EQ(gcd(IntPolynomial{1, 1}, IntPolynomial{2, 1}), IntPolynomial::constant(1));
}

TEST(IntPolynomial, CanonicalOrder) {
    IntPolynomial a{-1, 1}, b{1, 1}, c{-2, 0, 1};
    EXPECT_TRUE(canonical_compare(a, b) < 0);
    EXPECT_TRUE(canonical_compare(b, c) < 0);
    EXPECT_TRUE(canonical_compare(c, c) == 0);
}
