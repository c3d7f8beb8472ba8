#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sumgrowth/error.hpp"
#include "sumgrowth/factor.hpp"

using namespace sumgrowth;

namespace {

IntPolynomial P(const char* s) { return IntPolynomial::parse(s); }

void expect_valid(const IntPolynomial& f, const Factorization& fac) {
    EXPECT_EQ(fac.expand(), f) << f;
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        const auto& g = fac.factors[i].first;
        EXPECT_EQ(g.content(), 1) << g;
        EXPECT_GT(g.leading(), 0) << g;
        EXPECT_GE(fac.factors[i].second, 1u);
        if (g.degree() <= 3) EXPECT_TRUE(oracle::irreducible_small_degree(g)) << g;
        if (i > 0) EXPECT_TRUE(canonical_compare(fac.factors[i - 1].first, g) < 0);
    }
}

}  // namespace

TEST(Factor, DifferenceOfSquares) {
    auto fac = factor_over_integers(P("x^2-1"));
    EXPECT_EQ(fac.content, 1);
    ASSERT_EQ(fac.factors.size(), 2u);
    EXPECT_EQ(fac.factors[0].first, P("x-1"));
    EXPECT_EQ(fac.factors[1].first, P("x+1"));
    EXPECT_EQ(fac.factors[0].second, 1u);
    EXPECT_EQ(fac.factors[1].second, 1u);
}

TEST(Factor, ExtractsContent) {
    auto fac = factor_over_integers(P("6*x^2-6"));
    EXPECT_EQ(fac.content, 6);
    ASSERT_EQ(fac.factors.size(), 2u);
    EXPECT_EQ(fac.factors[0].first, P("x-1"));
    EXPECT_EQ(fac.factors[1].first, P("x+1"));
}

TEST(Factor, IrreducibleQuadratic) {
    // Rational root oracle: ±1, ±2 are not roots of x^2-2, so it is irreducible.
    ASSERT_TRUE(oracle::rational_roots(P("x^2-2")).empty());
    auto fac = factor_over_integers(P("x^2-2"));
    EXPECT_EQ(fac.content, 1);
    ASSERT_EQ(fac.factors.size(), 1u);
    EXPECT_EQ(fac.factors[0].first, P("x^2-2"));
}

TEST(Factor, ZeroPolynomialIsRejected) {
    try {
        factor_over_integers(IntPolynomial());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    }
}

TEST(Factor, NegativeLeadingCoefficientGoesToContent) {
    auto fac = factor_over_integers(P("-x^2+1"));
    EXPECT_EQ(fac.content, -1);
    expect_valid(P("-x^2+1"), fac);
}

TEST(Factor, Multiplicities) {
    IntPolynomial f = P("x^3") * P("x-1") * P("x-1") * P("x^2+1") * Integer(-10);
    auto fac = factor_over_integers(f);
    expect_valid(f, fac);
    ASSERT_EQ(fac.factors.size(), 3u);
    // Same degree: ascending coefficients put x - 1 = [-1, 1] before x = [0, 1].
    EXPECT_EQ(fac.factors[0], std::make_pair(P("x-1"), 2u));
    EXPECT_EQ(fac.factors[1], std::make_pair(P("x"), 3u));
    EXPECT_EQ(fac.factors[2], std::make_pair(P("x^2+1"), 1u));
}

TEST(Factor, SwinnertonDyerStyleRecombination) {
    // x^4 - 10x^2 + 1 is irreducible over Z but splits modulo every prime.
    auto fac = factor_over_integers(P("x^4-10*x^2+1"));
    ASSERT_EQ(fac.factors.size(), 1u);
    EXPECT_EQ(fac.factors[0].first, P("x^4-10*x^2+1"));
    // A product of two such quartics has to be split back apart by recombination.
    IntPolynomial f = P("x^4-10*x^2+1") * P("x^4-4*x^2+1");
    auto fac2 = factor_over_integers(f);
    expect_valid(f, fac2);
    EXPECT_EQ(fac2.factors.size(), 2u);
}

TEST(Factor, CyclotomicProducts) {
    IntPolynomial f = P("x^12-1");
    auto fac = factor_over_integers(f);
    expect_valid(f, fac);
    EXPECT_EQ(fac.factors.size(), 6u);  // Φ1, Φ2, Φ3, Φ4, Φ6, Φ12
}

TEST(Factor, NonMonicFactors) {
    IntPolynomial f = P("2*x-3") * P("3*x^2+x+5") * P("5*x^3-2");
    auto fac = factor_over_integers(f);
    expect_valid(f, fac);
    EXPECT_EQ(fac.factors.size(), 3u);
}

TEST(Factor, SquareFreeDecomposition) {
    IntPolynomial f = P("x+1") * P("x-2") * P("x-2") * P("x^2+1") * P("x^2+1") * P("x^2+1");
    auto sqf = square_free_decomposition(f);
    ASSERT_EQ(sqf.size(), 3u);
    EXPECT_EQ(sqf[0], std::make_pair(P("x+1"), 1u));
    EXPECT_EQ(sqf[1], std::make_pair(P("x-2"), 2u));
    EXPECT_EQ(sqf[2], std::make_pair(P("x^2+1"), 3u));
    EXPECT_TRUE(is_square_free(P("x^2-2")));
    EXPECT_FALSE(is_square_free(f));
}

TEST(FactorProperty, RoundTripOnRandomProducts) {
    // Products of small irreducibles drawn from a fixed pool; every output
    // factor of degree <= 3 must pass the rational-root/discriminant oracle.
    const std::vector<IntPolynomial> pool = {P("x"),       P("x-1"),     P("x+1"),      P("x-2"),   P("2*x+1"),
                                             P("3*x-2"),   P("x^2+1"),   P("x^2-2"),    P("x^2+x+1"), P("2*x^2-3"),
                                             P("x^3-x-1"), P("x^3+2"),   P("x^2-x-1"),  P("5*x^2+x+7")};
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_int_distribution<long> scale(-6, 6);
    for (int trial = 0; trial < 150; ++trial) {
        IntPolynomial f = IntPolynomial::constant(1);
        const int k = count(rng);
        for (int i = 0; i < k; ++i) f = f * pool[pick(rng)];
        long s = scale(rng);
        if (s == 0) s = 1;
        f = f * Integer(s);
        auto fac = factor_over_integers(f);
        expect_valid(f, fac);
        EXPECT_EQ(abs(fac.content), abs(Integer(s)));
    }
}

TEST(FactorProperty, AgreesWithRationalRootOracleUpToCubic) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 0; trial < 400; ++trial) {
        const int deg = 1 + trial % 3;
        std::vector<Integer> c(static_cast<std::size_t>(deg + 1));
        for (auto& x : c) x = coef(rng);
        if (c.back() == 0) c.back() = 1;
        IntPolynomial f(c);
        f = f.primitive_part();
        const bool oracle_irreducible = oracle::irreducible_small_degree(f);
        EXPECT_EQ(is_irreducible(f), oracle_irreducible) << f;
    }
}
