#include <gtest/gtest.h>

#include <random>

#include "sumgrowth/error.hpp"
#include "sumgrowth/matrix.hpp"

using namespace sumgrowth;

namespace {

IntPolynomial P(const char* s) { return IntPolynomial::parse(s); }

LatticeOperator random_operator(std::mt19937_64& rng, std::size_t d, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<Integer> e(d * d);
    for (auto& x : e) x = dist(rng);
    return LatticeOperator(d, std::move(e));
}

bool is_zero(const LatticeOperator& T) {
    for (const auto& e : T.entries())
        if (e != 0) return false;
    return true;
}

}  // namespace

TEST(CharPoly, Examples) {
    EXPECT_EQ(char_poly(LatticeOperator::identity(2)), P("x^2-2*x+1"));
    EXPECT_EQ(char_poly(LatticeOperator{{0, 2}, {1, 0}}), P("x^2-2"));
    EXPECT_EQ(char_poly(LatticeOperator::diagonal({2, 3})), P("x^2-5*x+6"));
}

TEST(CharPoly, CompanionRecoversPolynomial) {
    for (const char* s : {"x^3-x-1", "x^4-10*x^2+1", "x-7", "x^5+3*x^2-x+11"}) {
        IntPolynomial f = P(s);
        EXPECT_EQ(char_poly(LatticeOperator::companion(f)), f) << s;
    }
}

TEST(CharPoly, RationalVersionMatchesInteger) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto T = random_operator(rng, 1 + t % 4, -9, 9);
        auto rc = char_poly(RationalMatrix(T));
        auto ic = char_poly(T);
        ASSERT_EQ(rc.size(), ic.coefficients().size());
        for (std::size_t i = 0; i < rc.size(); ++i) EXPECT_EQ(rc[i], Rational(ic.coeff(i)));
    }
}

TEST(CharPolyProperty, CayleyHamilton) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = 1 + static_cast<std::size_t>(t % 5);
        auto T = random_operator(rng, d, -9, 9);
        auto f = char_poly(T);
        EXPECT_EQ(f.degree(), static_cast<int>(d));
        EXPECT_TRUE(f.is_monic());
        EXPECT_TRUE(is_zero(evaluate_at(f, T))) << T.to_string();
    }
}

TEST(MinimalPoly, Examples) {
    EXPECT_EQ(minimal_poly(LatticeOperator::diagonal({2, 2})), P("x-2"));
    EXPECT_EQ(minimal_poly(LatticeOperator{{0, 2}, {1, 0}}), P("x^2-2"));
    EXPECT_EQ(minimal_poly(LatticeOperator::identity(3)), P("x-1"));
    EXPECT_EQ(minimal_poly(LatticeOperator{{1, 1}, {0, 1}}), P("x^2-2*x+1"));
    EXPECT_EQ(minimal_poly(LatticeOperator::zero(3)), P("x"));
}

TEST(MinimalPolyProperty, DividesCharPolyAndAnnihilates) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 150; ++t) {
        const std::size_t d = 1 + static_cast<std::size_t>(t % 4);
        // Small entry range makes repeated eigenvalues common.
        auto T = random_operator(rng, d, -2, 2);
        auto m = minimal_poly(T);
        EXPECT_TRUE(m.is_monic());
        EXPECT_TRUE(is_zero(evaluate_at(m, T)));
        EXPECT_TRUE(divides_exactly(m, char_poly(T))) << T.to_string();
        // No proper monic divisor of lower degree annihilates T: check that the
        // powers I..T^{deg m - 1} are independent.
        RationalMatrix powers(d * d, static_cast<std::size_t>(m.degree()));
        LatticeOperator Pk = LatticeOperator::identity(d);
        for (int k = 0; k < m.degree(); ++k) {
            for (std::size_t i = 0; i < d * d; ++i) powers(i, static_cast<std::size_t>(k)) = Pk.entries()[i];
            Pk = T * Pk;
        }
        EXPECT_EQ(powers.rank(), static_cast<std::size_t>(m.degree()));
    }
}

TEST(Kernel, Examples) {
    auto k1 = kernel_of_poly_at(P("x-2"), LatticeOperator::diagonal({2, 3}));
    ASSERT_EQ(k1.size(), 1u);
    EXPECT_EQ(k1[0], (RationalVector{1, 0}));

    auto T = LatticeOperator{{1, 4, -2}, {0, 3, 5}, {2, 2, 1}};
    auto full = kernel_of_poly_at(char_poly(T), T);
    ASSERT_EQ(full.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        RationalVector e(3);
        e[i] = 1;
        EXPECT_EQ(full[i], e);
    }

    EXPECT_TRUE(kernel_of_poly_at(P("x-5"), LatticeOperator::diagonal({2, 3})).empty());
}

TEST(Kernel, RejectsZeroPolynomial) {
    EXPECT_THROW(kernel_of_poly_at(IntPolynomial(), LatticeOperator::identity(2)), Error);
}

TEST(KernelProperty, VectorsAreAnnihilated) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
        auto T = random_operator(rng, d, -3, 3);
        auto f = char_poly(T);
        // Use the lowest-degree monic divisor x - r for an integer eigenvalue, if any,
        // otherwise the whole characteristic polynomial.
        IntPolynomial g = f;
        for (long r = -12; r <= 12; ++r)
            if (f.evaluate(r) == 0) {
                g = IntPolynomial{-r, 1};
                break;
            }
        auto basis = kernel_of_poly_at(g, T);
        EXPECT_FALSE(basis.empty());
        RationalMatrix gT(evaluate_at(g, T));
        for (const auto& v : basis) {
            RationalMatrix col = RationalMatrix::from_columns({v}, d);
            EXPECT_TRUE((gT * col).is_zero());
        }
        EXPECT_EQ(RationalMatrix::from_rows(basis, d).rank(), basis.size());
    }
}

TEST(SolveInBasis, DetectsOutsideSpan) {
    RationalVector coords;
    std::vector<RationalVector> basis = {{1, 1, 0}};
    EXPECT_TRUE(solve_in_basis(basis, {3, 3, 0}, coords));
    EXPECT_EQ(coords, (RationalVector{3}));
    EXPECT_FALSE(solve_in_basis(basis, {1, 0, 0}, coords));
}
