#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "sumgrowth/error.hpp"
#include "sumgrowth/factor.hpp"
#include "sumgrowth/heights.hpp"

using namespace sumgrowth;

namespace {

IntPolynomial P(const char* s) { return IntPolynomial::parse(s); }

/// Enclosure of 3 + 2*sqrt(2) from the bisection oracle.
std::pair<Rational, Rational> three_plus_two_root_two() {
    auto [lo, hi] = oracle::sqrt_bracket(2, 80);
    return {3 + 2 * lo, 3 + 2 * hi};
}

void expect_encloses(const RealInterval& iv, const std::pair<Rational, Rational>& truth) {
    EXPECT_LE(iv.lo(), truth.second) << iv.render_bounds();
    EXPECT_GE(iv.hi(), truth.first) << iv.render_bounds();
}

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidInput;
}

LatticeOperator random_operator(std::mt19937_64& rng, std::size_t d, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<Integer> e(d * d);
    for (auto& x : e) x = dist(rng);
    return LatticeOperator(d, std::move(e));
}

}  // namespace

TEST(HeightIrreducible, LinearIsExact) {
    auto h = height_irreducible(P("x-2"));
    EXPECT_EQ(h.lo(), 3);
    EXPECT_EQ(h.hi(), 3);
    auto h2 = height_irreducible(P("2*x-3"));
    EXPECT_EQ(h2.lo(), 5);
    EXPECT_EQ(h2.hi(), 5);
}

TEST(HeightIrreducible, QuadraticSurd) {
    auto h = height_irreducible(P("x^2-2"));
    expect_encloses(h, three_plus_two_root_two());
    EXPECT_LE(h.width(), kDefaultHeightTolerance);
}

TEST(HeightIrreducible, RejectsBadInput) {
    EXPECT_EQ(kind_of([] { height_irreducible(P("x^2-1")); }), ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of([] { height_irreducible(P("2*x-4")); }), ErrorKind::InvalidInput);
    EXPECT_EQ(kind_of([] { height_irreducible(P("5")); }), ErrorKind::InvalidInput);
}

TEST(HeightPoly, Examples) {
    auto h = height_poly(P("x^2-5*x+6"));
    EXPECT_EQ(h.lo(), 3);
    EXPECT_EQ(h.hi(), 3);
    expect_encloses(height_poly(P("x^2-2")), three_plus_two_root_two());
    EXPECT_EQ(kind_of([] { height_poly(P("5")); }), ErrorKind::InfiniteHeight);
}

TEST(HeightPoly, MinimizerPicksSmallestFactor) {
    // (x^2 - 2)(x - 7): 5.83 < 8.
    auto m = minimize_height(P("x^2-2") * P("x-7"));
    EXPECT_EQ(m.divisor, P("x^2-2"));
    EXPECT_FALSE(m.tie);
    // (x - 2)(x + 2): both have height 3 exactly, tie resolved canonically.
    auto t = minimize_height(P("x^2-4"));
    EXPECT_EQ(t.divisor, P("x-2"));
    EXPECT_TRUE(t.tie);
}

TEST(HeightOperator, Examples) {
    auto h = h_of_operator(LatticeOperator::diagonal({2, 3}));
    EXPECT_EQ(h.lo(), 12);
    EXPECT_EQ(h.hi(), 12);
    expect_encloses(h_of_operator(LatticeOperator{{0, 2}, {1, 0}}), three_plus_two_root_two());
    auto z = h_of_operator(LatticeOperator::zero(2));
    EXPECT_EQ(z.lo(), 1);
    EXPECT_EQ(z.hi(), 1);
}

TEST(HeightCirc, Examples) {
    auto h = h_circ_of_operator(LatticeOperator::diagonal({2, 3}));
    EXPECT_EQ(h.lo(), 3);
    EXPECT_EQ(h.hi(), 3);
    expect_encloses(h_circ_of_operator(LatticeOperator{{0, 2}, {1, 0}}), three_plus_two_root_two());
    auto id = h_circ_of_operator(LatticeOperator::identity(2));
    EXPECT_EQ(id.lo(), 2);
    EXPECT_EQ(id.hi(), 2);
}

TEST(HeightCirc, NegativeIdentityIsTwo) {
    for (std::size_t d = 1; d <= 4; ++d) {
        auto T = Integer(-1) * LatticeOperator::identity(d);
        auto h = h_circ_of_operator(T);
        EXPECT_EQ(h.lo(), 2);
        EXPECT_EQ(h.hi(), 2);
    }
    // Any operator with eigenvalue -1 and no eigenvalue 0 or 1.
    auto h = h_circ_of_operator(LatticeOperator{{-1, 5}, {0, 7}});
    EXPECT_EQ(h.lo(), 2);
    EXPECT_EQ(h.hi(), 2);
}

TEST(InvariantSubspace, Examples) {
    auto r = minimizing_invariant_subspace(LatticeOperator::diagonal({2, 3}));
    ASSERT_EQ(r.basis.size(), 1u);
    EXPECT_EQ(r.basis[0], (RationalVector{1, 0}));
    EXPECT_EQ(r.restriction(0, 0), 2);
    EXPECT_EQ(r.divisor, P("x-2"));
    EXPECT_EQ(r.height.lo(), 3);

    auto q = minimizing_invariant_subspace(LatticeOperator{{0, 2}, {1, 0}});
    EXPECT_EQ(q.basis.size(), 2u);
    EXPECT_EQ(q.divisor, P("x^2-2"));
    expect_encloses(q.height, three_plus_two_root_two());

    auto id = minimizing_invariant_subspace(LatticeOperator::identity(2));
    ASSERT_EQ(id.basis.size(), 1u);
    EXPECT_EQ(id.basis[0], (RationalVector{1, 0}));
    EXPECT_EQ(id.restriction(0, 0), 1);
    EXPECT_EQ(id.divisor, P("x-1"));
    EXPECT_EQ(id.height.lo(), 2);
}

TEST(InvariantSubspace, PrefersLowerDegreeOnTie) {
    // x - 2 and x + 2 both have height 3; with (x^2 - 2) absent, the linear one wins.
    // Companion of (x - 3)(x^2 + 2) = x^3 - 3x^2 + 2x - 6: H(x-3)=4, H(x^2+2)=3 (|λ|=√2, (1+√2)^2 ≈ 5.83).
    auto r = minimizing_invariant_subspace(LatticeOperator::companion(P("x^3-3*x^2+2*x-6")));
    EXPECT_EQ(r.divisor, P("x-3"));
    EXPECT_EQ(r.basis.size(), 1u);
}

TEST(HeightsProperty, CircBelowFull) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 80; ++t) {
        auto T = random_operator(rng, 1 + static_cast<std::size_t>(t % 4), -5, 5);
        auto hc = h_circ_of_operator(T);
        auto ho = h_of_operator(T);
        EXPECT_LE(hc.lo(), ho.hi()) << T.to_string();
    }
}

TEST(HeightsProperty, IrreducibleHeightAtLeastOne) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> coef(-20, 20);
    int checked = 0;
    while (checked < 60) {
        const int deg = 1 + checked % 4;
        std::vector<Integer> c(static_cast<std::size_t>(deg + 1));
        for (auto& x : c) x = coef(rng);
        if (c.back() == 0) continue;
        IntPolynomial g(c);
        if (g.content() != 1 || !is_irreducible(g)) continue;
        EXPECT_GE(height_irreducible(g).hi(), 1) << g;
        ++checked;
    }
}

TEST(HeightsProperty, SubspaceMatchesMinimumOverDivisors) {
    std::mt19937_64 rng(31);
    int checked = 0;
    int attempts = 0;
    while (checked < 40 && attempts < 2000) {
        ++attempts;
        auto T = random_operator(rng, 2 + static_cast<std::size_t>(checked % 3), -4, 4);
        auto f = char_poly(T);
        auto fac = factor_over_integers(f);
        if (fac.factors.size() == 1 && fac.factors[0].second == 1) continue;
        // Independent minimum by scanning every irreducible factor.
        RealInterval best;
        bool have = false;
        for (const auto& [g, m] : fac.factors) {
            auto h = height_irreducible(g);
            if (!have || h.hi() < best.lo()) best = h, have = true;
            else if (h.lo() < best.lo()) best = RealInterval(h.lo(), std::max(best.hi(), h.hi()));
        }
        auto r = minimizing_invariant_subspace(T);
        EXPECT_TRUE(r.height.overlaps(best)) << T.to_string();

        // Invariants of the result.
        EXPECT_TRUE(is_irreducible(r.divisor));
        EXPECT_TRUE(divides_exactly(r.divisor, f));
        auto cr = char_poly(r.restriction);
        ASSERT_EQ(cr.size(), r.divisor.coefficients().size());
        for (std::size_t i = 0; i < cr.size(); ++i) EXPECT_EQ(cr[i], Rational(r.divisor.coeff(i)));
        const std::size_t d = T.dimension();
        auto B = RationalMatrix::from_columns(r.basis, d);
        for (const auto& v : r.basis) {
            RationalVector coords;
            EXPECT_TRUE(solve_in_basis(r.basis, T.apply(v), coords));
        }
        EXPECT_EQ(B.rank(), r.basis.size());
        ++checked;
    }
    EXPECT_EQ(checked, 40);
}
