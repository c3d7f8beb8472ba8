#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "sumgrowth/error.hpp"
#include "sumgrowth/factor.hpp"
#include "sumgrowth/roots.hpp"

using namespace sumgrowth;

namespace {

IntPolynomial P(const char* s) { return IntPolynomial::parse(s); }

RootOptions with_tol(double tol) {
    RootOptions o;
    o.tolerance = Rational(tol);
    return o;
}

}  // namespace

TEST(Roots, SqrtTwo) {
    auto roots = complex_roots_certified(P("x^2-2"), with_tol(1e-12));
    ASSERT_EQ(roots.size(), 2u);
    // Independent bracket of sqrt(2) by rational bisection.
    auto [lo, hi] = oracle::sqrt_bracket(2, 80);
    for (const auto& r : roots) {
        EXPECT_TRUE(r.on_real_axis());
        EXPECT_LE(r.radius, Rational(1e-12));
    }
    // Disk of the positive root must contain the bracket and vice versa.
    EXPECT_LE(roots[1].re - roots[1].radius, hi);
    EXPECT_GE(roots[1].re + roots[1].radius, lo);
    EXPECT_LE(abs(roots[1].re - lo), roots[1].radius + (hi - lo));
    EXPECT_EQ(roots[0].re, -roots[1].re);
}

TEST(Roots, ImaginaryUnit) {
    auto roots = complex_roots_certified(P("x^2+1"), with_tol(1e-12));
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_NEAR(roots[0].real(), 0, 1e-12);
    EXPECT_NEAR(roots[0].imag(), -1, 1e-12);
    EXPECT_NEAR(roots[1].imag(), 1, 1e-12);
    EXPECT_EQ(roots[0].re, roots[1].re);
    EXPECT_EQ(roots[0].im, -roots[1].im);
}

TEST(Roots, LinearIsExact) {
    auto roots = complex_roots_certified(P("x-7"), with_tol(1e-12));
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_EQ(roots[0].re, 7);
    EXPECT_EQ(roots[0].im, 0);
    EXPECT_EQ(roots[0].radius, 0);
    auto third = complex_roots_certified(P("3*x-1"));
    EXPECT_EQ(third[0].re, Rational(1, 3));
}

TEST(Roots, RejectsRepeatedRoots) {
    try {
        complex_roots_certified(P("x^2-2*x+1"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    }
}

TEST(Roots, ClusteredRootsNeedMorePrecision) {
    // Mignotte-like polynomial x^5 - 2(100x - 1)^2 has two roots about 1e-6 apart.
    IntPolynomial f = P("x^5") - P("100*x-1") * P("100*x-1") * Integer(2);
    auto roots = complex_roots_certified(f, with_tol(1e-30));
    ASSERT_EQ(roots.size(), 5u);
    for (const auto& r : roots) EXPECT_LE(r.radius, Rational(1e-30));
}

TEST(RootsProperty, VietaReconstruction) {
    // |lc| * prod (x - center), expanded in floating point, matches f within
    // the propagated enclosure error.
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coef(-9, 9);
    int checked = 0;
    while (checked < 60) {
        const int deg = 2 + checked % 6;
        std::vector<Integer> c(static_cast<std::size_t>(deg + 1));
        for (auto& x : c) x = coef(rng);
        if (c.back() == 0) c.back() = 1;
        IntPolynomial f(c);
        if (!is_square_free(f) || f.degree() != deg) continue;
        auto roots = complex_roots_certified(f, with_tol(1e-20));
        ASSERT_EQ(roots.size(), static_cast<std::size_t>(deg));
        std::vector<std::complex<long double>> prod{1.0L};
        for (const auto& r : roots) {
            std::complex<long double> z(r.re.get_d(), r.im.get_d());
            std::vector<std::complex<long double>> next(prod.size() + 1);
            for (std::size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] += prod[i];
                next[i] -= z * prod[i];
            }
            prod = next;
        }
        long double scale = 1;
        for (const auto& r : roots) scale *= 1 + std::abs(std::complex<long double>(r.re.get_d(), r.im.get_d()));
        const long double lc = f.leading().get_d();
        for (int i = 0; i <= deg; ++i) {
            long double got = lc * prod[static_cast<std::size_t>(i)].real();
            EXPECT_NEAR(static_cast<double>(got), f.coeff(static_cast<std::size_t>(i)).get_d(),
                        static_cast<double>(std::fabs(lc) * scale * 1e-12L))
                << f;
            EXPECT_NEAR(static_cast<double>(lc * prod[static_cast<std::size_t>(i)].imag()), 0.0,
                        static_cast<double>(std::fabs(lc) * scale * 1e-12L));
        }
        // Disjointness of the certified disks.
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                Rational dr = roots[i].re - roots[j].re, di = roots[i].im - roots[j].im;
                Rational reach = roots[i].radius + roots[j].radius;
                EXPECT_GT(dr * dr + di * di, reach * reach);
            }
        ++checked;
    }
}
