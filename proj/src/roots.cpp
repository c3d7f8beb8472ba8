#include "sumgrowth/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mp_real.hpp"
#include "sumgrowth/error.hpp"
#include "sumgrowth/factor.hpp"

namespace sumgrowth {

namespace {

using detail::MpComplex;
using detail::MpReal;

struct GaussRational {
    Rational re, im;
};

GaussRational mul(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRational evaluate_exact(const IntPolynomial& f, const GaussRational& z) {
    GaussRational acc{0, 0};
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = mul(acc, z);
        acc.re += *it;
    }
    return acc;
}

std::vector<MpComplex> initial_guesses(const IntPolynomial& f, mpfr_prec_t prec) {
    // Fujiwara-type radius: 2 * max |a_{n-k}/a_n|^{1/k}.
    const int n = f.degree();
    const double lc = std::fabs(f.leading().get_d());
    double radius = 0;
    for (int k = 1; k <= n; ++k) {
        const double a = std::fabs(f.coeff(static_cast<std::size_t>(n - k)).get_d()) / lc;
        if (a > 0) radius = std::max(radius, std::pow(a, 1.0 / k));
    }
    radius = std::max(2 * radius, 1e-3);
    std::vector<MpComplex> z;
    for (int k = 0; k < n; ++k) {
        const double theta = 2 * std::numbers::pi * k / n + 0.7;
        z.emplace_back(MpReal(prec, radius * std::cos(theta)), MpReal(prec, radius * std::sin(theta)));
    }
    return z;
}

void aberth(const IntPolynomial& f, std::vector<MpComplex>& z, mpfr_prec_t prec) {
    const std::size_t n = z.size();
    std::vector<MpReal> coeffs;
    for (const auto& c : f.coefficients()) coeffs.emplace_back(prec, Rational(c));
    const MpReal zero(prec);
    const MpReal one(prec, 1.0);
    const MpReal threshold(prec, std::ldexp(1.0, -static_cast<int>(prec) + 8));
    const int max_iter = 200 + 20 * static_cast<int>(n);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            MpComplex p{zero, zero}, dp{zero, zero};
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
                dp = dp * z[i] + p;
                p = p * z[i] + MpComplex{*it, zero};
            }
            if (mpfr_zero_p(p.re.get()) && mpfr_zero_p(p.im.get())) continue;
            if (mpfr_zero_p(dp.re.get()) && mpfr_zero_p(dp.im.get())) {
                // Nudge off a critical point.
                z[i].re = z[i].re + MpReal(prec, 1e-3);
                converged = false;
                continue;
            }
            MpComplex ratio = p / dp;
            MpComplex sum{zero, zero};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                MpComplex diff = z[i] - z[j];
                if (mpfr_zero_p(diff.re.get()) && mpfr_zero_p(diff.im.get())) continue;
                sum = sum + MpComplex{one, zero} / diff;
            }
            MpComplex w = ratio / (MpComplex{one, zero} - ratio * sum);
            z[i] = z[i] - w;
            MpReal scale = z[i].norm() + one;
            if (mpfr_cmp(w.norm().get(), (threshold * threshold * scale).get()) > 0) converged = false;
        }
        if (converged) break;
    }
}

// Makes the approximations exactly conjugate-symmetric: near-real values are
// projected onto the axis and upper-half values are paired with their closest
// lower-half partner.
void symmetrize(std::vector<MpComplex>& z, mpfr_prec_t prec) {
    const MpReal one(prec, 1.0);
    const MpReal eps(prec, std::ldexp(1.0, -static_cast<int>(prec) / 2));
    std::vector<std::size_t> upper, lower;
    for (std::size_t i = 0; i < z.size(); ++i) {
        MpReal scale = (z[i].norm() + one) * eps * eps;
        if (mpfr_cmp((z[i].im * z[i].im).get(), scale.get()) <= 0) {
            mpfr_set_zero(z[i].im.get(), 1);
        } else if (mpfr_sgn(z[i].im.get()) > 0) {
            upper.push_back(i);
        } else {
            lower.push_back(i);
        }
    }
    if (upper.size() != lower.size()) return;
    std::vector<bool> used(lower.size(), false);
    for (std::size_t u : upper) {
        std::size_t best = lower.size();
        MpReal best_d(prec);
        for (std::size_t k = 0; k < lower.size(); ++k) {
            if (used[k]) continue;
            MpComplex conj{z[u].re, -z[u].im};
            MpReal d = (z[lower[k]] - conj).norm();
            if (best == lower.size() || mpfr_cmp(d.get(), best_d.get()) < 0) {
                best = k;
                best_d = d;
            }
        }
        used[best] = true;
        z[lower[best]].re = z[u].re;
        z[lower[best]].im = -z[u].im;
    }
}

bool certify(const IntPolynomial& f, const std::vector<MpComplex>& z, std::vector<ComplexEnclosure>& out) {
    const std::size_t n = z.size();
    std::vector<GaussRational> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = {z[i].re.to_rational(), z[i].im.to_rational()};
    const Rational lc2 = Rational(f.leading() * f.leading());
    out.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        GaussRational v = evaluate_exact(f, c[i]);
        Rational num = v.re * v.re + v.im * v.im;
        Rational den = lc2;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Rational dr = c[i].re - c[j].re, di = c[i].im - c[j].im;
            den *= dr * dr + di * di;
        }
        if (den == 0) return false;
        out[i].re = c[i].re;
        out[i].im = c[i].im;
        out[i].radius = num == 0 ? Rational(0) : detail::sqrt_upper(Rational(n * n) * num / den, 64);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational dr = c[i].re - c[j].re, di = c[i].im - c[j].im;
            Rational reach = out[i].radius + out[j].radius;
            if (dr * dr + di * di <= reach * reach) return false;
        }
    return true;
}

}  // namespace

std::vector<ComplexEnclosure> complex_roots_certified(const IntPolynomial& f, const RootOptions& options) {
    require(!f.is_zero(), "roots of the zero polynomial");
    require(options.tolerance > 0, "root tolerance must be positive");
    std::vector<ComplexEnclosure> out;
    if (f.degree() <= 0) return out;
    if (!is_square_free(f)) fail(ErrorKind::InvalidInput, "polynomial is not square-free: " + f.to_string());
    if (f.degree() == 1) {
        out.push_back({Rational(-f.coeff(0), f.coeff(1)), 0, 0});
        out.front().re.canonicalize();
        return out;
    }

    mpfr_prec_t prec = std::max<unsigned>(options.initial_bits, 64);
    std::vector<MpComplex> z = initial_guesses(f, prec);
    while (prec <= static_cast<mpfr_prec_t>(options.max_bits)) {
        for (auto& v : z) {
            MpReal re(prec), im(prec);
            mpfr_set(re.get(), v.re.get(), MPFR_RNDN);
            mpfr_set(im.get(), v.im.get(), MPFR_RNDN);
            v = MpComplex{std::move(re), std::move(im)};
        }
        aberth(f, z, prec);
        symmetrize(z, prec);
        if (certify(f, z, out)) {
            bool tight = std::all_of(out.begin(), out.end(),
                                     [&](const ComplexEnclosure& e) { return e.radius <= options.tolerance; });
            if (tight) {
                std::sort(out.begin(), out.end(), [](const ComplexEnclosure& a, const ComplexEnclosure& b) {
                    if (a.re != b.re) return a.re < b.re;
                    return a.im < b.im;
                });
                return out;
            }
        }
        prec *= 2;
    }
    fail(ErrorKind::PrecisionFailure, "root certification failed at " + std::to_string(options.max_bits) +
                                          " bits for " + f.to_string());
}

}  // namespace sumgrowth
