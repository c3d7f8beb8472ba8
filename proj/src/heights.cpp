#include "sumgrowth/heights.hpp"

#include <algorithm>
#include <map>

#include "mp_real.hpp"
#include "sumgrowth/error.hpp"
#include "sumgrowth/factor.hpp"
#include "sumgrowth/roots.hpp"

namespace sumgrowth {

namespace {

std::string format_mpfr(const char* fmt, int digits, const Rational& q, mpfr_rnd_t rnd) {
    detail::MpReal v(512, q, rnd);
    char* buf = nullptr;
    mpfr_asprintf(&buf, fmt, digits, v.get());
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

constexpr mpfr_prec_t kProductBits = 256;

// H(g) of an irreducible primitive g, without re-checking irreducibility.
RealInterval height_of_factor(const IntPolynomial& g, const Rational& tol) {
    if (g.degree() == 1) {
        // |a| + |b| for g = a x + b, exactly.
        return RealInterval::point(Rational(abs(g.coeff(1)) + abs(g.coeff(0))));
    }
    RootOptions opts;
    opts.tolerance = tol / (Rational(1 << 20) * g.degree());
    mpfr_prec_t bits = kProductBits;
    for (int attempt = 0; attempt < 8; ++attempt) {
        const auto roots = complex_roots_certified(g, opts);
        Rational lo = abs(g.leading()), hi = abs(g.leading());
        for (const auto& r : roots) {
            Rational abs_lo, abs_hi;
            if (r.on_real_axis()) {
                abs_lo = abs_hi = abs(r.re);
            } else {
                const Rational m2 = r.re * r.re + r.im * r.im;
                abs_lo = detail::sqrt_lower(m2, bits);
                abs_hi = detail::sqrt_upper(m2, bits);
            }
            Rational f_lo = 1 + std::max(Rational(0), Rational(abs_lo - r.radius));
            Rational f_hi = 1 + abs_hi + r.radius;
            lo = detail::round_rational(lo * f_lo, bits, MPFR_RNDD);
            hi = detail::round_rational(hi * f_hi, bits, MPFR_RNDU);
        }
        RealInterval out(lo, hi);
        if (out.width() <= tol) return out;
        opts.tolerance /= Rational(1 << 30);
        opts.initial_bits *= 2;
        bits *= 2;
    }
    fail(ErrorKind::PrecisionFailure, "height interval did not reach the requested width for " + g.to_string());
}

RealInterval power(const RealInterval& x, unsigned m) {
    RealInterval r = RealInterval::point(1);
    for (unsigned i = 0; i < m; ++i) r = r * x;
    return r;
}

}  // namespace

RealInterval::RealInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    require(lo_ <= hi_, "interval with lo > hi");
}

std::string RealInterval::render(int digits) const {
    const Rational radius = width() / 2;
    std::string mid = format_mpfr("%.*RNg", digits, midpoint(), MPFR_RNDN);
    std::string rad = radius == 0 ? std::string("0") : format_mpfr("%.*RUe", 1, radius, MPFR_RNDU);
    return mid + " ± " + rad;
}

std::string RealInterval::render_bounds(int digits) const { return "[" + lo_string(digits) + ", " + hi_string(digits) + "]"; }

std::string RealInterval::lo_string(int digits) const { return format_mpfr("%.*RDg", digits, lo_, MPFR_RNDD); }

std::string RealInterval::hi_string(int digits) const { return format_mpfr("%.*RUg", digits, hi_, MPFR_RNDU); }

std::string decimal_string(const Rational& q, int digits) { return format_mpfr("%.*RNg", digits, q, MPFR_RNDN); }

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    require(a.lo() >= 0 && b.lo() >= 0, "interval product expects nonnegative intervals");
    return {a.lo() * b.lo(), a.hi() * b.hi()};
}

RealInterval height_irreducible(const IntPolynomial& g, const Rational& tol) {
    require(g.degree() >= 1, "height of a constant polynomial");
    require(g.content() == 1, "height_irreducible expects a primitive polynomial: " + g.to_string());
    require(is_irreducible(g), "height_irreducible expects an irreducible polynomial: " + g.to_string());
    return height_of_factor(g, tol);
}

HeightMinimizer minimize_height(const IntPolynomial& f, const Rational& tol) {
    require(!f.is_zero(), "height of the zero polynomial");
    if (f.degree() == 0) fail(ErrorKind::InfiniteHeight, "no nonconstant integer divisors: H = infinity");
    const Factorization fac = factor_over_integers(f);

    std::vector<IntPolynomial> candidates;
    for (const auto& [g, m] : fac.factors) candidates.push_back(g);  // canonical order
    std::vector<RealInterval> heights;
    for (const auto& g : candidates) heights.push_back(height_of_factor(g, tol));

    Rational round_tol = tol;
    for (int round = 0; round < 4 && candidates.size() > 1; ++round) {
        Rational min_hi = heights.front().hi();
        for (const auto& h : heights) min_hi = std::min(min_hi, h.hi());
        std::vector<IntPolynomial> keep;
        std::vector<RealInterval> keep_h;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (heights[i].lo() <= min_hi) {
                keep.push_back(candidates[i]);
                keep_h.push_back(heights[i]);
            }
        candidates = std::move(keep);
        heights = std::move(keep_h);
        if (candidates.size() == 1) break;
        round_tol /= Rational(mpz_class(1) << 64);
        for (std::size_t i = 0; i < candidates.size(); ++i) heights[i] = height_of_factor(candidates[i], round_tol);
    }
    HeightMinimizer out{candidates.front(), heights.front(), candidates.size() > 1};
    return out;
}

RealInterval height_poly(const IntPolynomial& f, const Rational& tol) { return minimize_height(f, tol).height; }

RealInterval h_of_operator(const LatticeOperator& T, const Rational& tol) {
    const Factorization fac = factor_over_integers(char_poly(T));
    Rational factor_tol = tol / Rational(mpz_class(1) << 20);
    for (int attempt = 0; attempt < 6; ++attempt) {
        RealInterval acc = RealInterval::point(1);
        for (const auto& [g, m] : fac.factors) acc = acc * power(height_of_factor(g, factor_tol), m);
        if (acc.width() <= tol) return acc;
        factor_tol /= Rational(mpz_class(1) << 32);
    }
    fail(ErrorKind::PrecisionFailure, "H(T) interval did not reach the requested width");
}

RealInterval h_circ_of_operator(const LatticeOperator& T, const Rational& tol) { return height_poly(char_poly(T), tol); }

InvariantSubspaceResult minimizing_invariant_subspace(const LatticeOperator& T, const Rational& tol) {
    HeightMinimizer best = minimize_height(char_poly(T), tol);
    const IntPolynomial& g = best.divisor;
    require(g.is_monic(), "minimizing divisor is not monic");

    const auto beta = kernel_of_poly_at(g, T);
    require(!beta.empty(), "Ker g(T) is trivial for a divisor of the characteristic polynomial");
    InvariantSubspaceResult out;
    RationalVector v = beta.front();
    for (int k = 0; k < g.degree(); ++k) {
        out.basis.push_back(v);
        v = T.apply(v);
    }
    const std::size_t m = out.basis.size();
    out.restriction = RationalMatrix(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        RationalVector coords;
        const bool inside = solve_in_basis(out.basis, T.apply(out.basis[j]), coords);
        require(inside, "cyclic subspace is not invariant");
        for (std::size_t i = 0; i < m; ++i) out.restriction(i, j) = coords[i];
    }
    out.divisor = g;
    out.height = best.height;
    return out;
}

}  // namespace sumgrowth
