#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the routines it is used to check.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sumgrowth/int_poly.hpp"

namespace oracle {

using sumgrowth::IntPolynomial;
using sumgrowth::Integer;
using sumgrowth::Rational;

inline Rational eval(const IntPolynomial& f, const Rational& x) {
    Rational acc = 0;
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

inline std::vector<Integer> positive_divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

/// Rational roots by the rational root theorem (brute force over p/q).
inline std::set<Rational> rational_roots(const IntPolynomial& f) {
    std::set<Rational> roots;
    if (f.degree() < 1) return roots;
    IntPolynomial g = f;
    // Strip x factors.
    std::size_t shift = 0;
    while (g.coeff(shift) == 0) ++shift;
    if (shift > 0) roots.insert(0);
    const Integer a0 = g.coeff(shift);
    const Integer an = g.leading();
    for (const auto& p : positive_divisors(a0))
        for (const auto& q : positive_divisors(an))
            for (int sign : {1, -1}) {
                Rational r(sign * p, q);
                r.canonicalize();
                if (eval(f, r) == 0) roots.insert(r);
            }
    return roots;
}

inline bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

/// Irreducibility over Z for primitive polynomials of degree <= 3: no rational
/// root, and for degree 2 a non-square discriminant.
inline bool irreducible_small_degree(const IntPolynomial& f) {
    if (f.degree() == 1) return f.content() == 1;
    if (f.content() != 1) return false;
    const bool no_roots = rational_roots(f).empty();
    if (f.degree() == 2) {
        const Integer disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(2) * f.coeff(0);
        const bool non_square = !is_perfect_square(disc);
        if (no_roots != non_square) throw std::logic_error("oracle disagreement for quadratic");
        return non_square;
    }
    return no_roots;
}

/// [lo, hi] with lo^2 <= n <= hi^2 and hi - lo <= 2^-bits, by bisection.
inline std::pair<Rational, Rational> sqrt_bracket(const Rational& n, unsigned bits) {
    Rational lo = 0, hi = n > 1 ? n : Rational(1);
    const Rational eps(Integer(1), Integer(1) << bits);
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= n) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

inline Rational from_double(double v) { return Rational(v); }

using Point = std::vector<long long>;
using Matrix = std::vector<std::vector<long long>>;

/// |{a + T b}| by the quadratic double loop over plain machine integers.
inline std::size_t naive_sumset_size(const std::vector<Point>& a, const Matrix& t) {
    std::set<Point> sums;
    for (const auto& b : a) {
        Point tb(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) tb[i] += t[i][j] * b[j];
        for (const auto& x : a) {
            Point s(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + tb[i];
            sums.insert(s);
        }
    }
    return sums.size();
}

/// Random set of n distinct points in [lo, hi]^d.
inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n, std::size_t d, long long lo, long long hi) {
    long double room = 1;
    for (std::size_t k = 0; k < d; ++k) room *= static_cast<long double>(hi - lo + 1);
    if (room < static_cast<long double>(n)) throw std::logic_error("random_points: box holds fewer than n points");
    std::uniform_int_distribution<long long> u(lo, hi);
    std::set<Point> pts;
    while (pts.size() < n) {
        Point p(d);
        for (auto& c : p) c = u(rng);
        pts.insert(p);
    }
    return {pts.begin(), pts.end()};
}

/// 2-d density by direct window scan: every lattice point of the cell
/// [x0, x0+side) x [y0, y0+side) has a point of `pts` inside the cell within
/// L∞ distance `radius`.
inline bool naive_dense_2d(const std::set<std::pair<long long, long long>>& pts, long long x0, long long y0, long long side,
                           long long radius) {
    std::vector<char> occ(static_cast<std::size_t>(side * side), 0);
    for (const auto& [x, y] : pts)
        if (x >= x0 && x < x0 + side && y >= y0 && y < y0 + side) occ[static_cast<std::size_t>((x - x0) * side + (y - y0))] = 1;
    for (long long x = 0; x < side; ++x)
        for (long long y = 0; y < side; ++y) {
            bool hit = false;
            for (long long u = std::max(0LL, x - radius); u <= std::min(side - 1, x + radius) && !hit; ++u)
                for (long long v = std::max(0LL, y - radius); v <= std::min(side - 1, y + radius) && !hit; ++v)
                    hit = occ[static_cast<std::size_t>(u * side + v)] != 0;
            if (!hit) return false;
        }
    return true;
}

/// Number of distinct points sum c_j g_j over the coefficient box prod [lo_j, hi_j].
inline std::size_t gap_distinct_points(const std::vector<Point>& gens, const std::vector<std::pair<long long, long long>>& ranges) {
    std::set<Point> seen;
    std::vector<long long> c(gens.size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = ranges[j].first;
    const std::size_t d = gens.empty() ? 0 : gens[0].size();
    while (true) {
        Point p(d, 0);
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (std::size_t i = 0; i < d; ++i) p[i] += c[j] * gens[j][i];
        seen.insert(p);
        std::size_t k = c.size();
        while (k > 0 && c[k - 1] == ranges[k - 1].second) c[k - 1] = ranges[k - 1].first, --k;
        if (k == 0) return seen.size();
        ++c[k - 1];
    }
}

}  // namespace oracle
