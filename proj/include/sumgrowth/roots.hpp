#pragma once

#include <vector>

#include "sumgrowth/int_poly.hpp"

namespace sumgrowth {

/// Closed disk {z : |z - center| <= radius} certified to contain exactly one
/// root of the polynomial it was computed for. Centers are exact rationals
/// (dyadic unless the root itself is rational); radius is an upper bound.
struct ComplexEnclosure {
    Rational re, im;
    Rational radius;

    double real() const { return re.get_d(); }
    double imag() const { return im.get_d(); }
    /// Real center; for a real polynomial such a disk holds a real root.
    bool on_real_axis() const { return im == 0; }
};

struct RootOptions {
    Rational tolerance{1, 1000000000000};  // 1e-12
    unsigned initial_bits = 128;
    unsigned max_bits = 16384;
};

/// Certified enclosures of all complex roots of a square-free integer
/// polynomial: Aberth–Ehrlich iteration in MPFR followed by an exact-rational
/// a posteriori check of the disks D(z_i, n|W_i|), where W_i is the
/// Weierstrass correction f(z_i) / (lc * prod_{j != i}(z_i - z_j)). Pairwise
/// disjoint disks each contain exactly one root. Working precision doubles
/// until every radius is below the tolerance.
///
/// Output is sorted by (real part, imaginary part); non-real roots of real
/// polynomials come in exactly conjugate pairs.
std::vector<ComplexEnclosure> complex_roots_certified(const IntPolynomial& f, const RootOptions& options = {});

}  // namespace sumgrowth
