#pragma once

#include <string>
#include <vector>

#include "sumgrowth/int_poly.hpp"
#include "sumgrowth/matrix.hpp"

namespace sumgrowth {

/// Closed interval [lo, hi] with exact rational endpoints.
class RealInterval {
public:
    RealInterval() = default;
    RealInterval(Rational lo, Rational hi);
    static RealInterval point(const Rational& v) { return {v, v}; }

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    Rational width() const { return hi_ - lo_; }
    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool overlaps(const RealInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    /// "midpoint ± radius", midpoint with `digits` significant digits.
    std::string render(int digits = 10) const;
    /// "[lo, hi]" with lo rounded down and hi rounded up to `digits` significant digits.
    std::string render_bounds(int digits = 10) const;
    /// Decimal string of an endpoint, rounded outward.
    std::string lo_string(int digits = 17) const;
    std::string hi_string(int digits = 17) const;

private:
    Rational lo_, hi_;
};

/// Decimal rendering of q rounded to nearest with `digits` significant digits.
std::string decimal_string(const Rational& q, int digits = 10);

/// Product of intervals with nonnegative endpoints.
RealInterval operator*(const RealInterval& a, const RealInterval& b);

/// Default width target for every height interval.
inline const Rational kDefaultHeightTolerance{1, 1000000000};

/// H(g) for an irreducible primitive g. Each linear factor a_i x + b_i of g over
/// C has b_i = -a_i λ_i, so |a_i| + |b_i| = |a_i|(1 + |λ_i|) and the product
/// collapses to |lc(g)| * prod (1 + |λ_i|) over the roots λ_i of g. The roots
/// come from certified enclosures; interval width <= tol.
/// Throws InvalidInput for reducible, non-primitive, or constant input.
RealInterval height_irreducible(const IntPolynomial& g, const Rational& tol = kDefaultHeightTolerance);

struct HeightMinimizer {
    IntPolynomial divisor;  // irreducible factor achieving the minimum
    RealInterval height;
    bool tie = false;       // another factor could not be separated from it
};

/// Minimum of H(g) over the irreducible integer factors g of f. Precision is
/// escalated until the argmin is unambiguous; factors whose intervals still
/// overlap after escalation are treated as equal and the smallest in canonical
/// order (degree, then coefficients) wins. Constant f throws InfiniteHeight.
HeightMinimizer minimize_height(const IntPolynomial& f, const Rational& tol = kDefaultHeightTolerance);

/// H(f) = min over irreducible integer divisors.
RealInterval height_poly(const IntPolynomial& f, const Rational& tol = kDefaultHeightTolerance);

/// H(T) = prod (1 + |λ_i|) over all eigenvalues with algebraic multiplicity.
RealInterval h_of_operator(const LatticeOperator& T, const Rational& tol = kDefaultHeightTolerance);

/// H°(T) = H(char_poly(T)).
RealInterval h_circ_of_operator(const LatticeOperator& T, const Rational& tol = kDefaultHeightTolerance);

struct InvariantSubspaceResult {
    std::vector<RationalVector> basis;  // v, Tv, ..., T^{m-1} v
    RationalMatrix restriction;         // matrix of T on span(basis), in that basis
    IntPolynomial divisor;              // monic irreducible g with char_poly(restriction) = g
    RealInterval height;
};

/// Invariant subspace realizing H°(T): for the minimizing divisor g take
/// β = Ker g(T), its first reduced-echelon basis vector v, and the cyclic
/// subspace span{v, Tv, ..., T^{deg g - 1} v}.
InvariantSubspaceResult minimizing_invariant_subspace(const LatticeOperator& T,
                                                      const Rational& tol = kDefaultHeightTolerance);

}  // namespace sumgrowth
