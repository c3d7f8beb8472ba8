#pragma once

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sumgrowth {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order and kept trimmed: the
/// last stored coefficient is nonzero, and the zero polynomial is empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial constant(const Integer& c);
    /// c * x^k
    static IntPolynomial monomial(const Integer& c, unsigned k);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// Coefficient of x^i; zero past the degree.
    Integer coeff(std::size_t i) const;
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    const Integer& leading() const;

    /// gcd of the coefficients, always nonnegative (0 for the zero polynomial).
    Integer content() const;
    /// Divides out the content and makes the leading coefficient positive.
    IntPolynomial primitive_part() const;
    IntPolynomial derivative() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Integer evaluate(const Integer& x) const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const Integer& c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form, e.g. "x^2 - 2" or "6*x^2 - 6".
    std::string to_string() const;

    /// Parses the integer polynomial grammar: terms `c*x^k`, `c x^k`, `x^k`,
    /// `x`, or integer constants, joined by `+`/`-`; whitespace ignored.
    static IntPolynomial parse(std::string_view text);

private:
    void trim();
    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Canonical ordering: by degree, then lexicographically on the coefficient
/// sequence (ascending-degree order).
std::strong_ordering canonical_compare(const IntPolynomial& a, const IntPolynomial& b);

struct CanonicalLess {
    bool operator()(const IntPolynomial& a, const IntPolynomial& b) const { return canonical_compare(a, b) < 0; }
};

/// True iff `divisor` divides `dividend` in Z[x]; the quotient is written to
/// `quotient` when requested.
bool divides_exactly(const IntPolynomial& divisor, const IntPolynomial& dividend, IntPolynomial* quotient = nullptr);

/// Pseudo-division over Q: dividend = q*divisor + r with rational coefficients.
std::pair<std::vector<Rational>, std::vector<Rational>> divide_rational(const IntPolynomial& dividend,
                                                                        const IntPolynomial& divisor);

/// Primitive gcd in Z[x] with positive leading coefficient (gcd(0,0) = 0).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Polynomial with rational coefficients scaled to a primitive integer polynomial
/// with positive leading coefficient.
IntPolynomial primitive_from_rational(const std::vector<Rational>& coefficients);

}  // namespace sumgrowth
