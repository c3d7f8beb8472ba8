#pragma once

// Dense polynomials over a small prime field F_p (p < 2^31), used by the
// modular stage of integer factorization.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace sumgrowth::detail {

using Zp = std::vector<std::uint64_t>;  // ascending degree, trimmed

class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {}

    std::uint64_t modulus() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }
    std::uint64_t reduce(const mpz_class& v) const;

    void trim(Zp& a) const;
    Zp add(const Zp& a, const Zp& b) const;
    Zp sub(const Zp& a, const Zp& b) const;
    Zp mul(const Zp& a, const Zp& b) const;
    Zp scale(const Zp& a, std::uint64_t c) const;
    /// a = q*b + r; b nonzero.
    void divmod(const Zp& a, const Zp& b, Zp& q, Zp& r) const;
    Zp rem(const Zp& a, const Zp& b) const;
    Zp monic(const Zp& a) const;
    Zp gcd(Zp a, Zp b) const;
    /// Returns monic g = s*a + t*b.
    Zp ext_gcd(const Zp& a, const Zp& b, Zp& s, Zp& t) const;
    Zp derivative(const Zp& a) const;
    Zp powmod(const Zp& base, const mpz_class& exponent, const Zp& modulus) const;

    /// Monic irreducible factors of a monic square-free polynomial, sorted
    /// by (degree, coefficients). Requires odd p.
    std::vector<Zp> factor_squarefree(const Zp& f, std::mt19937_64& rng) const;

private:
    std::vector<std::pair<Zp, unsigned>> distinct_degree(Zp f) const;
    void equal_degree(const Zp& f, unsigned d, std::mt19937_64& rng, std::vector<Zp>& out) const;

    std::uint64_t p_;
};

}  // namespace sumgrowth::detail
