#include "zp_poly.hpp"

#include <algorithm>

namespace sumgrowth::detail {

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::reduce(const mpz_class& v) const {
    return static_cast<std::uint64_t>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_)));
}

void PrimeField::trim(Zp& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Zp PrimeField::add(const Zp& a, const Zp& b) const {
    Zp r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

Zp PrimeField::sub(const Zp& a, const Zp& b) const {
    Zp r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

Zp PrimeField::mul(const Zp& a, const Zp& b) const {
    if (a.empty() || b.empty()) return {};
    Zp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    trim(r);
    return r;
}

Zp PrimeField::scale(const Zp& a, std::uint64_t c) const {
    Zp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c);
    trim(r);
    return r;
}

void PrimeField::divmod(const Zp& a, const Zp& b, Zp& q, Zp& r) const {
    r = a;
    trim(r);
    q.clear();
    if (r.size() < b.size()) return;
    const std::uint64_t lead_inv = inv(b.back());
    const std::size_t db = b.size() - 1;
    q.assign(r.size() - db, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        std::uint64_t c = mul(r[k + db], lead_inv);
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) r[k + i] = sub(r[k + i], mul(c, b[i]));
    }
    trim(q);
    trim(r);
}

Zp PrimeField::rem(const Zp& a, const Zp& b) const {
    Zp q, r;
    divmod(a, b, q, r);
    return r;
}

Zp PrimeField::monic(const Zp& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
}

Zp PrimeField::gcd(Zp a, Zp b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Zp r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Zp PrimeField::ext_gcd(const Zp& a, const Zp& b, Zp& s, Zp& t) const {
    Zp r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        Zp q, r;
        divmod(r0, r1, q, r);
        Zp s2 = sub(s0, mul(q, s1));
        Zp t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const std::uint64_t c = inv(r0.back());
    s = scale(s0, c);
    t = scale(t0, c);
    return scale(r0, c);
}

Zp PrimeField::derivative(const Zp& a) const {
    if (a.size() <= 1) return {};
    Zp r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p_);
    trim(r);
    return r;
}

Zp PrimeField::powmod(const Zp& base, const mpz_class& exponent, const Zp& modulus) const {
    Zp result{1};
    result = rem(result, modulus);
    Zp b = rem(base, modulus);
    const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result), modulus);
        if (mpz_tstbit(exponent.get_mpz_t(), i)) result = rem(mul(result, b), modulus);
    }
    return result;
}

std::vector<std::pair<Zp, unsigned>> PrimeField::distinct_degree(Zp f) const {
    std::vector<std::pair<Zp, unsigned>> out;
    const Zp x{0, 1};
    Zp h = rem(x, f);
    for (unsigned i = 1; 2 * i <= f.size() - 1; ++i) {
        h = powmod(h, mpz_class(static_cast<unsigned long>(p_)), f);
        Zp g = gcd(sub(h, x), f);
        if (g.size() > 1) {
            out.emplace_back(g, i);
            Zp q, r;
            divmod(f, g, q, r);
            f = monic(q);
            h = rem(h, f);
        }
    }
    if (f.size() > 1) out.emplace_back(f, static_cast<unsigned>(f.size() - 1));
    return out;
}

void PrimeField::equal_degree(const Zp& f, unsigned d, std::mt19937_64& rng, std::vector<Zp>& out) const {
    const std::size_t n = f.size() - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p_), d);
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coin(0, p_ - 1);
    for (;;) {
        Zp a(n);
        for (auto& c : a) c = coin(rng);
        trim(a);
        if (a.size() <= 1) continue;
        Zp b = sub(powmod(a, e, f), Zp{1});
        Zp g = gcd(b, f);
        if (g.size() > 1 && g.size() < f.size()) {
            Zp q, r;
            divmod(f, g, q, r);
            equal_degree(g, d, rng, out);
            equal_degree(monic(q), d, rng, out);
            return;
        }
    }
}

std::vector<Zp> PrimeField::factor_squarefree(const Zp& f, std::mt19937_64& rng) const {
    std::vector<Zp> out;
    if (f.size() <= 1) return out;
    for (auto& [part, d] : distinct_degree(monic(f))) equal_degree(part, d, rng, out);
    std::sort(out.begin(), out.end(), [](const Zp& a, const Zp& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace sumgrowth::detail
