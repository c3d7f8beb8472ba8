#include "sumgrowth/factor.hpp"

#include <algorithm>
#include <random>

#include "sumgrowth/error.hpp"
#include "zp_poly.hpp"

namespace sumgrowth {

namespace {

using detail::PrimeField;
using detail::Zp;
using IntVec = std::vector<Integer>;
using QPoly = std::vector<Rational>;

// ---- rational polynomial helpers for Yun's algorithm -------------------------

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly to_q(const IntPolynomial& p) { return QPoly(p.coefficients().begin(), p.coefficients().end()); }

QPoly q_derivative(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
    trim(r);
    return r;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

void q_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    q.clear();
    if (r.size() < b.size()) return;
    const std::size_t db = b.size() - 1;
    q.assign(r.size() - db, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        q[k] = r[k + db] / b.back();
        if (q[k] == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) r[k + i] -= q[k] * b[i];
    }
    trim(q);
    trim(r);
}

QPoly q_monic(QPoly a) {
    if (a.empty()) return a;
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
    return a;
}

QPoly q_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly q, r;
        q_divmod(a, b, q, r);
        a = std::move(b);
        b = q_monic(std::move(r));
    }
    return q_monic(std::move(a));
}

QPoly q_exact_div(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    q_divmod(a, b, q, r);
    return q;
}

// ---- integer polynomial helpers for Hensel lifting --------------------------

void trim(IntVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IntVec mul(const IntVec& a, const IntVec& b) {
    if (a.empty() || b.empty()) return {};
    IntVec r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

void reduce_nonneg(IntVec& a, const Integer& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    trim(a);
}

void reduce_symmetric(IntVec& a, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    trim(a);
}

Zp to_zp(const IntVec& a, const PrimeField& F) {
    Zp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.reduce(a[i]);
    F.trim(r);
    return r;
}

IntVec from_zp(const Zp& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        fail(ErrorKind::InvalidInput, "leading coefficient not invertible modulo the lifting prime");
    return r;
}

// Lifts target ≡ g*h (mod p), with h monic and lc(g) = lc(target), to a
// factorization modulo p^k. Linear lifting, one power of p per step.
void hensel_pair(const IntVec& target, const Zp& g_bar, const Zp& h_bar, const PrimeField& F, unsigned k,
                 IntVec& g_out, IntVec& h_out) {
    const Integer p = static_cast<unsigned long>(F.modulus());
    const Integer lc = target.back();
    Zp s, t;
    F.ext_gcd(g_bar, h_bar, s, t);

    IntVec g = from_zp(g_bar);
    g.back() = lc;
    IntVec h = from_zp(h_bar);
    Integer pj = p;
    for (unsigned j = 1; j < k; ++j) {
        IntVec prod = mul(g, h);
        IntVec e(std::max(target.size(), prod.size()));
        for (std::size_t i = 0; i < e.size(); ++i) {
            Integer diff = (i < target.size() ? target[i] : Integer(0)) - (i < prod.size() ? prod[i] : Integer(0));
            mpz_divexact(e[i].get_mpz_t(), diff.get_mpz_t(), pj.get_mpz_t());
        }
        Zp e_bar = to_zp(e, F);
        Zp q, b;
        F.divmod(F.mul(s, e_bar), h_bar, q, b);
        Zp a = F.add(F.mul(t, e_bar), F.mul(q, g_bar));

        Integer next = pj * p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i + 1 >= g.size()) break;  // deg a < deg g; lc(g) stays exact
            g[i] += pj * static_cast<unsigned long>(a[i]);
            mpz_fdiv_r(g[i].get_mpz_t(), g[i].get_mpz_t(), next.get_mpz_t());
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            h[i] += pj * static_cast<unsigned long>(b[i]);
            mpz_fdiv_r(h[i].get_mpz_t(), h[i].get_mpz_t(), next.get_mpz_t());
        }
        pj = next;
    }
    g_out = std::move(g);
    h_out = std::move(h);
}

// target ≡ lc(target) * prod(factors) (mod p); returns monic lifts mod p^k.
void hensel_multi(const IntVec& target, const std::vector<Zp>& factors, const PrimeField& F, unsigned k,
                  const Integer& pk, std::vector<IntVec>& out) {
    if (factors.size() == 1) {
        IntVec u = target;
        Integer inv = inverse_mod(target.back(), pk);
        for (auto& c : u) c *= inv;
        reduce_nonneg(u, pk);
        out.push_back(std::move(u));
        return;
    }
    const std::size_t mid = factors.size() / 2;
    std::vector<Zp> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(mid));
    std::vector<Zp> right(factors.begin() + static_cast<std::ptrdiff_t>(mid), factors.end());
    Zp g_bar{F.reduce(target.back())};
    for (const auto& f : left) g_bar = F.mul(g_bar, f);
    Zp h_bar{1};
    for (const auto& f : right) h_bar = F.mul(h_bar, f);
    IntVec g, h;
    hensel_pair(target, g_bar, h_bar, F, k, g, h);
    hensel_multi(g, left, F, k, pk, out);
    hensel_multi(h, right, F, k, pk, out);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t r = idx.size();
    for (std::size_t i = r; i-- > 0;) {
        if (idx[i] < n - r + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

constexpr std::uint64_t kSmallPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                                          71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                                          151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229,
                                          233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313};

// f primitive, square-free, positive leading coefficient, degree >= 2.
std::vector<IntPolynomial> zassenhaus(const IntPolynomial& f) {
    const IntVec& fc = f.coefficients();
    const unsigned n = static_cast<unsigned>(f.degree());
    std::mt19937_64 rng(0x5eed5eedULL);

    // Candidate primes: keep the one giving the fewest modular factors among
    // the first few admissible primes.
    std::uint64_t best_p = 0;
    std::vector<Zp> best_factors;
    int admissible = 0;
    for (std::uint64_t p : kSmallPrimes) {
        PrimeField F(p);
        if (F.reduce(f.leading()) == 0) continue;
        Zp fp = to_zp(fc, F);
        if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
        auto facs = F.factor_squarefree(fp, rng);
        if (best_p == 0 || facs.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(facs);
        }
        if (best_factors.size() == 1 || ++admissible >= 5) break;
    }
    if (best_p == 0) fail(ErrorKind::PrecisionFailure, "no admissible prime for modular factorization");
    if (best_factors.size() == 1) return {f};

    PrimeField F(best_p);
    // Coefficient bound for any factor: 2^n * (n+1) * max|f_i|, times |lc|, times 2.
    Integer norm = 0;
    for (const auto& c : fc)
        if (abs(c) > norm) norm = abs(c);
    Integer bound = norm * (n + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
    bound *= abs(f.leading());
    const Integer p = static_cast<unsigned long>(best_p);
    unsigned k = 1;
    Integer pk = p;
    while (pk <= bound) {
        pk *= p;
        ++k;
    }

    std::vector<IntVec> lifted;
    hensel_multi(fc, best_factors, F, k, pk, lifted);

    std::vector<IntPolynomial> found;
    IntPolynomial rest = f;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool progress = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        do {
            IntVec cand{rest.leading()};
            for (std::size_t i : idx) {
                cand = mul(cand, lifted[i]);
                reduce_symmetric(cand, pk);
            }
            IntPolynomial g = IntPolynomial(cand).primitive_part();
            IntPolynomial q;
            if (g.degree() > 0 && divides_exactly(g, rest, &q)) {
                found.push_back(g);
                rest = q;
                for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[j]));
                progress = true;
                break;
            }
        } while (next_combination(idx, lifted.size()));
        if (!progress) ++s;
    }
    if (rest.degree() > 0) found.push_back(rest.primitive_part());
    return found;
}

}  // namespace

IntPolynomial Factorization::expand() const {
    IntPolynomial out = IntPolynomial::constant(content);
    for (const auto& [g, m] : factors)
        for (unsigned i = 0; i < m; ++i) out = out * g;
    return out;
}

std::vector<std::pair<IntPolynomial, unsigned>> square_free_decomposition(const IntPolynomial& f) {
    require(!f.is_zero(), "square-free decomposition of the zero polynomial");
    std::vector<std::pair<IntPolynomial, unsigned>> out;
    if (f.degree() <= 0) return out;
    QPoly fq = q_monic(to_q(f.primitive_part()));
    QPoly fd = q_derivative(fq);
    QPoly a = q_gcd(fq, fd);
    QPoly b = q_exact_div(fq, a);
    QPoly c = q_exact_div(fd, a);
    QPoly d = q_sub(c, q_derivative(b));
    for (unsigned i = 1; b.size() > 1; ++i) {
        QPoly ai = q_gcd(b, d);
        if (ai.size() > 1) out.emplace_back(primitive_from_rational(ai), i);
        b = q_exact_div(b, ai);
        c = q_exact_div(d, ai);
        d = q_sub(c, q_derivative(b));
    }
    return out;
}

bool is_square_free(const IntPolynomial& f) {
    if (f.degree() <= 0) return !f.is_zero();
    return gcd(f, f.derivative()).degree() == 0;
}

Factorization factor_over_integers(const IntPolynomial& f) {
    require(!f.is_zero(), "cannot factor the zero polynomial");
    Factorization out;
    out.content = f.content();
    if (f.leading() < 0) out.content = -out.content;
    if (f.degree() == 0) return out;

    for (const auto& [part, mult] : square_free_decomposition(f)) {
        // Pull out a power of x first so the modular stage sees nonzero constants.
        IntPolynomial s = part;
        if (s.coeff(0) == 0) {
            out.factors.emplace_back(IntPolynomial{0, 1}, mult);
            IntPolynomial q;
            divides_exactly(IntPolynomial{0, 1}, s, &q);
            s = q;
        }
        if (s.degree() <= 0) continue;
        if (s.degree() == 1) {
            out.factors.emplace_back(s.primitive_part(), mult);
            continue;
        }
        for (auto& g : zassenhaus(s.primitive_part())) out.factors.emplace_back(std::move(g), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return canonical_compare(a.first, b.first) < 0; });
    return out;
}

bool is_irreducible(const IntPolynomial& f) {
    if (f.degree() < 1) return false;
    if (f.content() != 1) return false;
    const auto fac = factor_over_integers(f);
    return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

}  // namespace sumgrowth
