#include "sumgrowth/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sumgrowth/error.hpp"

namespace sumgrowth {

std::string_view error_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidInput: return "invalid_input";
        case ErrorKind::InfiniteHeight: return "infinite_height";
        case ErrorKind::PrecisionFailure: return "precision_failure";
        case ErrorKind::BudgetExceeded: return "budget_exceeded";
        case ErrorKind::NotInSpan: return "not_in_span";
        case ErrorKind::NotDiagonalizable: return "not_diagonalizable";
    }
    return "unknown";
}

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, unsigned k) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPolynomial::leading() const {
    require(!coeffs_.empty(), "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    std::vector<Integer> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(out));
}

Integer IntPolynomial::evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Integer& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

namespace {

Integer parse_integer(std::string_view digits) {
    Integer v;
    if (v.set_str(std::string(digits), 10) != 0) fail(ErrorKind::InvalidInput, "bad integer '" + std::string(digits) + "'");
    return v;
}

}  // namespace

IntPolynomial IntPolynomial::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    require(!s.empty(), "empty polynomial");

    std::vector<Integer> coeffs;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else {
            require(first, "expected '+' or '-' in polynomial '" + s + "'");
        }
        first = false;

        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        bool has_number = pos > start;
        Integer c = has_number ? parse_integer(std::string_view(s).substr(start, pos - start)) : Integer(1);

        unsigned long exponent = 0;
        if (pos < s.size() && s[pos] == '*') {
            require(has_number, "dangling '*' in polynomial '" + s + "'");
            ++pos;
            require(pos < s.size() && s[pos] == 'x', "expected 'x' after '*' in '" + s + "'");
        }
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t e0 = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                require(pos > e0, "missing exponent in '" + s + "'");
                require(pos - e0 < 6, "exponent too large in '" + s + "'");
                exponent = std::stoul(s.substr(e0, pos - e0));
            }
        } else {
            require(has_number, "unexpected character in polynomial '" + s + "'");
        }
        require(pos == s.size() || s[pos] == '+' || s[pos] == '-',
                "unexpected character '" + std::string(1, pos < s.size() ? s[pos] : ' ') + "' in '" + s + "'");
        if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
        coeffs[exponent] += sign * c;
    }
    return IntPolynomial(std::move(coeffs));
}

std::strong_ordering canonical_compare(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        int c = cmp(ca[i], cb[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool divides_exactly(const IntPolynomial& divisor, const IntPolynomial& dividend, IntPolynomial* quotient) {
    require(!divisor.is_zero(), "division by the zero polynomial");
    if (dividend.is_zero()) {
        if (quotient) *quotient = {};
        return true;
    }
    if (dividend.degree() < divisor.degree()) return false;
    std::vector<Integer> rem = dividend.coefficients();
    const auto& d = divisor.coefficients();
    const Integer& lc = d.back();
    const std::size_t dd = d.size() - 1;
    std::vector<Integer> q(rem.size() - dd);
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer& top = rem[k + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= q[k] * d[i];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (rem[i] != 0) return false;
    if (quotient) *quotient = IntPolynomial(std::move(q));
    return true;
}

std::pair<std::vector<Rational>, std::vector<Rational>> divide_rational(const IntPolynomial& dividend,
                                                                        const IntPolynomial& divisor) {
    require(!divisor.is_zero(), "division by the zero polynomial");
    std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
    const auto& d = divisor.coefficients();
    const std::size_t dd = d.size() - 1;
    if (rem.size() <= dd) return {{}, rem};
    std::vector<Rational> q(rem.size() - dd);
    for (std::size_t k = q.size(); k-- > 0;) {
        q[k] = rem[k + dd] / Rational(d.back());
        for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= q[k] * d[i];
    }
    rem.resize(dd);
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    return {q, rem};
}

IntPolynomial primitive_from_rational(const std::vector<Rational>& coefficients) {
    Integer den = 1;
    for (const auto& c : coefficients) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        Rational scaled = coefficients[i] * den;
        out[i] = scaled.get_num();
    }
    return IntPolynomial(std::move(out)).primitive_part();
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPolynomial u = a.primitive_part();
    IntPolynomial v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    // Primitive remainder sequence; pseudo-remainders are made primitive at each step.
    while (!v.is_zero()) {
        std::vector<Integer> r = u.coefficients();
        const auto& d = v.coefficients();
        const std::size_t dd = d.size() - 1;
        while (r.size() > dd && !r.empty()) {
            if (r.back() == 0) {
                r.pop_back();
                continue;
            }
            Integer top = r.back();
            const std::size_t shift = r.size() - 1 - dd;
            for (auto& c : r) c *= d.back();
            for (std::size_t i = 0; i <= dd; ++i) r[shift + i] -= top * d[i];
            r.pop_back();
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        u = std::move(v);
        v = IntPolynomial(std::move(r)).primitive_part();
    }
    return u.primitive_part();
}

}  // namespace sumgrowth
