#include "ntt.hpp"

#include <utility>

#include "sumgrowth/error.hpp"

namespace sumgrowth::detail {

namespace {

constexpr std::uint32_t P = kNttPrime;
constexpr std::uint32_t kGenerator = 3;

/// Montgomery arithmetic modulo P with R = 2^32.
constexpr std::uint32_t neg_inverse() {
    std::uint32_t inv = P;  // Newton iteration for P^{-1} mod 2^32
    for (int i = 0; i < 5; ++i) inv *= 2 - P * inv;
    return ~inv + 1;
}
constexpr std::uint32_t kNegInv = neg_inverse();
constexpr std::uint32_t kR2 = static_cast<std::uint32_t>((static_cast<unsigned __int128>(1) << 64) % P);

inline std::uint32_t reduce(std::uint64_t t) {
    const std::uint32_t m = static_cast<std::uint32_t>(t) * kNegInv;
    const std::uint32_t r = static_cast<std::uint32_t>((t + static_cast<std::uint64_t>(m) * P) >> 32);
    return r >= P ? r - P : r;
}
/// x * y / R mod P; with y in Montgomery form this is the plain product.
inline std::uint32_t mul(std::uint32_t x, std::uint32_t y) { return reduce(static_cast<std::uint64_t>(x) * y); }
inline std::uint32_t to_mont(std::uint32_t x) { return mul(x, kR2); }
inline std::uint32_t add(std::uint32_t x, std::uint32_t y) { return x + y >= P ? x + y - P : x + y; }
inline std::uint32_t sub(std::uint32_t x, std::uint32_t y) { return x >= y ? x - y : x + P - y; }

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= P;
    while (e) {
        if (e & 1) r = r * b % P;
        b = b * b % P;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

/// Powers w^0..w^{half-1} of a root of order 2*half, in Montgomery form.
void twiddles(std::vector<std::uint32_t>& w, std::size_t half, std::uint32_t root) {
    w.resize(half);
    const std::uint32_t rm = to_mont(root);
    w[0] = to_mont(1);
    for (std::size_t k = 1; k < half; ++k) w[k] = mul(w[k - 1], rm);
}

/// Decimation in frequency; natural order in, bit-reversed order out.
void forward(std::vector<std::uint32_t>& a) {
    const std::size_t n = a.size();
    std::vector<std::uint32_t> w;
    for (std::size_t len = n; len >= 2; len >>= 1) {
        const std::size_t half = len / 2;
        twiddles(w, half, pow_mod(kGenerator, (P - 1) / len));
        for (std::size_t i = 0; i < n; i += len) {
            std::uint32_t* x = &a[i];
            std::uint32_t* y = &a[i + half];
            for (std::size_t k = 0; k < half; ++k) {
                const std::uint32_t u = x[k], v = y[k];
                x[k] = add(u, v);
                y[k] = mul(sub(u, v), w[k]);
            }
        }
    }
}

/// Decimation in time with inverse roots; bit-reversed order in, natural order out, scaled by 1/n.
void inverse(std::vector<std::uint32_t>& a) {
    const std::size_t n = a.size();
    std::vector<std::uint32_t> w;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        twiddles(w, half, pow_mod(pow_mod(kGenerator, (P - 1) / len), P - 2));
        for (std::size_t i = 0; i < n; i += len) {
            std::uint32_t* x = &a[i];
            std::uint32_t* y = &a[i + half];
            for (std::size_t k = 0; k < half; ++k) {
                const std::uint32_t u = x[k], v = mul(y[k], w[k]);
                x[k] = add(u, v);
                y[k] = sub(u, v);
            }
        }
    }
    const std::uint32_t inv_n = to_mont(pow_mod(n, P - 2));
    for (auto& x : a) x = mul(x, inv_n);
}

}  // namespace

std::vector<std::uint32_t> convolve_mod(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
    require(!a.empty() && !b.empty(), "convolution of an empty sequence");
    const std::size_t out = a.size() + b.size() - 1;
    std::size_t n = 1;
    while (n < out) n <<= 1;
    require(n <= (std::size_t{1} << kNttMaxLog), "convolution length exceeds the transform limit");
    a.resize(n);
    b.resize(n);
    forward(a);
    forward(b);
    // Pointwise product; Montgomery form of b absorbs the R^{-1} of mul.
    for (std::size_t i = 0; i < n; ++i) a[i] = mul(a[i], to_mont(b[i]));
    inverse(a);
    a.resize(out);
    return a;
}

}  // namespace sumgrowth::detail
