#pragma once

#include <cstdint>
#include <vector>

namespace sumgrowth::detail {

/// NTT prime 119 * 2^23 + 1; transforms up to length 2^23.
inline constexpr std::uint32_t kNttPrime = 998244353;
inline constexpr unsigned kNttMaxLog = 23;

/// Cyclic convolution modulo kNttPrime of two sequences, result length
/// a.size() + b.size() - 1. Both inputs must be nonempty and the padded length
/// at most 2^kNttMaxLog.
std::vector<std::uint32_t> convolve_mod(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b);

}  // namespace sumgrowth::detail
