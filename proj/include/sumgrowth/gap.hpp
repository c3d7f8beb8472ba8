#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumgrowth/point_set.hpp"

namespace sumgrowth {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Generalized arithmetic progression {v0 + sum l_j v_j}. The offset form has
/// 0 <= l_j <= L_j; the centered form has -L_j <= l_j <= L_j and no offset.
class Gap {
public:
    static Gap offset_form(IntVector v0, std::vector<IntVector> generators, std::vector<std::int64_t> bounds);
    static Gap centered_form(std::size_t dimension, std::vector<IntVector> generators, std::vector<std::int64_t> bounds);

    bool centered() const noexcept { return centered_; }
    std::size_t dimension() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return generators_.size(); }
    const IntVector& offset() const noexcept { return offset_; }
    const std::vector<IntVector>& generators() const noexcept { return generators_; }
    const std::vector<std::int64_t>& bounds() const noexcept { return bounds_; }

    /// Coefficient range of generator j in k·P (offset) or k★P (centered).
    std::pair<std::int64_t, std::int64_t> range(std::size_t j, std::int64_t k) const;
    /// Number of coefficient tuples of the k-fold progression.
    Integer tuple_count(std::int64_t k) const;
    /// Point for a coefficient tuple (offset included).
    IntVector evaluate(const std::vector<std::int64_t>& coeffs) const;

    /// The same set written in offset form: v0 = -sum L_j v_j, bounds 2 L_j.
    Gap as_offset() const;

private:
    bool centered_ = false;
    std::size_t dim_ = 0;
    IntVector offset_;
    std::vector<IntVector> generators_;
    std::vector<std::int64_t> bounds_;
};

/// k·P or k★P as a set. Throws BudgetExceeded when the tuple count exceeds `budget`.
PointSet expand(const Gap& p, std::int64_t k, std::uint64_t budget = kDefaultEnumerationBudget);

struct PropernessCertificate {
    std::int64_t k = 1;
    bool proper = true;
    /// Earlier and later coefficient tuple, in lexicographic order, with equal points.
    std::optional<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> collision;
    Integer tuple_count;
};

/// Whether all coefficient tuples of the k-fold progression give distinct points.
/// Reports the first repeat met in lexicographic tuple order.
PropernessCertificate is_k_proper(const Gap& p, std::int64_t k, std::uint64_t budget = kDefaultEnumerationBudget);

struct BoundedCombination {
    Integer s;                        // positive
    std::vector<Integer> coeffs;      // one per input vector; zero outside the spanning subset
    std::vector<std::size_t> subset;  // indices of the independent spanning subset
    Integer C;                        // entry bound of the input vectors
    Integer D;                        // ceil((max(C,1)^2 n)^{n/2}) for ambient dimension n
};

/// Integers s, s_j with s v = sum s_j v_j, |s| <= D and |s_j| <= D max(1, |v|_inf).
/// When `entry_bound` is given every entry of `vs` must respect it.
/// Throws NotInSpan when v is outside the rational span of `vs`.
BoundedCombination bounded_combination(const IntVector& v, const std::vector<IntVector>& vs,
                                       std::optional<Integer> entry_bound = std::nullopt);

/// ceil((max(C,1)^2 n)^{n/2}).
Integer combination_bound(const Integer& C, std::size_t n);

}  // namespace sumgrowth
