#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sumgrowth/matrix.hpp"

namespace sumgrowth {

/// Finite set of distinct integer points of a fixed dimension d >= 1.
///
/// Points are kept sorted lexicographically. When every coordinate fits in a
/// signed 64-bit word the set is stored compactly as a flat row-major array;
/// otherwise coordinates are arbitrary-precision.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t dimension);

    /// Distinct points required; a repeated point throws InvalidInput.
    static PointSet from_points(std::size_t dimension, const std::vector<IntVector>& points);
    /// Repeated points are merged.
    static PointSet collect(std::size_t dimension, const std::vector<IntVector>& points);
    /// Row-major flat coordinates; repeats merged unless `strict`.
    static PointSet from_flat(std::size_t dimension, std::vector<std::int64_t> coords, bool strict = false);
    /// {0, 1, ..., n-1} in dimension 1.
    static PointSet interval(std::int64_t n);
    /// Integer box prod [lo_k, hi_k].
    static PointSet box(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }
    /// True when coordinates are held as 64-bit words.
    bool compact() const noexcept { return compact_; }

    IntVector point(std::size_t i) const;
    Integer coord(std::size_t i, std::size_t k) const;
    /// Flat coordinates; compact sets only.
    const std::vector<std::int64_t>& flat() const;
    bool contains(const IntVector& p) const;
    std::vector<IntVector> points() const;

    PointSet translated(const IntVector& shift) const;
    /// s * A for nonzero s.
    PointSet scaled(const Integer& s) const;
    /// {a in A : keep(a)} preserving order.
    template <class Pred>
    PointSet filtered(Pred keep) const {
        std::vector<IntVector> kept;
        for (std::size_t i = 0; i < count_; ++i) {
            IntVector p = point(i);
            if (keep(p)) kept.push_back(std::move(p));
        }
        return from_points(dim_, kept);
    }

    friend bool operator==(const PointSet& a, const PointSet& b);

private:
    static PointSet build_big(std::size_t dimension, std::vector<IntVector> points, bool strict);
    std::size_t dim_ = 1;
    std::size_t count_ = 0;
    bool compact_ = true;
    std::vector<std::int64_t> small_;
    std::vector<Integer> big_;
};

}  // namespace sumgrowth
