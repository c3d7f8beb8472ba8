#include "sumgrowth/point_set.hpp"

#include <algorithm>
#include <numeric>

#include "sumgrowth/error.hpp"

namespace sumgrowth {

namespace {

bool fits64(const Integer& v) { return v.fits_slong_p(); }

template <class T>
bool lex_less(const T* a, const T* b, std::size_t d) {
    for (std::size_t k = 0; k < d; ++k) {
        if (a[k] < b[k]) return true;
        if (b[k] < a[k]) return false;
    }
    return false;
}

template <class T>
bool lex_equal(const T* a, const T* b, std::size_t d) {
    for (std::size_t k = 0; k < d; ++k)
        if (a[k] != b[k]) return false;
    return true;
}

/// Sorts rows of a flat array lexicographically and merges repeats.
/// Returns false if a repeat was seen.
template <class T>
bool sort_rows(std::vector<T>& flat, std::size_t d) {
    const std::size_t n = flat.size() / d;
    bool distinct = true;
    if (d == 1) {
        std::sort(flat.begin(), flat.end());
        auto it = std::unique(flat.begin(), flat.end());
        distinct = it == flat.end();
        flat.erase(it, flat.end());
        return distinct;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return lex_less(&flat[i * d], &flat[j * d], d); });
    std::vector<T> out;
    out.reserve(flat.size());
    for (std::size_t r = 0; r < n; ++r) {
        const T* row = &flat[order[r] * d];
        if (r > 0 && lex_equal(row, &out[out.size() - d], d)) {
            distinct = false;
            continue;
        }
        out.insert(out.end(), row, row + d);
    }
    flat = std::move(out);
    return distinct;
}

}  // namespace

PointSet::PointSet(std::size_t dimension) : dim_(dimension) {
    require(dimension >= 1, "point set dimension must be positive");
}

PointSet PointSet::build_big(std::size_t dimension, std::vector<IntVector> points, bool strict) {
    PointSet s(dimension);
    bool all_small = true;
    for (const auto& p : points) {
        require(p.size() == dimension, "point has wrong number of coordinates");
        for (const auto& c : p) all_small = all_small && fits64(c);
    }
    if (all_small) {
        std::vector<std::int64_t> flat;
        flat.reserve(points.size() * dimension);
        for (const auto& p : points)
            for (const auto& c : p) flat.push_back(c.get_si());
        return from_flat(dimension, std::move(flat), strict);
    }
    std::vector<Integer> flat;
    flat.reserve(points.size() * dimension);
    for (auto& p : points)
        for (auto& c : p) flat.push_back(std::move(c));
    const bool distinct = sort_rows(flat, dimension);
    if (strict && !distinct) fail(ErrorKind::InvalidInput, "duplicate point in point set");
    s.compact_ = false;
    s.big_ = std::move(flat);
    s.count_ = s.big_.size() / dimension;
    return s;
}

PointSet PointSet::from_points(std::size_t dimension, const std::vector<IntVector>& points) {
    return build_big(dimension, points, true);
}

PointSet PointSet::collect(std::size_t dimension, const std::vector<IntVector>& points) {
    return build_big(dimension, points, false);
}

PointSet PointSet::from_flat(std::size_t dimension, std::vector<std::int64_t> coords, bool strict) {
    PointSet s(dimension);
    require(coords.size() % dimension == 0, "flat coordinate array is not a multiple of the dimension");
    const bool distinct = sort_rows(coords, dimension);
    if (strict && !distinct) fail(ErrorKind::InvalidInput, "duplicate point in point set");
    s.small_ = std::move(coords);
    s.count_ = s.small_.size() / dimension;
    return s;
}

PointSet PointSet::interval(std::int64_t n) {
    require(n >= 0, "interval length must be nonnegative");
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), std::int64_t{0});
    return from_flat(1, std::move(v), true);
}

PointSet PointSet::box(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) {
    require(!lo.empty() && lo.size() == hi.size(), "box corners must share a positive dimension");
    const std::size_t d = lo.size();
    std::vector<std::int64_t> flat;
    for (std::size_t k = 0; k < d; ++k)
        if (hi[k] < lo[k]) return PointSet(d);
    std::vector<std::int64_t> cur = lo;
    while (true) {
        flat.insert(flat.end(), cur.begin(), cur.end());
        std::size_t k = d;
        while (k > 0) {
            --k;
            if (cur[k] < hi[k]) {
                ++cur[k];
                break;
            }
            cur[k] = lo[k];
            if (k == 0) return from_flat(d, std::move(flat), true);
        }
    }
}

IntVector PointSet::point(std::size_t i) const {
    IntVector p(dim_);
    for (std::size_t k = 0; k < dim_; ++k) p[k] = coord(i, k);
    return p;
}

Integer PointSet::coord(std::size_t i, std::size_t k) const {
    if (compact_) return Integer(static_cast<long>(small_[i * dim_ + k]));
    return big_[i * dim_ + k];
}

const std::vector<std::int64_t>& PointSet::flat() const {
    require(compact_, "point set coordinates exceed 64 bits");
    return small_;
}

bool PointSet::contains(const IntVector& p) const {
    if (p.size() != dim_) return false;
    if (compact_) {
        std::vector<std::int64_t> q(dim_);
        for (std::size_t k = 0; k < dim_; ++k) {
            if (!fits64(p[k])) return false;
            q[k] = p[k].get_si();
        }
        std::size_t lo = 0, hi = count_;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (lex_less(&small_[mid * dim_], q.data(), dim_)) lo = mid + 1;
            else hi = mid;
        }
        return lo < count_ && lex_equal(&small_[lo * dim_], q.data(), dim_);
    }
    std::size_t lo = 0, hi = count_;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (lex_less(&big_[mid * dim_], p.data(), dim_)) lo = mid + 1;
        else hi = mid;
    }
    return lo < count_ && lex_equal(&big_[lo * dim_], p.data(), dim_);
}

std::vector<IntVector> PointSet::points() const {
    std::vector<IntVector> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) out.push_back(point(i));
    return out;
}

PointSet PointSet::translated(const IntVector& shift) const {
    require(shift.size() == dim_, "translation vector has wrong dimension");
    std::vector<IntVector> pts = points();
    for (auto& p : pts)
        for (std::size_t k = 0; k < dim_; ++k) p[k] += shift[k];
    return from_points(dim_, pts);
}

PointSet PointSet::scaled(const Integer& s) const {
    require(s != 0, "scaling factor must be nonzero");
    std::vector<IntVector> pts = points();
    for (auto& p : pts)
        for (auto& c : p) c *= s;
    return from_points(dim_, pts);
}

bool operator==(const PointSet& a, const PointSet& b) {
    if (a.dim_ != b.dim_ || a.count_ != b.count_) return false;
    if (a.compact_ && b.compact_) return a.small_ == b.small_;
    for (std::size_t i = 0; i < a.count_; ++i)
        for (std::size_t k = 0; k < a.dim_; ++k)
            if (a.coord(i, k) != b.coord(i, k)) return false;
    return true;
}

}  // namespace sumgrowth
