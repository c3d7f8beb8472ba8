#include "sumgrowth/gap.hpp"

#include <absl/container/flat_hash_map.h>

#include <map>
#include <stdexcept>

#include "sumgrowth/error.hpp"
#include "sumgrowth/matrix.hpp"

namespace sumgrowth {

namespace {

void check_shape(std::size_t dim, const std::vector<IntVector>& gens, const std::vector<std::int64_t>& bounds) {
    require(dim >= 1, "progression dimension must be positive");
    require(gens.size() == bounds.size(), "generator and bound counts differ");
    for (const auto& g : gens) require(g.size() == dim, "generator has wrong dimension");
    for (auto b : bounds) require(b >= 0, "progression bounds must be nonnegative");
}

void check_budget(const Gap& p, std::int64_t k, std::uint64_t budget) {
    require(k >= 1, "k must be positive");
    const Integer count = p.tuple_count(k);
    if (count > Integer(static_cast<unsigned long>(budget)))
        fail(ErrorKind::BudgetExceeded,
             "progression has " + count.get_str() + " coefficient tuples, budget is " + std::to_string(budget));
}

/// Visits every coefficient tuple in lexicographic order together with its
/// point. Points are carried incrementally in arbitrary precision.
template <class Visit>
void enumerate(const Gap& p, std::int64_t k, Visit visit) {
    const std::size_t n = p.rank(), d = p.dimension();
    std::vector<std::int64_t> lo(n), hi(n), cur(n);
    for (std::size_t j = 0; j < n; ++j) std::tie(lo[j], hi[j]) = p.range(j, k);
    cur = lo;
    IntVector point = p.evaluate(cur);
    while (true) {
        if (!visit(static_cast<const std::vector<std::int64_t>&>(cur), static_cast<const IntVector&>(point))) return;
        std::size_t j = n;
        while (true) {
            if (j == 0) return;
            --j;
            if (cur[j] < hi[j]) {
                ++cur[j];
                for (std::size_t c = 0; c < d; ++c) point[c] += p.generators()[j][c];
                break;
            }
            const Integer back = Integer(static_cast<long>(hi[j] - lo[j]));
            for (std::size_t c = 0; c < d; ++c) point[c] -= back * p.generators()[j][c];
            cur[j] = lo[j];
        }
    }
}

bool fits_small(const IntVector& v, std::vector<std::int64_t>& out) {
    out.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].fits_slong_p()) return false;
        out[i] = v[i].get_si();
    }
    return true;
}

/// Coordinates of every point of the progression stay within 64 bits.
bool fits_small(const Gap& p, std::int64_t k) {
    for (std::size_t c = 0; c < p.dimension(); ++c) {
        Integer reach = abs(p.offset()[c]);
        for (std::size_t j = 0; j < p.rank(); ++j) {
            auto [lo, hi] = p.range(j, k);
            reach += abs(p.generators()[j][c]) * Integer(static_cast<long>(std::max(-lo, hi)));
        }
        if (reach >= Integer(static_cast<long>(INT64_MAX / 2))) return false;
    }
    return true;
}

}  // namespace

Gap Gap::offset_form(IntVector v0, std::vector<IntVector> generators, std::vector<std::int64_t> bounds) {
    check_shape(v0.size(), generators, bounds);
    Gap g;
    g.centered_ = false;
    g.dim_ = v0.size();
    g.offset_ = std::move(v0);
    g.generators_ = std::move(generators);
    g.bounds_ = std::move(bounds);
    return g;
}

Gap Gap::centered_form(std::size_t dimension, std::vector<IntVector> generators, std::vector<std::int64_t> bounds) {
    check_shape(dimension, generators, bounds);
    Gap g;
    g.centered_ = true;
    g.dim_ = dimension;
    g.offset_ = IntVector(dimension);
    g.generators_ = std::move(generators);
    g.bounds_ = std::move(bounds);
    return g;
}

std::pair<std::int64_t, std::int64_t> Gap::range(std::size_t j, std::int64_t k) const {
    const std::int64_t r = k * bounds_[j];
    return centered_ ? std::pair{-r, r} : std::pair{std::int64_t{0}, r};
}

Integer Gap::tuple_count(std::int64_t k) const {
    Integer c = 1;
    for (std::size_t j = 0; j < rank(); ++j) {
        auto [lo, hi] = range(j, k);
        c *= Integer(static_cast<long>(hi - lo + 1));
    }
    return c;
}

IntVector Gap::evaluate(const std::vector<std::int64_t>& coeffs) const {
    require(coeffs.size() == rank(), "coefficient tuple has wrong length");
    IntVector p = offset_;
    for (std::size_t j = 0; j < rank(); ++j)
        for (std::size_t c = 0; c < dim_; ++c) p[c] += Integer(static_cast<long>(coeffs[j])) * generators_[j][c];
    return p;
}

Gap Gap::as_offset() const {
    if (!centered_) return *this;
    IntVector v0(dim_);
    std::vector<std::int64_t> b(rank());
    for (std::size_t j = 0; j < rank(); ++j) {
        for (std::size_t c = 0; c < dim_; ++c) v0[c] -= Integer(static_cast<long>(bounds_[j])) * generators_[j][c];
        b[j] = 2 * bounds_[j];
    }
    return offset_form(std::move(v0), generators_, std::move(b));
}

PointSet expand(const Gap& p, std::int64_t k, std::uint64_t budget) {
    check_budget(p, k, budget);
    const std::size_t d = p.dimension();
    if (fits_small(p, k)) {
        std::vector<std::int64_t> flat, tmp;
        enumerate(p, k, [&](const auto&, const IntVector& pt) {
            fits_small(pt, tmp);
            flat.insert(flat.end(), tmp.begin(), tmp.end());
            return true;
        });
        return PointSet::from_flat(d, std::move(flat));
    }
    std::vector<IntVector> pts;
    enumerate(p, k, [&](const auto&, const IntVector& pt) {
        pts.push_back(pt);
        return true;
    });
    return PointSet::collect(d, pts);
}

PropernessCertificate is_k_proper(const Gap& p, std::int64_t k, std::uint64_t budget) {
    check_budget(p, k, budget);
    PropernessCertificate cert;
    cert.k = k;
    cert.tuple_count = p.tuple_count(k);
    auto record = [&](const std::vector<std::int64_t>& earlier, const std::vector<std::int64_t>& later) {
        cert.proper = false;
        cert.collision = std::pair{earlier, later};
    };
    if (fits_small(p, k)) {
        absl::flat_hash_map<std::vector<std::int64_t>, std::vector<std::int64_t>> seen;
        std::vector<std::int64_t> key;
        enumerate(p, k, [&](const std::vector<std::int64_t>& coeffs, const IntVector& pt) {
            fits_small(pt, key);
            auto [it, fresh] = seen.try_emplace(key, coeffs);
            if (!fresh) record(it->second, coeffs);
            return fresh;
        });
    } else {
        std::map<IntVector, std::vector<std::int64_t>> seen;
        enumerate(p, k, [&](const std::vector<std::int64_t>& coeffs, const IntVector& pt) {
            auto [it, fresh] = seen.try_emplace(pt, coeffs);
            if (!fresh) record(it->second, coeffs);
            return fresh;
        });
    }
    if (cert.collision && p.evaluate(cert.collision->first) != p.evaluate(cert.collision->second))
        throw std::logic_error("collision witness does not re-evaluate to equal points");
    return cert;
}

Integer combination_bound(const Integer& C, std::size_t n) {
    const Integer c = C > 1 ? Integer(C) : Integer(1);
    // (c^2 n)^{n/2} = sqrt((c^2 n)^n), rounded up.
    Integer base = c * c * Integer(static_cast<unsigned long>(n)), power, root;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), n);
    mpz_sqrt(root.get_mpz_t(), power.get_mpz_t());
    if (root * root != power) ++root;
    return root;
}

BoundedCombination bounded_combination(const IntVector& v, const std::vector<IntVector>& vs,
                                       std::optional<Integer> entry_bound) {
    const std::size_t n = v.size();
    require(n >= 1, "vector must have positive dimension");
    Integer C = 0;
    for (const auto& w : vs) {
        require(w.size() == n, "spanning vector has wrong dimension");
        for (const auto& e : w) C = std::max(C, Integer(abs(e)));
    }
    if (entry_bound) {
        require(C <= *entry_bound, "spanning vector entry exceeds the stated bound " + entry_bound->get_str());
        C = *entry_bound;
    }

    // Greedy independent subset in input order.
    BoundedCombination out;
    std::vector<RationalVector> basis;
    for (std::size_t j = 0; j < vs.size(); ++j) {
        RationalVector col(vs[j].begin(), vs[j].end());
        basis.push_back(col);
        if (RationalMatrix::from_columns(basis, n).rank() == basis.size()) out.subset.push_back(j);
        else basis.pop_back();
    }
    const std::size_t r = basis.size();
    // Augment by standard basis vectors to a basis of Q^n.
    for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
        RationalVector e(n);
        e[i] = 1;
        basis.push_back(e);
        if (RationalMatrix::from_columns(basis, n).rank() != basis.size()) basis.pop_back();
    }
    RationalVector coords;
    const bool solved = solve_in_basis(basis, RationalVector(v.begin(), v.end()), coords);
    if (!solved) throw std::logic_error("augmented basis does not span the ambient space");
    for (std::size_t i = r; i < n; ++i)
        if (coords[i] != 0) fail(ErrorKind::NotInSpan, "vector is not in the rational span of the given vectors");

    Integer s = 1;
    for (std::size_t i = 0; i < r; ++i) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), coords[i].get_den_mpz_t());
    out.s = s;
    out.coeffs.assign(vs.size(), Integer(0));
    for (std::size_t i = 0; i < r; ++i) {
        const Rational c = coords[i] * Rational(s);
        out.coeffs[out.subset[i]] = c.get_num();
    }
    out.C = C;
    out.D = combination_bound(C, n);

    // Self-check of the identity and the published bounds.
    Integer vmax = 1;
    for (const auto& e : v) vmax = std::max(vmax, Integer(abs(e)));
    for (std::size_t c = 0; c < n; ++c) {
        Integer rhs = 0;
        for (std::size_t j = 0; j < vs.size(); ++j) rhs += out.coeffs[j] * vs[j][c];
        if (rhs != out.s * v[c]) throw std::logic_error("bounded combination identity failed");
    }
    if (abs(out.s) > out.D) throw std::logic_error("bounded combination: s exceeds D");
    for (const auto& c : out.coeffs)
        if (abs(c) > out.D * vmax) throw std::logic_error("bounded combination: coefficient exceeds D max(1, |v|)");
    return out;
}

}  // namespace sumgrowth
