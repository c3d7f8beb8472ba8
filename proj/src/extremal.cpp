#include "sumgrowth/extremal.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mp_real.hpp"
#include "sumgrowth/error.hpp"
#include "sumgrowth/factor.hpp"

namespace sumgrowth {

namespace {

using Cd = std::complex<double>;
constexpr mpfr_prec_t kRatioBits = 256;

struct Eigenvalue {
    ComplexEnclosure root;
    unsigned multiplicity = 1;
};

bool real_first_order(const Eigenvalue& a, const Eigenvalue& b) {
    const bool ra = a.root.on_real_axis(), rb = b.root.on_real_axis();
    if (ra != rb) return ra;
    if (a.root.re != b.root.re) return a.root.re < b.root.re;
    return a.root.im < b.root.im;
}

/// Divides by the last component that is not negligible, so the vector is
/// determined up to the choice of null-space basis.
template <class Vec>
void normalize_last(Vec& v) {
    double big = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) big = std::max(big, std::abs(v(i)));
    for (Eigen::Index i = v.size(); i-- > 0;)
        if (std::abs(v(i)) > 1e-8 * big) {
            const auto pivot = v(i);
            v /= pivot;
            return;
        }
}

/// Certified bounds on |λ| for an enclosure.
std::pair<Rational, Rational> modulus_bounds(const ComplexEnclosure& z) {
    if (z.on_real_axis()) {
        const Rational a = abs(z.re);
        return {std::max(Rational(0), Rational(a - z.radius)), a + z.radius};
    }
    const Rational n = z.re * z.re + z.im * z.im;
    const Rational lo = detail::sqrt_lower(n, kRatioBits) - z.radius;
    return {std::max(Rational(0), lo), detail::sqrt_upper(n, kRatioBits) + z.radius};
}

double modulus(const ComplexEnclosure& z) { return std::hypot(z.real(), z.imag()); }

/// Half-extent of the body along ambient axis i.
std::vector<double> ambient_extent(const SpectralProductBody& body) {
    const std::size_t d = body.dimension();
    std::vector<double> radius_of(d, 0.0), ext(d, 0.0);
    for (const auto& c : body.components()) {
        radius_of[c.offset] = c.radius;
        if (c.kind == SpectralProductBody::Kind::Disk) radius_of[c.offset + 1] = c.radius;
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) ext[i] += std::abs(body.basis()[i * d + j]) * radius_of[j];
    return ext;
}

/// Whether spectral coordinates u lie in (1 + tol) times the body, each
/// component further enlarged by `slack` (per coordinate).
bool inside(const SpectralProductBody& body, const std::vector<double>& u, const std::vector<double>* slack, double tol) {
    for (const auto& c : body.components()) {
        if (c.kind == SpectralProductBody::Kind::Interval) {
            const double e = slack ? (*slack)[c.offset] : 0.0;
            if (std::abs(u[c.offset]) > c.radius * (1 + tol) + e) return false;
        } else {
            const double e = slack ? std::hypot((*slack)[c.offset], (*slack)[c.offset + 1]) : 0.0;
            if (std::hypot(u[c.offset], u[c.offset + 1]) > c.radius * (1 + tol) + e) return false;
        }
    }
    return true;
}

}  // namespace

double SpectralProductBody::measure() const {
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> p(
        basis_.data(), static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    double m = std::abs(p.determinant());
    for (const auto& c : components_) m *= c.kind == Kind::Interval ? 2 * c.radius : M_PI * c.radius * c.radius;
    return m;
}

std::vector<double> SpectralProductBody::coordinates(const std::vector<double>& x) const {
    std::vector<double> u(dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) u[i] += inverse_[i * dim_ + j] * x[j];
    return u;
}

bool SpectralProductBody::contains(const std::vector<double>& x, double tol) const {
    require(x.size() == dim_, "point has wrong dimension");
    return inside(*this, coordinates(x), nullptr, tol);
}

SpectralProductBody SpectralProductBody::sum_body() const {
    SpectralProductBody s = *this;
    for (auto& c : s.components_) c.radius *= 1 + modulus(c.eigenvalue);
    return s;
}

SpectralProductBody SpectralProductBody::scaled(double factor) const {
    require(factor > 0, "scale factor must be positive");
    SpectralProductBody s = *this;
    for (auto& c : s.components_) c.radius *= factor;
    return s;
}

std::string SpectralProductBody::json() const {
    nlohmann::ordered_json j;
    j["dimension"] = dim_;
    std::vector<std::vector<double>> rows(dim_);
    for (std::size_t i = 0; i < dim_; ++i) rows[i].assign(basis_.begin() + static_cast<long>(i * dim_), basis_.begin() + static_cast<long>((i + 1) * dim_));
    j["basis"] = rows;
    j["components"] = nlohmann::json::array();
    for (const auto& c : components_) {
        nlohmann::ordered_json cj;
        cj["kind"] = c.kind == Kind::Interval ? "interval" : "disk";
        cj["offset"] = c.offset;
        cj["radius"] = c.radius;
        cj["eigenvalue_re"] = decimal_string(c.eigenvalue.re, 17);
        cj["eigenvalue_im"] = decimal_string(c.eigenvalue.im, 17);
        j["components"].push_back(cj);
    }
    j["measure"] = measure();
    j["residual"] = residual_;
    j["condition_number"] = condition_;
    return j.dump();
}

SpectralProductBody build_extremal_body(const LatticeOperator& t) {
    const std::size_t d = t.dimension();
    require(d >= 1, "operator must have positive dimension");
    if (!is_square_free(minimal_poly(t)))
        fail(ErrorKind::NotDiagonalizable, "operator is not diagonalizable: its minimal polynomial has a repeated factor");

    std::vector<Eigenvalue> eig;
    RootOptions ropts;
    ropts.tolerance = Rational(1, 1) / Rational(Integer(1) << 100);
    for (const auto& [g, mult] : factor_over_integers(char_poly(t)).factors)
        for (const auto& z : complex_roots_certified(g, ropts))
            if (z.on_real_axis() || z.im > 0) eig.push_back({z, mult});
    std::sort(eig.begin(), eig.end(), real_first_order);

    Eigen::MatrixXd td(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) td(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = t(i, j).get_d();
    const Eigen::Index n = td.rows();

    SpectralProductBody body;
    body.dim_ = d;
    body.op_ = t;
    Eigen::MatrixXd p(n, n), lambda = Eigen::MatrixXd::Zero(n, n);
    Eigen::Index col = 0;
    for (const auto& e : eig) {
        const Eigen::Index m = e.multiplicity;
        if (e.root.on_real_axis()) {
            const double l = e.root.real();
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(td - l * Eigen::MatrixXd::Identity(n, n), Eigen::ComputeFullV);
            for (Eigen::Index k = 0; k < m; ++k) {
                Eigen::VectorXd v = svd.matrixV().col(n - m + k);
                normalize_last(v);
                p.col(col) = v;
                lambda(col, col) = l;
                body.components_.push_back({SpectralProductBody::Kind::Interval, static_cast<std::size_t>(col), 1.0, e.root});
                ++col;
            }
        } else {
            const Cd l(e.root.real(), e.root.imag());
            Eigen::MatrixXcd a = td.cast<Cd>() - l * Eigen::MatrixXcd::Identity(n, n);
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
            for (Eigen::Index k = 0; k < m; ++k) {
                Eigen::VectorXcd w = svd.matrixV().col(n - m + k);
                normalize_last(w);
                p.col(col) = w.real();
                p.col(col + 1) = w.imag();
                // T Re w = a Re w - b Im w, T Im w = b Re w + a Im w.
                lambda(col, col) = l.real();
                lambda(col + 1, col) = -l.imag();
                lambda(col, col + 1) = l.imag();
                lambda(col + 1, col + 1) = l.real();
                body.components_.push_back({SpectralProductBody::Kind::Disk, static_cast<std::size_t>(col), 1.0, e.root});
                col += 2;
            }
        }
    }
    if (col != n) throw std::logic_error("spectral basis does not have full dimension");

    Eigen::JacobiSVD<Eigen::MatrixXd> psvd(p);
    const auto& sv = psvd.singularValues();
    if (sv(n - 1) <= 1e-14 * sv(0)) fail(ErrorKind::PrecisionFailure, "spectral basis is numerically singular");
    body.condition_ = sv(0) / sv(n - 1);
    body.residual_ = (td * p - p * lambda).norm() / (std::max(td.norm(), 1.0) * p.norm());
    const Eigen::MatrixXd inv = p.inverse();
    body.basis_.resize(d * d);
    body.inverse_.resize(d * d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            body.basis_[static_cast<std::size_t>(i * n + j)] = p(i, j);
            body.inverse_[static_cast<std::size_t>(i * n + j)] = inv(i, j);
        }
    return body;
}

RealInterval exact_measure_ratio(const SpectralProductBody& body, const LatticeOperator& t) {
    require(body.op() == t, "body was built for a different operator");
    RealInterval r = RealInterval::point(1);
    for (const auto& c : body.components()) {
        auto [lo, hi] = modulus_bounds(c.eigenvalue);
        RealInterval f(1 + lo, 1 + hi);
        r = r * f;
        if (c.kind == SpectralProductBody::Kind::Disk) r = r * f;
    }
    return r;
}

PointSet lattice_realization(const SpectralProductBody& body, std::int64_t m, double tol) {
    require(m >= 1, "M must be at least 1");
    const std::size_t d = body.dimension();
    const auto ext = ambient_extent(body);
    std::vector<std::int64_t> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        const double r = ext[i] * static_cast<double>(m) * (1 + 1e-12) + 1;
        lo[i] = static_cast<std::int64_t>(std::floor(-r));
        hi[i] = static_cast<std::int64_t>(std::ceil(r));
    }
    const double inv_m = 1.0 / static_cast<double>(m);
    const auto& inv = body.inverse_basis();
    std::vector<double> step(d);  // change of u per unit step in the last coordinate
    for (std::size_t i = 0; i < d; ++i) step[i] = inv[i * d + d - 1] * inv_m;

    auto coords = [&](const std::vector<std::int64_t>& x, std::vector<double>& u) {
        for (std::size_t i = 0; i < d; ++i) {
            double s = 0;
            for (std::size_t j = 0; j < d; ++j) s += inv[i * d + j] * static_cast<double>(x[j]);
            u[i] = s * inv_m;
        }
    };
    // Range of real t with u0 + t * step inside (1 + tol) * body; empty when lo > hi.
    auto clip = [&](const std::vector<double>& u0) {
        double a = -INFINITY, b = INFINITY;
        for (const auto& c : body.components()) {
            const double r = c.radius * (1 + tol);
            const std::size_t k = c.offset;
            if (c.kind == SpectralProductBody::Kind::Interval) {
                if (step[k] == 0) {
                    if (std::abs(u0[k]) > r) return std::pair{1.0, 0.0};
                    continue;
                }
                double t1 = (-r - u0[k]) / step[k], t2 = (r - u0[k]) / step[k];
                if (t1 > t2) std::swap(t1, t2);
                a = std::max(a, t1), b = std::min(b, t2);
            } else {
                const double qa = step[k] * step[k] + step[k + 1] * step[k + 1];
                const double qb = u0[k] * step[k] + u0[k + 1] * step[k + 1];
                const double qc = u0[k] * u0[k] + u0[k + 1] * u0[k + 1] - r * r;
                if (qa == 0) {
                    if (qc > 0) return std::pair{1.0, 0.0};
                    continue;
                }
                const double disc = qb * qb - qa * qc;
                if (disc < 0) return std::pair{1.0, 0.0};
                const double sq = std::sqrt(disc);
                a = std::max(a, (-qb - sq) / qa), b = std::min(b, (-qb + sq) / qa);
            }
        }
        return std::pair{a, b};
    };

    // Scan lines along the last coordinate; the analytic range is widened by
    // one on each side and every candidate is re-tested with the exact rule.
    std::vector<std::int64_t> flat, cur = lo;
    std::vector<double> u0(d), u(d);
    while (true) {
        cur[d - 1] = 0;
        coords(cur, u0);
        const auto [a, b] = clip(u0);
        if (a <= b + 2) {
            const auto t0 = std::max(lo[d - 1], static_cast<std::int64_t>(std::floor(std::max(a, -9e15))) - 1);
            const auto t1 = std::min(hi[d - 1], static_cast<std::int64_t>(std::ceil(std::min(b, 9e15))) + 1);
            for (std::int64_t t = t0; t <= t1; ++t) {
                cur[d - 1] = t;
                coords(cur, u);
                if (inside(body, u, nullptr, tol)) flat.insert(flat.end(), cur.begin(), cur.end());
            }
        }
        std::size_t k = d - 1;
        while (true) {
            if (k == 0) return PointSet::from_flat(d, std::move(flat), true);
            --k;
            if (cur[k] < hi[k]) {
                ++cur[k];
                break;
            }
            cur[k] = lo[k];
        }
    }
}

std::string ConvergenceRow::csv(int digits) const {
    std::ostringstream os;
    os << m << ',' << set_size << ',' << sumset_size << ',' << decimal_string(ratio, digits) << ','
       << h_circ.lo_string(digits) << ',' << h_circ.hi_string(digits);
    return os.str();
}

std::vector<ConvergenceRow> convergence_experiment(const LatticeOperator& t, const std::vector<std::int64_t>& ms,
                                                   const SumsetOptions& opts, const Rational& tol) {
    require(is_irreducible(char_poly(t)), "characteristic polynomial must be irreducible; restrict to the minimizing invariant subspace first");
    std::vector<ConvergenceRow> rows;
    if (ms.empty()) return rows;
    const auto body = build_extremal_body(t);
    const auto hc = h_circ_of_operator(t, tol);
    for (auto m : ms) {
        const PointSet a = lattice_realization(body, m);
        ConvergenceRow r;
        r.m = m;
        r.set_size = a.size();
        r.sumset_size = t_sumset_size(a, t, opts);
        r.ratio = Rational(Integer(static_cast<unsigned long>(r.sumset_size)), Integer(static_cast<unsigned long>(r.set_size)));
        r.ratio.canonicalize();
        r.h_circ = hc;
        rows.push_back(std::move(r));
    }
    return rows;
}

double GridFunction::at(const std::vector<std::int64_t>& cell) const {
    auto it = values.find(cell);
    return it == values.end() ? 0.0 : it->second;
}

double GridFunction::integral() const {
    double s = 0;
    for (const auto& [c, v] : values) s += v;
    return s * std::pow(cell_size, static_cast<double>(dimension));
}

std::vector<double> GridFunction::center(const std::vector<std::int64_t>& cell) const {
    std::vector<double> x(cell.size());
    for (std::size_t i = 0; i < cell.size(); ++i) x[i] = (static_cast<double>(cell[i]) + 0.5) * cell_size;
    return x;
}

std::vector<std::int64_t> GridFunction::cell_of(const std::vector<double>& x) const {
    std::vector<std::int64_t> c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c[i] = static_cast<std::int64_t>(std::floor(x[i] / cell_size));
    return c;
}

GridFunction GridFunction::box_indicator(const std::vector<double>& lo, const std::vector<double>& hi, double cell_size) {
    require(cell_size > 0, "cell size must be positive");
    require(!lo.empty() && lo.size() == hi.size(), "box corners must share a positive dimension");
    GridFunction g;
    g.cell_size = cell_size;
    g.dimension = lo.size();
    const double slack = 1e-9;
    std::vector<std::int64_t> first(lo.size()), last(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        first[i] = static_cast<std::int64_t>(std::ceil(lo[i] / cell_size - 0.5 - slack));
        last[i] = static_cast<std::int64_t>(std::floor(hi[i] / cell_size - 0.5 + slack));
        if (last[i] < first[i]) return g;
    }
    std::vector<std::int64_t> cur = first;
    while (true) {
        g.values[cur] = 1.0;
        std::size_t k = cur.size();
        while (k > 0) {
            --k;
            if (cur[k] < last[k]) {
                ++cur[k];
                break;
            }
            cur[k] = first[k];
            if (k == 0) return g;
        }
    }
}

GridFunction rasterize(const SpectralProductBody& body, double cell_size, Rasterization mode) {
    require(cell_size > 0, "cell size must be positive");
    const std::size_t d = body.dimension();
    GridFunction g;
    g.cell_size = cell_size;
    g.dimension = d;
    const auto ext = ambient_extent(body);
    std::vector<double> slack(d, 0.0);
    if (mode == Rasterization::Outer)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) slack[i] += std::abs(body.inverse_basis()[i * d + j]) * cell_size / 2;
    std::vector<std::int64_t> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        lo[i] = static_cast<std::int64_t>(std::floor(-ext[i] / cell_size)) - 2;
        hi[i] = static_cast<std::int64_t>(std::ceil(ext[i] / cell_size)) + 2;
    }
    std::vector<std::int64_t> cur = lo;
    while (true) {
        const auto u = body.coordinates(g.center(cur));
        if (inside(body, u, mode == Rasterization::Outer ? &slack : nullptr, kBoundaryTolerance)) g.values[cur] = 1.0;
        std::size_t k = d;
        while (k > 0) {
            --k;
            if (cur[k] < hi[k]) {
                ++cur[k];
                break;
            }
            cur[k] = lo[k];
            if (k == 0) return g;
        }
    }
}

DominationReport domination_check(const GridFunction& f, const GridFunction& h, const LatticeOperator& t,
                                  const Rational& tol) {
    require(f.cell_size == h.cell_size, "f and h must share the cell size");
    require(f.dimension == h.dimension && f.dimension == t.dimension(), "dimensions of f, h and T must agree");
    const std::size_t d = f.dimension;
    for (const auto& [c, v] : f.values) require(v >= 0, "f must be nonnegative");
    for (const auto& [c, v] : h.values) require(v >= 0, "h must be nonnegative");

    // Dense copy of h over its support box for fast lookups.
    std::vector<std::int64_t> lo(d, 0), width(d, 0);
    std::vector<double> dense;
    if (!h.values.empty()) {
        std::vector<std::int64_t> hi(d);
        lo = hi = h.values.begin()->first;
        for (const auto& [c, v] : h.values)
            for (std::size_t i = 0; i < d; ++i) lo[i] = std::min(lo[i], c[i]), hi[i] = std::max(hi[i], c[i]);
        std::size_t total = 1;
        for (std::size_t i = 0; i < d; ++i) width[i] = hi[i] - lo[i] + 1, total *= static_cast<std::size_t>(width[i]);
        require(total <= (std::size_t{1} << 30), "support of h is too large");
        dense.assign(total, 0.0);
        for (const auto& [c, v] : h.values) {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < d; ++i) idx = idx * static_cast<std::size_t>(width[i]) + static_cast<std::size_t>(c[i] - lo[i]);
            dense[idx] = v;
        }
    }
    auto h_at = [&](const std::vector<double>& z) {
        if (dense.empty()) return 0.0;
        std::size_t idx = 0;
        for (std::size_t i = 0; i < d; ++i) {
            const auto c = static_cast<std::int64_t>(std::floor(z[i] / h.cell_size)) - lo[i];
            if (c < 0 || c >= width[i]) return 0.0;
            idx = idx * static_cast<std::size_t>(width[i]) + static_cast<std::size_t>(c);
        }
        return dense[idx];
    };

    std::vector<double> tm(d * d);
    for (std::size_t i = 0; i < d * d; ++i) tm[i] = t.entries()[i].get_d();
    std::vector<std::vector<double>> ty;
    for (const auto& [c, v] : f.values) {
        const auto y = f.center(c);
        std::vector<double> r(d, 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) r[i] += tm[i * d + j] * y[j];
        ty.push_back(std::move(r));
    }

    DominationReport rep;
    std::vector<double> z(d);
    for (const auto& [c, fx] : f.values) {
        const auto x = f.center(c);
        for (const auto& y : ty) {
            for (std::size_t i = 0; i < d; ++i) z[i] = x[i] + y[i];
            ++rep.pairs_checked;
            if (h_at(z) < fx) ++rep.violations;
        }
    }
    rep.hypothesis_ok = rep.violations == 0;
    rep.lhs = h.integral();
    rep.rhs = h_of_operator(t, tol).midpoint().get_d() * f.integral();
    return rep;
}

}  // namespace sumgrowth
