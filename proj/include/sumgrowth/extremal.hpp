#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sumgrowth/heights.hpp"
#include "sumgrowth/point_set.hpp"
#include "sumgrowth/roots.hpp"
#include "sumgrowth/sumset.hpp"

namespace sumgrowth {

/// Default outward tolerance for boundary membership.
inline constexpr double kBoundaryTolerance = 1e-9;

/// Convex body P * (product of intervals [-r, r] and disks of radius r), with P a
/// real spectral basis of T: an interval per real eigenvalue, a disk per
/// conjugate pair, on which T acts as multiplication by λ.
class SpectralProductBody {
public:
    enum class Kind { Interval, Disk };
    struct Component {
        Kind kind = Kind::Interval;
        std::size_t offset = 0;       // first basis column of the component
        double radius = 1.0;
        ComplexEnclosure eigenvalue;  // imaginary part > 0 for disks
    };

    std::size_t dimension() const noexcept { return dim_; }
    const std::vector<Component>& components() const noexcept { return components_; }
    /// Row-major d x d basis matrix (columns are basis vectors) and its inverse.
    const std::vector<double>& basis() const noexcept { return basis_; }
    const std::vector<double>& inverse_basis() const noexcept { return inverse_; }
    /// Relative residual |TP - PΛ|_F / (|T|_F |P|_F).
    double residual() const noexcept { return residual_; }
    /// Ratio of extreme singular values of P.
    double condition_number() const noexcept { return condition_; }
    const LatticeOperator& op() const noexcept { return op_; }

    /// Lebesgue measure |det P| * prod(2r or πr²).
    double measure() const;
    /// Spectral coordinates P^{-1} x.
    std::vector<double> coordinates(const std::vector<double>& x) const;
    /// x in (1 + tol) * body, with x given in ambient coordinates.
    bool contains(const std::vector<double>& x, double tol = kBoundaryTolerance) const;
    /// The same basis with every radius multiplied by (1 + |λ|): the body Ω + TΩ.
    SpectralProductBody sum_body() const;
    /// The body scaled by s > 0.
    SpectralProductBody scaled(double s) const;

    std::string json() const;

private:
    friend SpectralProductBody build_extremal_body(const LatticeOperator& t);
    std::size_t dim_ = 0;
    std::vector<Component> components_;
    std::vector<double> basis_, inverse_;
    double residual_ = 0, condition_ = 1;
    LatticeOperator op_;
};

/// Throws NotDiagonalizable when the minimal polynomial of T has a repeated factor.
SpectralProductBody build_extremal_body(const LatticeOperator& t);

/// prod over components of (1 + |λ|) for intervals and (1 + |λ|)^2 for disks,
/// as a certified interval. The body must have been built for t.
RealInterval exact_measure_ratio(const SpectralProductBody& body, const LatticeOperator& t);

/// Z^d ∩ M·Ω with outward boundary tolerance; M >= 1.
PointSet lattice_realization(const SpectralProductBody& body, std::int64_t m, double tol = kBoundaryTolerance);

struct ConvergenceRow {
    std::int64_t m = 0;
    std::size_t set_size = 0;
    std::size_t sumset_size = 0;
    Rational ratio;
    RealInterval h_circ;

    std::string csv(int digits = 10) const;
};

inline const char* kConvergenceHeader = "M,set_size,sumset_size,ratio,h_circ_lo,h_circ_hi";

/// One row per M: |Ω_M|, |Ω_M + TΩ_M| and the ratio. Requires an irreducible
/// characteristic polynomial.
std::vector<ConvergenceRow> convergence_experiment(const LatticeOperator& t, const std::vector<std::int64_t>& ms,
                                                   const SumsetOptions& opts = {},
                                                   const Rational& tol = kDefaultHeightTolerance);

/// Nonnegative function constant on the cells cell_size * (c + [0, 1)^d).
struct GridFunction {
    double cell_size = 1.0;
    std::size_t dimension = 1;
    std::map<std::vector<std::int64_t>, double> values;

    double at(const std::vector<std::int64_t>& cell) const;
    /// Sum of value * cell volume.
    double integral() const;
    std::vector<double> center(const std::vector<std::int64_t>& cell) const;
    std::vector<std::int64_t> cell_of(const std::vector<double>& x) const;

    /// Indicator of the cells whose centers lie in the box prod [lo_k, hi_k].
    static GridFunction box_indicator(const std::vector<double>& lo, const std::vector<double>& hi, double cell_size);
};

enum class Rasterization {
    Center,  // cells whose center lies in the body
    Outer,   // every cell meeting the body (a superset)
};

GridFunction rasterize(const SpectralProductBody& body, double cell_size, Rasterization mode);

struct DominationReport {
    bool hypothesis_ok = true;
    double lhs = 0;  // integral of h
    double rhs = 0;  // midpoint of H(T) times integral of f
    std::size_t pairs_checked = 0;
    std::size_t violations = 0;
    std::string note = "sampled at cell centers; numerical evidence, not a proof";
};

/// Checks h(x + T y) >= f(x) at cell centers for all support cells x, y of f,
/// and reports the integrals. Cell sizes and dimensions must agree.
DominationReport domination_check(const GridFunction& f, const GridFunction& h, const LatticeOperator& t,
                                  const Rational& tol = kDefaultHeightTolerance);

}  // namespace sumgrowth
