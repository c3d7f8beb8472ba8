#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "sumgrowth/heights.hpp"
#include "sumgrowth/point_set.hpp"

namespace sumgrowth {

/// Kernel used for one sumset evaluation. Points are flattened to integer keys
/// of the sum box; Runs merges sums of maximal key runs, Convolution uses an
/// exact number-theoretic transform, Pairs hashes all pair sums. BigInteger
/// handles coordinates beyond 64 bits.
enum class SumsetKernel { Auto, Runs, Convolution, Pairs, BigInteger };

struct SumsetOptions {
    unsigned threads = 1;
    SumsetKernel kernel = SumsetKernel::Auto;
};

/// A + T A = {a + T b : a, b in A}. The result does not depend on the thread
/// count or the kernel.
PointSet t_sumset(const PointSet& a, const LatticeOperator& t, const SumsetOptions& opts = {});

/// |A + T A| without materializing the result set where avoidable.
std::size_t t_sumset_size(const PointSet& a, const LatticeOperator& t, const SumsetOptions& opts = {});

/// Z[λ] for an algebraic integer λ, with coordinates in the basis 1, λ, ..., λ^{d-1}.
class NumberRingContext {
public:
    /// f must be monic and irreducible over the integers.
    explicit NumberRingContext(IntPolynomial minimal_polynomial);

    const IntPolynomial& minimal_polynomial() const noexcept { return f_; }
    const LatticeOperator& companion() const noexcept { return companion_; }
    std::size_t degree() const noexcept { return companion_.dimension(); }
    /// λ * x in coordinates.
    IntVector multiply(const IntVector& x) const { return companion_.apply(x); }

private:
    IntPolynomial f_;
    LatticeOperator companion_;
};

/// A + λA inside Z[λ].
PointSet ring_sumset(const PointSet& a, const NumberRingContext& ctx, const SumsetOptions& opts = {});

struct RatioReport {
    std::size_t set_size = 0;
    std::size_t sumset_size = 0;
    Rational ratio;
    RealInterval reference;  // H°(T)
    Rational gap;            // ratio - midpoint(reference)

    std::string csv_header() const;
    std::string csv_row(int digits = 10) const;
    std::string json(int digits = 10) const;
};

RatioReport ratio_report(const PointSet& a, const LatticeOperator& t, const Rational& tol = kDefaultHeightTolerance,
                         const SumsetOptions& opts = {});

struct BruteForceResult {
    std::size_t min_size = 0;
    PointSet witness;
    std::uint64_t subsets_checked = 0;
};

/// Minimum of |A + T A| over all n-subsets of `box`, with the first minimizer in
/// lexicographic subset order. Throws BudgetExceeded when C(|box|, n) > budget.
BruteForceResult brute_force_min(std::size_t n, const PointSet& box, const LatticeOperator& t,
                                 std::uint64_t budget);

}  // namespace sumgrowth
