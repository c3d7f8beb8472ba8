#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sumgrowth/int_poly.hpp"

namespace sumgrowth {

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Square integer matrix T with T(Z^d) ⊆ Z^d. Row-major.
class LatticeOperator {
public:
    LatticeOperator() = default;
    LatticeOperator(std::size_t dimension, std::vector<Integer> entries);
    LatticeOperator(std::initializer_list<std::initializer_list<long>> rows);

    static LatticeOperator from_rows(const std::vector<std::vector<Integer>>& rows);
    static LatticeOperator identity(std::size_t d);
    static LatticeOperator zero(std::size_t d);
    static LatticeOperator diagonal(const std::vector<Integer>& values);
    /// Companion matrix of a monic polynomial: multiplication by a root λ on
    /// coordinates in the basis 1, λ, ..., λ^{d-1}.
    static LatticeOperator companion(const IntPolynomial& monic);

    std::size_t dimension() const noexcept { return dim_; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const std::vector<Integer>& entries() const noexcept { return entries_; }

    IntVector apply(const IntVector& v) const;
    RationalVector apply(const RationalVector& v) const;
    Integer trace() const;
    /// True when every entry fits in a signed 64-bit integer.
    bool fits_int64() const;

    friend LatticeOperator operator*(const LatticeOperator& a, const LatticeOperator& b);
    friend LatticeOperator operator+(const LatticeOperator& a, const LatticeOperator& b);
    friend LatticeOperator operator*(const Integer& c, const LatticeOperator& a);
    friend bool operator==(const LatticeOperator& a, const LatticeOperator& b) = default;

    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    std::vector<Integer> entries_;
};

/// Dense matrix over Q; entries are kept canonical by mpq_class.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit RationalMatrix(const LatticeOperator& op);
    static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    RationalVector row(std::size_t i) const;
    RationalVector column(std::size_t j) const;
    bool is_zero() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

    /// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
    RationalMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// det(xI - T), computed exactly by the Faddeev–LeVerrier recurrence.
IntPolynomial char_poly(const LatticeOperator& T);

/// Monic characteristic polynomial det(xI - M) of a square rational matrix,
/// coefficients in ascending order.
std::vector<Rational> char_poly(const RationalMatrix& M);

/// Least-degree monic polynomial annihilating T (Krylov dependency on the
/// powers I, T, T^2, ...).
IntPolynomial minimal_poly(const LatticeOperator& T);

/// g(T) by Horner's rule.
LatticeOperator evaluate_at(const IntPolynomial& g, const LatticeOperator& T);
RationalMatrix evaluate_at(const IntPolynomial& g, const RationalMatrix& M);

/// Basis of the right null space of M, returned in reduced row echelon form
/// (as a list of row vectors). Empty when M has full column rank.
std::vector<RationalVector> nullspace(const RationalMatrix& M);

/// Rational basis of Ker(g(T)), in reduced echelon form. Empty iff g(T) is
/// nonsingular.
std::vector<RationalVector> kernel_of_poly_at(const IntPolynomial& g, const LatticeOperator& T);

/// Coordinates of v in the basis `basis` (columns), or false if v is outside
/// their span. The basis must be linearly independent.
bool solve_in_basis(const std::vector<RationalVector>& basis, const RationalVector& v, RationalVector& coords);

}  // namespace sumgrowth
