#include "sumgrowth/matrix.hpp"

#include <sstream>

#include "sumgrowth/error.hpp"

namespace sumgrowth {

LatticeOperator::LatticeOperator(std::size_t dimension, std::vector<Integer> entries)
    : dim_(dimension), entries_(std::move(entries)) {
    require(dim_ > 0, "operator dimension must be positive");
    require(entries_.size() == dim_ * dim_, "operator must be square");
}

LatticeOperator::LatticeOperator(std::initializer_list<std::initializer_list<long>> rows) : dim_(rows.size()) {
    require(dim_ > 0, "operator dimension must be positive");
    for (const auto& row : rows) {
        require(row.size() == dim_, "operator must be square");
        for (long v : row) entries_.emplace_back(v);
    }
}

LatticeOperator LatticeOperator::from_rows(const std::vector<std::vector<Integer>>& rows) {
    const std::size_t d = rows.size();
    require(d > 0, "operator dimension must be positive");
    std::vector<Integer> e;
    e.reserve(d * d);
    for (const auto& row : rows) {
        require(row.size() == d, "operator must be square");
        e.insert(e.end(), row.begin(), row.end());
    }
    return LatticeOperator(d, std::move(e));
}

LatticeOperator LatticeOperator::identity(std::size_t d) {
    LatticeOperator T = zero(d);
    for (std::size_t i = 0; i < d; ++i) T(i, i) = 1;
    return T;
}

LatticeOperator LatticeOperator::zero(std::size_t d) { return LatticeOperator(d, std::vector<Integer>(d * d)); }

LatticeOperator LatticeOperator::diagonal(const std::vector<Integer>& values) {
    LatticeOperator T = zero(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) T(i, i) = values[i];
    return T;
}

LatticeOperator LatticeOperator::companion(const IntPolynomial& monic) {
    require(monic.degree() >= 1 && monic.is_monic(), "companion matrix needs a monic nonconstant polynomial");
    const std::size_t d = static_cast<std::size_t>(monic.degree());
    LatticeOperator C = zero(d);
    for (std::size_t i = 1; i < d; ++i) C(i, i - 1) = 1;
    for (std::size_t i = 0; i < d; ++i) C(i, d - 1) = -monic.coeff(i);
    return C;
}

IntVector LatticeOperator::apply(const IntVector& v) const {
    require(v.size() == dim_, "vector dimension mismatch");
    IntVector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

RationalVector LatticeOperator::apply(const RationalVector& v) const {
    require(v.size() == dim_, "vector dimension mismatch");
    RationalVector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out[i] += Rational((*this)(i, j)) * v[j];
    return out;
}

Integer LatticeOperator::trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool LatticeOperator::fits_int64() const {
    for (const auto& e : entries_)
        if (!e.fits_slong_p()) return false;
    return true;
}

LatticeOperator operator*(const LatticeOperator& a, const LatticeOperator& b) {
    require(a.dim_ == b.dim_, "operator dimension mismatch");
    LatticeOperator c = LatticeOperator::zero(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
        for (std::size_t k = 0; k < a.dim_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < a.dim_; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

LatticeOperator operator+(const LatticeOperator& a, const LatticeOperator& b) {
    require(a.dim_ == b.dim_, "operator dimension mismatch");
    LatticeOperator c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
    return c;
}

LatticeOperator operator*(const Integer& s, const LatticeOperator& a) {
    LatticeOperator c = a;
    for (auto& e : c.entries_) e *= s;
    return c;
}

std::string LatticeOperator::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < dim_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < dim_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---- RationalMatrix --------------------------------------------------------

RationalMatrix::RationalMatrix(const LatticeOperator& op)
    : rows_(op.dimension()), cols_(op.dimension()), data_(op.entries().begin(), op.entries().end()) {}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        require(columns[j].size() == rows, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == cols, "row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t j) const {
    RationalVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    require(a.cols_ == b.rows_, "matrix product dimension mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

RationalMatrix RationalMatrix::rref(std::vector<std::size_t>* pivots) const {
    RationalMatrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && m(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols_; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational factor = m(i, c);
            for (std::size_t j = c; j < cols_; ++j) m(i, j) -= factor * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

std::size_t RationalMatrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

// ---- polynomial invariants ---------------------------------------------------

IntPolynomial char_poly(const LatticeOperator& T) {
    // Faddeev–LeVerrier: M_k = T M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(T M_k)/k.
    // Every division is exact over Z.
    const std::size_t n = T.dimension();
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    LatticeOperator M = LatticeOperator::zero(n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = T * M;
        for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        Integer tr = (T * M).trace();
        Integer q;
        mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = -q;
    }
    return IntPolynomial(std::move(c));
}

std::vector<Rational> char_poly(const RationalMatrix& A) {
    require(A.rows() == A.cols(), "characteristic polynomial of a non-square matrix");
    const std::size_t n = A.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RationalMatrix M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = A * M;
        for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        RationalMatrix AM = A * M;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / static_cast<unsigned long>(k);
    }
    return c;
}

IntPolynomial minimal_poly(const LatticeOperator& T) {
    const std::size_t n = T.dimension();
    const std::size_t len = n * n;
    // Incremental elimination over the flattened powers. Each stored row keeps
    // its combination of the original powers so the dependency can be read off.
    struct Row {
        RationalVector v;       // reduced vector
        RationalVector combo;   // combination of powers giving v
        std::size_t pivot;
    };
    std::vector<Row> basis;
    LatticeOperator P = LatticeOperator::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        RationalVector v(P.entries().begin(), P.entries().end());
        RationalVector combo(k + 1);
        combo[k] = 1;
        for (const auto& row : basis) {
            if (v[row.pivot] == 0) continue;
            const Rational f = v[row.pivot];
            for (std::size_t j = 0; j < len; ++j) v[j] -= f * row.v[j];
            for (std::size_t j = 0; j < row.combo.size(); ++j) combo[j] -= f * row.combo[j];
        }
        std::size_t pivot = len;
        for (std::size_t j = 0; j < len; ++j)
            if (v[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot == len) {
            // combo is a monic relation of degree k (its top coefficient is 1).
            std::vector<Integer> coeffs(k + 1);
            for (std::size_t j = 0; j <= k; ++j) {
                require(combo[j].get_den() == 1, "non-integral minimal polynomial");
                coeffs[j] = combo[j].get_num();
            }
            return IntPolynomial(std::move(coeffs));
        }
        const Rational inv = 1 / v[pivot];
        for (auto& x : v) x *= inv;
        for (auto& x : combo) x *= inv;
        for (auto& row : basis) {
            if (row.v[pivot] == 0) continue;
            const Rational f = row.v[pivot];
            for (std::size_t j = 0; j < len; ++j) row.v[j] -= f * v[j];
            row.combo.resize(std::max(row.combo.size(), combo.size()));
            for (std::size_t j = 0; j < combo.size(); ++j) row.combo[j] -= f * combo[j];
        }
        basis.push_back({std::move(v), std::move(combo), pivot});
        P = T * P;
    }
    fail(ErrorKind::InvalidInput, "minimal polynomial search exceeded the dimension");
}

LatticeOperator evaluate_at(const IntPolynomial& g, const LatticeOperator& T) {
    const std::size_t n = T.dimension();
    LatticeOperator acc = LatticeOperator::zero(n);
    const auto& c = g.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * T;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

RationalMatrix evaluate_at(const IntPolynomial& g, const RationalMatrix& M) {
    require(M.rows() == M.cols(), "polynomial evaluation needs a square matrix");
    const std::size_t n = M.rows();
    RationalMatrix acc(n, n);
    const auto& c = g.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * M;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

std::vector<RationalVector> nullspace(const RationalMatrix& M) {
    std::vector<std::size_t> pivots;
    RationalMatrix R = M.rref(&pivots);
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> raw;
    for (std::size_t free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(M.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -R(r, free);
        raw.push_back(std::move(v));
    }
    if (raw.empty()) return raw;
    RationalMatrix B = RationalMatrix::from_rows(raw, M.cols()).rref();
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < raw.size(); ++i) out.push_back(B.row(i));
    return out;
}

std::vector<RationalVector> kernel_of_poly_at(const IntPolynomial& g, const LatticeOperator& T) {
    require(!g.is_zero(), "kernel of the zero polynomial");
    return nullspace(RationalMatrix(evaluate_at(g, T)));
}

bool solve_in_basis(const std::vector<RationalVector>& basis, const RationalVector& v, RationalVector& coords) {
    const std::size_t n = v.size();
    const std::size_t m = basis.size();
    RationalMatrix aug(n, m + 1);
    for (std::size_t j = 0; j < m; ++j) {
        require(basis[j].size() == n, "basis vector dimension mismatch");
        for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
    }
    for (std::size_t i = 0; i < n; ++i) aug(i, m) = v[i];
    std::vector<std::size_t> pivots;
    RationalMatrix R = aug.rref(&pivots);
    if (!pivots.empty() && pivots.back() == m) return false;
    require(pivots.size() == m, "basis vectors are linearly dependent");
    coords.assign(m, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = R(r, m);
    return true;
}

}  // namespace sumgrowth
