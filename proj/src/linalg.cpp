#include "arakelov/linalg.hpp"

#include <utility>

#include "arakelov/errors.hpp"

namespace arakelov {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

RatVec RatMatrix::multiply(const RatVec& x) const {
    if (x.size() != cols_)
        throw DimensionMismatch("matrix-vector size mismatch");
    RatVec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < cols_; ++j)
            acc += (*this)(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

Rational quadratic_form(const RatMatrix& M, const RatVec& x) {
    if (M.rows() != x.size() || M.cols() != x.size())
        throw DimensionMismatch("quadratic form dimension mismatch");
    const RatVec mx = M.multiply(x);
    Rational acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * mx[i];
    return acc;
}

namespace {

struct Echelon {
    RatMatrix a;                    // reduced row echelon form of [M | b?]
    std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan over the rationals; eliminates the first `lead_cols` columns.
Echelon reduce(RatMatrix a, std::size_t lead_cols) {
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < lead_cols && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(piv, j), a(row, j));
        const Rational inv = Rational(1) / a(row, col);
        for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) -= f * a(row, j);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.a = std::move(a);
    return e;
}

}  // namespace

std::vector<RatVec> kernel_basis(const RatMatrix& M) {
    const std::size_t n = M.cols();
    const Echelon e = reduce(M, n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(n);
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.a(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVec solve_singular_symmetric(const RatMatrix& M, const RatVec& b,
                                std::size_t pin_index) {
    const std::size_t n = M.rows();
    if (M.cols() != n || b.size() != n)
        throw DimensionMismatch("solve: dimension mismatch");
    if (!M.is_symmetric())
        throw InputError("solve: matrix not symmetric");
    if (pin_index >= n)
        throw InputError("solve: pin index out of range");

    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = M(i, j);
        aug(i, n) = b[i];
    }
    const Echelon e = reduce(std::move(aug), n);
    const std::size_t rank = e.pivot_cols.size();
    for (std::size_t i = rank; i < n; ++i)
        if (!e.a(i, n).is_zero())
            throw InconsistentSystem(
                "right-hand side not in the column space");

    // Particular solution with all free variables set to zero.
    RatVec x(n);
    for (std::size_t r = 0; r < rank; ++r) x[e.pivot_cols[r]] = e.a(r, n);

    const std::vector<RatVec> kernel = kernel_basis(M);

    // The pin constraint cuts the kernel by at most one dimension, so any
    // kernel of dimension >= 2 leaves the solution underdetermined, as does
    // a one-dimensional kernel whose generator vanishes at the pin.
    if (kernel.size() >= 2 ||
        (kernel.size() == 1 && kernel[0][pin_index].is_zero()))
        throw AmbiguousKernel(
            "kernel is nontrivial after pinning (disconnected "
            "configuration?)");

    if (kernel.size() == 1) {
        const Rational c = x[pin_index] / kernel[0][pin_index];
        for (std::size_t j = 0; j < n; ++j)
            x[j] -= c * kernel[0][j];
    } else if (!x[pin_index].is_zero()) {
        throw InconsistentSystem(
            "unique solution does not satisfy the pin normalization");
    }

    // Exact residual check, always on.
    const RatVec res = M.multiply(x);
    for (std::size_t i = 0; i < n; ++i)
        if (res[i] != b[i])
            throw InternalCheckError("solver residual is nonzero");
    return x;
}

}  // namespace arakelov
