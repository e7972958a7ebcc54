#pragma once

#include <cstddef>
#include <vector>

#include "arakelov/rational.hpp"

namespace arakelov {

using RatVec = std::vector<Rational>;

// Dense matrix of rationals, row major. Sized for fiber-scale systems
// (a dozen components), not for large sparse work.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool is_symmetric() const;
    RatVec multiply(const RatVec& x) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// x^T M x, exact.
Rational quadratic_form(const RatMatrix& M, const RatVec& x);

// Basis of ker(M) (possibly empty), exact Gaussian elimination.
std::vector<RatVec> kernel_basis(const RatMatrix& M);

// Solves M x = b for symmetric singular M with the normalization
// x[pin_index] = 0. Throws InconsistentSystem when b is outside the column
// space (detected by elimination: a zero row with nonzero right-hand side),
// and AmbiguousKernel when the kernel stays nontrivial after pinning, i.e.
// some nonzero kernel vector vanishes at pin_index.
RatVec solve_singular_symmetric(const RatMatrix& M, const RatVec& b,
                                std::size_t pin_index);

}  // namespace arakelov
