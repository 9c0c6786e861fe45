#pragma once

#include <cstddef>
#include <vector>

#include "howe/exactnum.hpp"

namespace howe {

/// Dense row-major matrix of Scalars. Only used by the kernel oracle.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Basis of {x : M x = 0}, one vector per free column in increasing column
/// order, with the free coordinate set to 1.
///
/// Rows are scaled to primitive integer rows and reduced by fraction-free
/// elimination; the pivot in each column is the first usable row.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

std::size_t rank(const Matrix& m);

}  // namespace howe
