#pragma once

#include "polylin/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polylin {

// Dense matrix over the session field with exact entries.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, const Field& f);
    static ExactMatrix identity(std::size_t n, const Field& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ExactMatrix operator*(const ExactMatrix& o) const;  // throws ShapeMismatch
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix transpose() const;
    bool is_identity() const;
    bool is_zero() const;

    std::size_t rank() const;
    // Exact determinant of a square matrix.
    Scalar determinant() const;
    // Reduced row echelon form; pivot column indices appended in order.
    std::pair<ExactMatrix, std::vector<std::size_t>> rref() const;
    // Basis of the right kernel, one vector per free column, each scaled so
    // its first nonzero coordinate is 1. Deterministic.
    std::vector<std::vector<Scalar>> kernel_basis() const;
    // One exact solution of A x = b (free variables set to zero), or nullopt
    // if the system is inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

} // namespace polylin
