#include "polylin/matrix.hpp"

#include "polylin/errors.hpp"

namespace polylin {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, f.zero()) {}

ExactMatrix ExactMatrix::identity(std::size_t n, const Field& f) {
    ExactMatrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_)
        throw DomainError(errc::shape_mismatch, "matrix product shape/field mismatch");
    ExactMatrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw DomainError(errc::shape_mismatch, "matrix sum shape/field mismatch");
    ExactMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw DomainError(errc::shape_mismatch, "matrix difference shape/field mismatch");
    ExactMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool ExactMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

std::pair<ExactMatrix, std::vector<std::size_t>> ExactMatrix::rref() const {
    ExactMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = rows_;
        for (std::size_t r = row; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) m.at(row, j) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar factor = m.at(r, col);
            for (std::size_t j = col; j < cols_; ++j)
                m.at(r, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t ExactMatrix::rank() const { return rref().second.size(); }

Scalar ExactMatrix::determinant() const {
    if (rows_ != cols_) throw DomainError(errc::shape_mismatch, "determinant needs a square matrix");
    ExactMatrix m = *this;
    Scalar det = field_.one();
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) return field_.zero();
        if (pivot != col) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Scalar factor = m.at(r, col) / m.at(col, col);
            for (std::size_t c = col; c < cols_; ++c) m.at(r, c) -= factor * m.at(col, c);
        }
    }
    return det;
}

std::vector<std::vector<Scalar>> ExactMatrix::kernel_basis() const {
    auto [m, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, field_.zero());
        v[free] = field_.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free);
        for (auto& x : v) {
            if (x.is_zero()) continue;
            Scalar lead = x;
            for (auto& y : v) y /= lead;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> ExactMatrix::solve(const std::vector<Scalar>& b) const {
    if (b.size() != rows_)
        throw DomainError(errc::shape_mismatch, "rhs length mismatch");
    ExactMatrix aug(rows_, cols_ + 1, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto [m, pivots] = aug.rref();
    for (auto c : pivots)
        if (c == cols_) return std::nullopt;
    std::vector<Scalar> x(cols_, field_.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m.at(r, cols_);
    return x;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_)
        throw DomainError(errc::shape_mismatch, "vector length mismatch");
    std::vector<Scalar> r(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

} // namespace polylin
