#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ydlab/linalg/field.hpp"

namespace ydlab {

template <ExactField F>
using Vector = std::vector<scalar_t<F>>;

template <ExactField F>
Vector<F> zero_vector(const F& field, std::size_t n) {
    return Vector<F>(n, field.zero());
}

template <ExactField F>
Vector<F> unit_vector(const F& field, std::size_t n, std::size_t i) {
    auto v = zero_vector(field, n);
    v[i] = field.one();
    return v;
}

template <ExactField F>
bool is_zero_vector(std::span<const scalar_t<F>> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <ExactField F>
scalar_t<F> dot(const F& field, std::span<const scalar_t<F>> a, std::span<const scalar_t<F>> b) {
    require(a.size() == b.size(), Errc::DimensionMismatch, "dot product length mismatch");
    auto s = field.zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

/// Dense row-major matrix over an exact field. A linear map is represented by
/// the matrix whose column j holds the coordinates of the image of basis
/// vector j.
template <ExactField F>
class Matrix {
public:
    using Scalar = scalar_t<F>;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    Matrix(F field, std::size_t rows, std::size_t cols, std::vector<Scalar> data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        require(data_.size() == rows_ * cols_, Errc::DimensionMismatch, "matrix data length mismatch");
    }

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    static Matrix from_columns(const F& field, std::size_t rows, const std::vector<Vector<F>>& columns) {
        Matrix m(field, rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            require(columns[j].size() == rows, Errc::DimensionMismatch, "column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vector<F>>& rows) {
        Matrix m(field, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == cols, Errc::DimensionMismatch, "row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    /// Small literal matrices in tests: integers reduced into the field.
    static Matrix from_ints(const F& field, std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Matrix m(field, r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            require(row.size() == c, Errc::DimensionMismatch, "ragged literal matrix");
            std::size_t j = 0;
            for (long x : row) m(i, j++) = field.from_int(x);
            ++i;
        }
        return m;
    }

    const F& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Vector<F> column(std::size_t j) const {
        Vector<F> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    const std::vector<Scalar>& data() const noexcept { return data_; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vector<F> apply(std::span<const Scalar> v) const {
        require(v.size() == cols_, Errc::DimensionMismatch, "matrix-vector shape mismatch");
        Vector<F> out(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar* r = data_.data() + i * cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (!v[j].is_zero() && !r[j].is_zero()) out[i] += r[j] * v[j];
        }
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const Scalar& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    /// this += s * o, skipping the multiplication when s is zero.
    void add_scaled(const Scalar& s, const Matrix& o) {
        same_shape(o);
        if (s.is_zero()) return;
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!o.data_[k].is_zero()) data_[k] += s * o.data_[k];
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail(Errc::DimensionMismatch, "matrix product " + a.shape() + " * " + b.shape());
        Matrix c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            Scalar* crow = c.data_.data() + i * c.cols_;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                const Scalar* brow = b.data_.data() + k * b.cols_;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!brow[j].is_zero()) crow[j] += aik * brow[j];
            }
        }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void same_shape(const Matrix& o) const {
        if (!(rows_ == o.rows_ && cols_ == o.cols_))
            fail(Errc::DimensionMismatch, "shape mismatch " + shape() + " vs " + o.shape());
    }

    F field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Kronecker product; index (i, k) of the result is i * b.rows() + k.
template <ExactField F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

/// Stacks matrices with equal column counts on top of each other.
template <ExactField F>
Matrix<F> vstack(const F& field, std::size_t cols, const std::vector<Matrix<F>>& blocks) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        require(b.cols() == cols, Errc::DimensionMismatch, "vstack column mismatch");
        rows += b.rows();
    }
    Matrix<F> out(field, rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = b(i, j);
        r0 += b.rows();
    }
    return out;
}

/// Row-major flattening of a matrix into a coordinate vector.
template <ExactField F>
Vector<F> flatten(const Matrix<F>& m) {
    return m.data();
}

template <ExactField F>
Matrix<F> unflatten(const F& field, std::size_t rows, std::size_t cols, std::span<const scalar_t<F>> v) {
    require(v.size() == rows * cols, Errc::DimensionMismatch, "unflatten length mismatch");
    return Matrix<F>(field, rows, cols, std::vector<scalar_t<F>>(v.begin(), v.end()));
}

template <ExactField F>
Matrix<F> matrix_power(const Matrix<F>& a, std::size_t e) {
    auto result = Matrix<F>::identity(a.field(), a.rows());
    auto base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

}  // namespace ydlab
