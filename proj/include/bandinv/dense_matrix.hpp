#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "bandinv/errors.hpp"

namespace bandinv {

/// Dense real matrix, row-major. The workhorse container for finite sections;
/// all operations on it are pure functions returning fresh values.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw InputError("DenseMatrix: dimensions must be positive");
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n, 0.0);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const noexcept { return data_; }
    std::vector<double>& data() noexcept { return data_; }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    /// Largest absolute entry; cheap norm proxy (max|a_ij| <= operator norm).
    double max_abs() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError(std::string(op) + ": shape mismatch");
}

inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matmul: inner dimensions differ");
    DenseMatrix c(a.rows(), b.cols(), 0.0);
    // i-k-j order: streams through b and c rows.
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "add");
    DenseMatrix c = a;
    for (std::size_t t = 0; t < c.data().size(); ++t) c.data()[t] += b.data()[t];
    return c;
}

inline DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "subtract");
    DenseMatrix c = a;
    for (std::size_t t = 0; t < c.data().size(); ++t) c.data()[t] -= b.data()[t];
    return c;
}

inline DenseMatrix scale(double s, const DenseMatrix& a) {
    DenseMatrix c = a;
    for (double& v : c.data()) v *= s;
    return c;
}

/// Real adjoint = transpose.
inline DenseMatrix adjoint(const DenseMatrix& a) {
    DenseMatrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = a(i, j);
    return c;
}

inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) { return matmul(a, b); }
inline DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) { return add(a, b); }
inline DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) { return subtract(a, b); }
inline DenseMatrix operator*(double s, const DenseMatrix& a) { return scale(s, a); }

/// Supremum of |a_ij| over the d-th diagonal (entries with i - j = d).
inline double diagonal_sup(const DenseMatrix& a, long d) {
    if (!a.square()) throw InputError("diagonal_sup: matrix must be square");
    const long n = static_cast<long>(a.rows());
    if (d <= -n || d >= n) throw InputError("diagonal_sup: diagonal offset out of range");
    double m = 0.0;
    const long lo = std::max<long>(0, d);
    const long hi = std::min<long>(n - 1, n - 1 + d);
    for (long i = lo; i <= hi; ++i) m = std::max(m, std::abs(a(static_cast<std::size_t>(i), static_cast<std::size_t>(i - d))));
    return m;
}

}  // namespace bandinv
