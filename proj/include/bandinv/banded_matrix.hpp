#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "bandinv/dense_matrix.hpp"
#include "bandinv/errors.hpp"

namespace bandinv {

/// Square matrix stored by diagonals with declared half-bandwidth k:
/// entries with |i - j| > k are implied exact zeros. Diagonal d (offset
/// i - j = d, d in -k..k) holds n - |d| entries indexed by min(i, j).
class BandedMatrix {
public:
    BandedMatrix(std::size_t n, int k) : n_(n), k_(k) {
        if (n == 0) throw InputError("BandedMatrix: size must be positive");
        if (k < 0 || static_cast<std::size_t>(k) >= n)
            throw InputError("BandedMatrix: invalid half-bandwidth (need 0 <= k < n)");
        diagonals_.reserve(static_cast<std::size_t>(2 * k + 1));
        for (int d = -k; d <= k; ++d)
            diagonals_.emplace_back(n - static_cast<std::size_t>(std::abs(d)), 0.0);
    }

    static BandedMatrix identity(std::size_t n) {
        BandedMatrix b(n, 0);
        std::fill(b.diagonals_[0].begin(), b.diagonals_[0].end(), 1.0);
        return b;
    }

    /// Strict conversion: every entry of `a` outside the declared band must be
    /// exactly zero (use band_truncate for the lossy projection).
    static BandedMatrix from_dense(const DenseMatrix& a, int k) {
        if (!a.square()) throw InputError("BandedMatrix::from_dense: matrix must be square");
        const std::size_t n = a.rows();
        BandedMatrix b(n, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const long d = static_cast<long>(i) - static_cast<long>(j);
                if (std::labs(d) <= k) {
                    b.set(i, j, a(i, j));
                } else if (a(i, j) != 0.0) {
                    throw InputError("BandedMatrix::from_dense: nonzero entry outside declared band");
                }
            }
        return b;
    }

    std::size_t size() const noexcept { return n_; }
    int half_bandwidth() const noexcept { return k_; }

    /// Entry accessor; returns the implied zero outside the band.
    double at(std::size_t i, std::size_t j) const {
        const long d = static_cast<long>(i) - static_cast<long>(j);
        if (std::labs(d) > k_) return 0.0;
        return diagonals_[static_cast<std::size_t>(d + k_)][std::min(i, j)];
    }

    void set(std::size_t i, std::size_t j, double v) {
        const long d = static_cast<long>(i) - static_cast<long>(j);
        if (std::labs(d) > k_) throw InputError("BandedMatrix::set: index outside band");
        diagonals_[static_cast<std::size_t>(d + k_)][std::min(i, j)] = v;
    }

    const std::vector<double>& diagonal(int d) const {
        if (std::abs(d) > k_) throw InputError("BandedMatrix::diagonal: offset outside band");
        return diagonals_[static_cast<std::size_t>(d + k_)];
    }

    std::vector<double>& diagonal(int d) {
        if (std::abs(d) > k_) throw InputError("BandedMatrix::diagonal: offset outside band");
        return diagonals_[static_cast<std::size_t>(d + k_)];
    }

    DenseMatrix to_dense() const {
        DenseMatrix a(n_, n_, 0.0);
        for (int d = -k_; d <= k_; ++d) {
            const std::vector<double>& diag = diagonals_[static_cast<std::size_t>(d + k_)];
            for (std::size_t t = 0; t < diag.size(); ++t) {
                const std::size_t i = d >= 0 ? t + static_cast<std::size_t>(d) : t;
                const std::size_t j = d >= 0 ? t : t + static_cast<std::size_t>(-d);
                a(i, j) = diag[t];
            }
        }
        return a;
    }

private:
    std::size_t n_;
    int k_;
    std::vector<std::vector<double>> diagonals_;  // index d + k_
};

/// Hard band truncation B_k(A): keeps entries with |i - j| <= k, zeroes the rest.
inline BandedMatrix band_truncate(const DenseMatrix& a, int k) {
    if (!a.square()) throw InputError("band_truncate: matrix must be square");
    const std::size_t n = a.rows();
    if (k < 0 || static_cast<std::size_t>(k) >= n)
        throw InputError("band_truncate: invalid half-bandwidth (need 0 <= k < n)");
    BandedMatrix b(n, k);
    for (int d = -k; d <= k; ++d) {
        std::vector<double>& diag = b.diagonal(d);
        for (std::size_t t = 0; t < diag.size(); ++t) {
            const std::size_t i = d >= 0 ? t + static_cast<std::size_t>(d) : t;
            const std::size_t j = d >= 0 ? t : t + static_cast<std::size_t>(-d);
            diag[t] = a(i, j);
        }
    }
    return b;
}

inline double diagonal_sup(const BandedMatrix& a, long d) {
    const long n = static_cast<long>(a.size());
    if (d <= -n || d >= n) throw InputError("diagonal_sup: diagonal offset out of range");
    if (std::labs(d) > a.half_bandwidth()) return 0.0;
    double m = 0.0;
    for (double v : a.diagonal(static_cast<int>(d))) m = std::max(m, std::abs(v));
    return m;
}

inline BandedMatrix add(const BandedMatrix& a, const BandedMatrix& b) {
    if (a.size() != b.size()) throw InputError("add: banded size mismatch");
    const int k = std::max(a.half_bandwidth(), b.half_bandwidth());
    BandedMatrix c(a.size(), k);
    for (int d = -k; d <= k; ++d) {
        std::vector<double>& out = c.diagonal(d);
        if (std::abs(d) <= a.half_bandwidth()) {
            const std::vector<double>& da = a.diagonal(d);
            for (std::size_t t = 0; t < out.size(); ++t) out[t] += da[t];
        }
        if (std::abs(d) <= b.half_bandwidth()) {
            const std::vector<double>& db = b.diagonal(d);
            for (std::size_t t = 0; t < out.size(); ++t) out[t] += db[t];
        }
    }
    return c;
}

inline BandedMatrix scale(double s, const BandedMatrix& a) {
    BandedMatrix c = a;
    for (int d = -c.half_bandwidth(); d <= c.half_bandwidth(); ++d)
        for (double& v : c.diagonal(d)) v *= s;
    return c;
}

/// Real adjoint = transpose: diagonal d maps to -d.
inline BandedMatrix adjoint(const BandedMatrix& a) {
    BandedMatrix c(a.size(), a.half_bandwidth());
    for (int d = -a.half_bandwidth(); d <= a.half_bandwidth(); ++d)
        c.diagonal(-d) = a.diagonal(d);
    return c;
}

/// Banded product. Half-bandwidth follows the band-growth rule k1 + k2,
/// clamped to n - 1 (entries beyond the last diagonal do not exist).
inline BandedMatrix matmul(const BandedMatrix& a, const BandedMatrix& b) {
    if (a.size() != b.size()) throw InputError("matmul: banded size mismatch");
    const long n = static_cast<long>(a.size());
    const int k = static_cast<int>(
        std::min<long>(static_cast<long>(a.half_bandwidth()) + b.half_bandwidth(), n - 1));
    BandedMatrix c(a.size(), k);
    const int ka = a.half_bandwidth();
    const int kb = b.half_bandwidth();
    for (long i = 0; i < n; ++i) {
        const long jlo = std::max<long>(0, i - k);
        const long jhi = std::min<long>(n - 1, i + k);
        for (long j = jlo; j <= jhi; ++j) {
            const long llo = std::max({static_cast<long>(0), i - ka, j - kb});
            const long lhi = std::min({n - 1, i + ka, j + kb});
            double s = 0.0;
            for (long l = llo; l <= lhi; ++l)
                s += a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(l)) *
                     b.at(static_cast<std::size_t>(l), static_cast<std::size_t>(j));
            c.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), s);
        }
    }
    return c;
}

/// y = A x for banded A.
inline std::vector<double> matvec(const BandedMatrix& a, const std::vector<double>& x) {
    const long n = static_cast<long>(a.size());
    if (x.size() != a.size()) throw InputError("matvec: vector length mismatch");
    std::vector<double> y(a.size(), 0.0);
    const int k = a.half_bandwidth();
    for (long i = 0; i < n; ++i) {
        const long jlo = std::max<long>(0, i - k);
        const long jhi = std::min<long>(n - 1, i + k);
        double s = 0.0;
        for (long j = jlo; j <= jhi; ++j)
            s += a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                 x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

inline BandedMatrix operator*(const BandedMatrix& a, const BandedMatrix& b) { return matmul(a, b); }
inline BandedMatrix operator+(const BandedMatrix& a, const BandedMatrix& b) { return add(a, b); }
inline BandedMatrix operator*(double s, const BandedMatrix& a) { return scale(s, a); }

}  // namespace bandinv
