#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <utility>
#include <vector>

#include "bandinv/banded_matrix.hpp"
#include "bandinv/dense_matrix.hpp"
#include "bandinv/errors.hpp"

namespace bandinv {

inline Eigen::MatrixXd to_eigen(const DenseMatrix& a) {
    Eigen::MatrixXd m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
    return m;
}

inline DenseMatrix from_eigen(const Eigen::MatrixXd& m) {
    DenseMatrix a(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return a;
}

namespace detail {

// Dense dimension up to which op_norm uses a full SVD; beyond it, power
// iteration on A*A (residual tolerance 1e-12, iteration cap 10*n).
inline constexpr std::size_t kDenseSvdLimit = 2000;

inline double power_iteration_sigma_max(const std::vector<double>& start,
                                        const auto& apply_ata, std::size_t n) {
    std::vector<double> x = start;
    double nrm = 0.0;
    for (double v : x) nrm += v * v;
    nrm = std::sqrt(nrm);
    for (double& v : x) v /= nrm;

    double lambda = 0.0;
    const std::size_t cap = 10 * n;
    for (std::size_t it = 0; it < cap; ++it) {
        std::vector<double> y = apply_ata(x);
        lambda = 0.0;
        for (std::size_t i = 0; i < n; ++i) lambda += x[i] * y[i];
        // residual ||y - lambda x||; converged when small relative to lambda
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = y[i] - lambda * x[i];
            res += r * r;
        }
        res = std::sqrt(res);
        double ynrm = 0.0;
        for (double v : y) ynrm += v * v;
        ynrm = std::sqrt(ynrm);
        if (ynrm == 0.0) return 0.0;  // A*A x = 0: start vector in the kernel of a zero-ish map
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ynrm;
        if (res <= 1e-12 * std::max(lambda, 1e-300)) break;
    }
    return std::sqrt(std::max(lambda, 0.0));
}

// Deterministic start vector with nonuniform entries (avoids landing in an
// invariant subspace orthogonal to the top singular vector for structured A).
inline std::vector<double> power_start(std::size_t n) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + 0.3);
    return x;
}

}  // namespace detail

/// Largest singular value. Dense SVD at desk scale; power iteration on A*A
/// above detail::kDenseSvdLimit.
inline double op_norm(const DenseMatrix& a) {
    if (!a.all_finite()) throw InputError("op_norm: non-finite entries");
    const std::size_t dim = std::max(a.rows(), a.cols());
    if (dim <= detail::kDenseSvdLimit) {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(to_eigen(a));
        return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    }
    Eigen::MatrixXd m = to_eigen(a);
    auto apply = [&m](const std::vector<double>& x) {
        Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
        Eigen::VectorXd y = m.transpose() * (m * xv);
        return std::vector<double>(y.data(), y.data() + y.size());
    };
    return detail::power_iteration_sigma_max(detail::power_start(a.cols()), apply, a.cols());
}

inline double op_norm(const BandedMatrix& a) {
    if (a.size() <= detail::kDenseSvdLimit) return op_norm(a.to_dense());
    const BandedMatrix at = adjoint(a);
    auto apply = [&a, &at](const std::vector<double>& x) { return matvec(at, matvec(a, x)); };
    return detail::power_iteration_sigma_max(detail::power_start(a.size()), apply, a.size());
}

/// Bracket for the distance from A to the banded class at half-bandwidth k:
/// lower = max off-band diagonal sup (every member of the class misses those
/// entries entirely), upper = ||A - B_k(A)|| (distance to one member).
inline std::pair<double, double> band_distance_bounds(const DenseMatrix& a, int k) {
    if (!a.square()) throw InputError("band_distance_bounds: matrix must be square");
    if (k < 0) throw InputError("band_distance_bounds: negative half-bandwidth");
    const long n = static_cast<long>(a.rows());
    if (k >= n - 1) return {0.0, 0.0};  // every square matrix lies within bandwidth n-1

    double lower = 0.0;
    for (long d = -(n - 1); d <= n - 1; ++d)
        if (std::labs(d) > k) lower = std::max(lower, diagonal_sup(a, d));

    const DenseMatrix off = subtract(a, band_truncate(a, k).to_dense());
    double upper = op_norm(off);
    // lower <= dist <= upper holds exactly; SVD roundoff could nudge upper a
    // hair below lower, so restore the ordering (both estimates stay valid).
    upper = std::max(upper, lower);
    return {lower, upper};
}

}  // namespace bandinv
