#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "bandinv/banded_matrix.hpp"
#include "bandinv/dense_matrix.hpp"
#include "bandinv/errors.hpp"
#include "bandinv/operator_norm.hpp"

namespace bandinv {

/// Conservative bracket [m_lo, M_hi] around the extreme singular values
/// (eigenvalues, in the SPD case): m_lo <= m = 1/||A^{-1}||, M_hi >= M = ||A||.
/// Every downstream certificate stays valid verbatim with (m, M, kappa)
/// replaced by (m_lo, M_hi, kappa), since the bounds only widen the bracket.
struct SpectralBounds {
    double m_lo = 0.0;
    double M_hi = 0.0;
    double kappa = 0.0;  // M_hi / m_lo
    bool user_supplied = false;

    /// Label for certificates: exact user-supplied data makes claims rigorous;
    /// estimated bounds inherit eigensolver roundoff (padded by slack).
    std::string rigor() const { return user_supplied ? "rigorous" : "floating-point conservative"; }
};

namespace detail {

inline SpectralBounds make_bounds(double m_lo, double M_hi, bool user) {
    if (!(m_lo > 0.0) || !(M_hi >= m_lo))
        throw InputError("SpectralBounds: need 0 < m_lo <= M_hi");
    SpectralBounds b;
    b.m_lo = m_lo;
    b.M_hi = M_hi;
    b.kappa = M_hi / m_lo;
    b.user_supplied = user;
    return b;
}

inline void require_symmetric(const DenseMatrix& a, const char* who) {
    if (!a.square()) throw MathError(std::string(who) + ": matrix must be square");
    const double tol = 1e-12 * std::max(a.max_abs(), 1e-300);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (std::abs(a(i, j) - a(j, i)) > tol)
                throw MathError(std::string(who) + ": matrix is not symmetric");
}

}  // namespace detail

/// Eigenvalue bracket for a symmetric positive definite matrix:
/// m_lo = lambda_min(1 - slack), M_hi = lambda_max(1 + slack).
inline SpectralBounds spd_bounds(const DenseMatrix& a, double slack = 1e-8) {
    if (!a.all_finite()) throw InputError("spd_bounds: non-finite entries");
    if (!(slack >= 0.0)) throw InputError("spd_bounds: slack must be non-negative");
    detail::require_symmetric(a, "spd_bounds");
    Eigen::MatrixXd m = to_eigen(a);
    Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0)) throw MathError("spd_bounds: matrix is not positive definite (lambda_min <= 0)");
    return detail::make_bounds(lo * (1.0 - slack), hi * (1.0 + slack), false);
}

inline SpectralBounds spd_bounds(const BandedMatrix& a, double slack = 1e-8) {
    return spd_bounds(a.to_dense(), slack);
}

/// Singular-value bracket for a general square invertible matrix.
inline SpectralBounds singular_bounds(const DenseMatrix& a, double slack = 1e-8) {
    if (!a.square()) throw InputError("singular_bounds: matrix must be square");
    if (!a.all_finite()) throw InputError("singular_bounds: non-finite entries");
    if (!(slack >= 0.0)) throw InputError("singular_bounds: slack must be non-negative");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(to_eigen(a));
    const auto& sv = svd.singularValues();
    const double hi = sv(0);
    const double lo = sv(sv.size() - 1);
    if (!(lo > 1e-12 * hi))
        throw MathError("singular_bounds: matrix numerically singular (sigma_min/sigma_max = " +
                        std::to_string(hi > 0.0 ? lo / hi : 0.0) + ")");
    return detail::make_bounds(lo * (1.0 - slack), hi * (1.0 + slack), false);
}

inline SpectralBounds singular_bounds(const BandedMatrix& a, double slack = 1e-8) {
    return singular_bounds(a.to_dense(), slack);
}

/// Passthrough for analytically known extremes.
inline SpectralBounds user_bounds(double m_lo, double M_hi) {
    return detail::make_bounds(m_lo, M_hi, true);
}

}  // namespace bandinv
