#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "bandinv/dense_matrix.hpp"
#include "bandinv/errors.hpp"
#include "bandinv/operator_norm.hpp"
#include "bandinv/spectral.hpp"

namespace bandinv {

/// Past/future covariance blocks of a jointly Gaussian pair:
/// sigma11 (q x q), sigma22 (k x k), sigma12 (q x k); sigma21 is implied by
/// symmetry of the assembled joint matrix.
struct CovBlocks {
    DenseMatrix sigma11;
    DenseMatrix sigma12;
    DenseMatrix sigma22;

    static CovBlocks make(DenseMatrix s11, DenseMatrix s12, DenseMatrix s22) {
        if (!s11.square() || !s22.square()) throw InputError("CovBlocks: corner blocks must be square");
        if (s12.rows() != s11.rows() || s12.cols() != s22.rows())
            throw InputError("CovBlocks: cross block shape mismatch");
        detail::require_symmetric(s11, "CovBlocks(sigma11)");
        detail::require_symmetric(s22, "CovBlocks(sigma22)");
        return CovBlocks{std::move(s11), std::move(s12), std::move(s22)};
    }

    /// Assembled joint covariance [[s11, s12], [s12^T, s22]].
    DenseMatrix joint() const {
        const std::size_t q = sigma11.rows();
        const std::size_t k = sigma22.rows();
        DenseMatrix s(q + k, q + k, 0.0);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j) s(i, j) = sigma11(i, j);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) s(q + i, q + j) = sigma22(i, j);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                s(i, q + j) = sigma12(i, j);
                s(q + j, i) = sigma12(i, j);
            }
        return s;
    }
};

/// Result of the closed-form Hellinger computation between the joint Gaussian
/// and the independent product of its marginals.
struct HellingerResult {
    double affinity = 1.0;  // A = integral of sqrt(f g)
    double h2 = 0.0;        // squared Hellinger distance, 2 (1 - A)
    double tv_lo = 0.0;     // H2 / 2
    double tv_hi = 0.0;     // min(1, sqrt(2) * H2); see tv_note
    std::vector<double> lambdas;  // whitened cross-product eigenvalues, clamped
    std::string tv_note;
};

inline const char* kTvUpperNote =
    "tv_hi uses the quadratic upper bound sqrt(2)*H2, clamped at 1; the standard "
    "linear bound sqrt(2)*H is tighter when H2 is large";

struct WindowedHellinger {
    std::size_t m = 0, n = 0, p = 0, k = 0;
    HellingerResult result;
};

/// Decay diagnostics for a covariance finite section.
struct MixingReport {
    std::vector<std::pair<int, double>> profile;        // (p, b(p))
    std::vector<std::pair<int, double>> gamma_profile;  // optional (p, gamma(p))
    std::vector<WindowedHellinger> hellinger;           // optional
    std::string verdict;
};

namespace detail {

inline void require_square_symmetric(const DenseMatrix& a, const char* who) {
    if (!a.square()) throw InputError(std::string(who) + ": matrix must be square");
    const double tol = 1e-12 * std::max(a.max_abs(), 1e-300);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (std::abs(a(i, j) - a(j, i)) > tol)
                throw InputError(std::string(who) + ": matrix must be symmetric");
}

}  // namespace detail

/// Beta-mixing criterion profile of a symmetric finite section: for each gap
/// p, b(p) = max over cut positions t of the squared-entry mass in the
/// upper-right tail {i <= t, j >= t + p}. The sup over an infinite index set
/// becomes a max over cuts; b is non-increasing in p by containment.
inline MixingReport beta_criterion_profile(const DenseMatrix& sigma, int p_max) {
    detail::require_square_symmetric(sigma, "beta_criterion_profile");
    const long n = static_cast<long>(sigma.rows());
    if (p_max < 1 || p_max >= n)
        throw InputError("beta_criterion_profile: need 1 <= p_max < n");

    // row_suffix(i, c) = sum_{j >= c} sigma_ij^2, then tail(t, c) accumulates
    // rows i <= t. b(p) = max_t tail(t, t + p): one O(n^2) table serves all p.
    std::vector<std::vector<double>> tail(static_cast<std::size_t>(n),
                                          std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0));
    for (long i = 0; i < n; ++i) {
        std::vector<double>& row = tail[static_cast<std::size_t>(i)];
        for (long c = n - 1; c >= 0; --c)
            row[static_cast<std::size_t>(c)] =
                row[static_cast<std::size_t>(c) + 1] +
                sigma(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) *
                    sigma(static_cast<std::size_t>(i), static_cast<std::size_t>(c));
        if (i > 0) {
            const std::vector<double>& prev = tail[static_cast<std::size_t>(i) - 1];
            for (long c = 0; c <= n; ++c) row[static_cast<std::size_t>(c)] += prev[static_cast<std::size_t>(c)];
        }
    }

    MixingReport report;
    report.profile.reserve(static_cast<std::size_t>(p_max));
    for (int p = 1; p <= p_max; ++p) {
        double best = 0.0;
        for (long t = 0; t + p <= n - 1; ++t)
            best = std::max(best, tail[static_cast<std::size_t>(t)][static_cast<std::size_t>(t + p)]);
        report.profile.emplace_back(p, best);
    }
    bool monotone = true;
    for (std::size_t t = 1; t < report.profile.size(); ++t)
        if (report.profile[t].second > report.profile[t - 1].second) monotone = false;
    report.verdict = monotone ? "profile non-increasing in p" : "profile not monotone";
    return report;
}

/// Simpler sufficient statistic: gamma(p) = total squared-entry mass at
/// offsets j - i >= p. Zero for banded sections once p exceeds the bandwidth.
inline double gamma_sufficient(const DenseMatrix& sigma, int p) {
    detail::require_square_symmetric(sigma, "gamma_sufficient");
    const long n = static_cast<long>(sigma.rows());
    if (p < 0 || p >= n) throw InputError("gamma_sufficient: need 0 <= p < n");
    double s = 0.0;
    for (long i = 0; i < n; ++i)
        for (long j = i + p; j < n; ++j) {
            const double v = sigma(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            s += v * v;
        }
    return s;
}

/// Cross-block second moment for rows [m..n] against columns
/// [n+p+1 .. n+p+k]: the squared-entry sum, cross-checked against the trace
/// of sigma12 * sigma21 (the two must agree to 1e-12 relative).
inline double block_trace(const DenseMatrix& sigma, std::size_t m, std::size_t n, std::size_t p,
                          std::size_t k) {
    if (!sigma.square()) throw InputError("block_trace: matrix must be square");
    const std::size_t size = sigma.rows();
    if (m > n || k == 0) throw InputError("block_trace: bad window");
    const std::size_t c1 = n + p + 1;
    const std::size_t c2 = n + p + k;
    if (c2 >= size) throw InputError("block_trace: window exceeds matrix size");

    double frob = 0.0;
    for (std::size_t i = m; i <= n; ++i)
        for (std::size_t j = c1; j <= c2; ++j) frob += sigma(i, j) * sigma(i, j);

    // Independent route: trace(S12 * S21), row-by-row.
    double tr = 0.0;
    for (std::size_t i = m; i <= n; ++i) {
        double rowsq = 0.0;
        for (std::size_t j = c1; j <= c2; ++j) rowsq += sigma(i, j) * sigma(j, i);
        tr += rowsq;
    }
    const double scale = std::max({std::abs(frob), std::abs(tr), 1e-300});
    if (std::abs(frob - tr) > 1e-12 * scale)
        throw MathError("block_trace: trace-product and entry-square computations disagree");
    return frob;
}

/// Blocks of sigma for the same windows block_trace uses.
inline CovBlocks extract_blocks(const DenseMatrix& sigma, std::size_t m, std::size_t n,
                                std::size_t p, std::size_t k) {
    if (!sigma.square()) throw InputError("extract_blocks: matrix must be square");
    const std::size_t size = sigma.rows();
    if (m > n || k == 0) throw InputError("extract_blocks: bad window");
    const std::size_t c1 = n + p + 1;
    const std::size_t c2 = n + p + k;
    if (c2 >= size) throw InputError("extract_blocks: window exceeds matrix size");
    const std::size_t q = n - m + 1;
    DenseMatrix s11(q, q), s12(q, k), s22(k, k);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) s11(i, j) = sigma(m + i, m + j);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) s22(i, j) = sigma(c1 + i, c1 + j);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < k; ++j) s12(i, j) = sigma(m + i, c1 + j);
    return CovBlocks{std::move(s11), std::move(s12), std::move(s22)};
}

/// Squared Frobenius norm of the cross block (no window bookkeeping).
inline double cross_trace(const CovBlocks& b) {
    double s = 0.0;
    for (double v : b.sigma12.data()) s += v * v;
    return s;
}

/// Marginal whitening: sigma_jj = Q_j^T Lambda_j Q_j (rows of Q_j are
/// eigenvectors), T_j = Lambda_j^{-1/2} Q_j maps each block to identity
/// covariance; the cross block becomes T_1 sigma12 T_2^T. Whitening leaves
/// the cross-product eigenvalue multiset and all Hellinger/TV quantities
/// unchanged.
inline CovBlocks whiten_blocks(const CovBlocks& b) {
    auto factor = [](const DenseMatrix& s, const char* who) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(s));
        if (es.eigenvalues().minCoeff() <= 0.0)
            throw MathError(std::string(who) + ": corner block is not positive definite");
        // T = Lambda^{-1/2} Q with Q = V^T (columns of V are eigenvectors).
        Eigen::MatrixXd t = es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                            es.eigenvectors().transpose();
        return t;
    };
    const Eigen::MatrixXd t1 = factor(b.sigma11, "whiten_blocks(sigma11)");
    const Eigen::MatrixXd t2 = factor(b.sigma22, "whiten_blocks(sigma22)");
    const Eigen::MatrixXd cross = t1 * to_eigen(b.sigma12) * t2.transpose();
    return CovBlocks{DenseMatrix::identity(b.sigma11.rows()), from_eigen(cross),
                     DenseMatrix::identity(b.sigma22.rows())};
}

/// Hellinger affinity between the joint Gaussian of the blocks and the
/// independent product of the marginals, via the closed-form product over the
/// whitened cross-product eigenvalues:
///     A = prod_j (1 - lambda_j)^{1/4} / (1 - lambda_j/4)^{1/2}.
/// lambda_j above 1 + 1e-8 means a singular joint covariance (deterministic
/// dependence) and is refused; values within roundoff of 1 clamp to 1 - 1e-12.
inline HellingerResult hellinger_affinity(const CovBlocks& b) {
    const CovBlocks w = whiten_blocks(b);
    const Eigen::MatrixXd d = to_eigen(w.sigma12);
    const Eigen::MatrixXd c =
        d.rows() <= d.cols() ? Eigen::MatrixXd(d * d.transpose()) : Eigen::MatrixXd(d.transpose() * d);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c, Eigen::EigenvaluesOnly);

    HellingerResult r;
    r.tv_note = kTvUpperNote;
    r.lambdas.reserve(static_cast<std::size_t>(es.eigenvalues().size()));
    double affinity = 1.0;
    for (Eigen::Index t = 0; t < es.eigenvalues().size(); ++t) {
        double lam = es.eigenvalues()(t);
        if (lam > 1.0 + 1e-8)
            throw DegeneracyError(
                "hellinger_affinity: cross-product eigenvalue " + std::to_string(lam) +
                " >= 1: joint covariance is singular (deterministic dependence)");
        lam = std::min(std::max(lam, 0.0), 1.0 - 1e-12);
        r.lambdas.push_back(lam);
        affinity *= std::pow(1.0 - lam, 0.25) / std::sqrt(1.0 - lam / 4.0);
    }
    r.affinity = affinity;
    r.h2 = 2.0 * (1.0 - affinity);
    r.tv_lo = r.h2 / 2.0;
    r.tv_hi = std::min(1.0, std::sqrt(2.0) * r.h2);
    return r;
}

/// Squeeze bracket for the affinity in terms of the whitened cross trace t:
/// (1 - t)^{1/4} <= A <= exp(-t/8), the lower bound read as 0 once t >= 1.
inline std::pair<double, double> squeeze_bounds(double t) {
    if (!(t >= 0.0)) throw InputError("squeeze_bounds: trace must be non-negative");
    const double lower = t < 1.0 ? std::pow(1.0 - t, 0.25) : 0.0;
    const double upper = std::exp(-t / 8.0);
    return {lower, upper};
}

/// Energy of the best linear prediction of coordinate n+p+1 from the window
/// [m..n]: sigma^T Sigma(window)^{-1} sigma. Exactly zero when the section is
/// banded and the gap clears the bandwidth (the cross vector vanishes).
inline double prediction_leakage(const DenseMatrix& sigma, std::size_t m, std::size_t n,
                                 std::size_t p) {
    if (!sigma.square()) throw InputError("prediction_leakage: matrix must be square");
    if (m > n) throw InputError("prediction_leakage: bad window");
    const std::size_t target = n + p + 1;
    if (target >= sigma.rows()) throw InputError("prediction_leakage: target index out of range");

    const std::size_t q = n - m + 1;
    Eigen::MatrixXd w(q, q);
    Eigen::VectorXd v(q);
    for (std::size_t i = 0; i < q; ++i) {
        v(static_cast<Eigen::Index>(i)) = sigma(m + i, target);
        for (std::size_t j = 0; j < q; ++j)
            w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sigma(m + i, m + j);
    }
    Eigen::LLT<Eigen::MatrixXd> llt(w);
    if (llt.info() != Eigen::Success)
        throw MathError("prediction_leakage: window is not positive definite");
    return v.dot(llt.solve(v));
}

/// Companion bound for prediction_leakage at gap p: eps^2 * ||Sigma^{-1}||
/// with eps the band-distance upper bracket at width p. Valid for every
/// window: the cross vector is part of the off-band remainder, and a
/// principal-window inverse never beats the full inverse norm (interlacing).
inline double prediction_leakage_bound(const DenseMatrix& sigma, int p) {
    const double eps = band_distance_bounds(sigma, p).second;
    const SpectralBounds b = spd_bounds(sigma);
    return eps * eps / b.m_lo;
}

/// Frobenius norm of the entries at offsets |i - j| >= m (the Frobenius-cone
/// seminorm; m = 0 recovers the full Frobenius norm).
inline double frobenius_band_norm(const DenseMatrix& sigma, int m) {
    if (!sigma.square()) throw InputError("frobenius_band_norm: matrix must be square");
    if (m < 0) throw InputError("frobenius_band_norm: band index must be >= 0");
    const long n = static_cast<long>(sigma.rows());
    double s = 0.0;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (std::labs(i - j) >= m) {
                const double v = sigma(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                s += v * v;
            }
    return std::sqrt(s);
}

/// Entrywise (Schur) product masked to offsets |i - j| >= m. The cone
/// seminorm is submultiplicative under this product.
inline DenseMatrix schur_band_product(const DenseMatrix& s0, const DenseMatrix& t0, int m) {
    if (!s0.square()) throw InputError("schur_band_product: matrices must be square");
    require_same_shape(s0, t0, "schur_band_product");
    if (m < 0) throw InputError("schur_band_product: band index must be >= 0");
    const long n = static_cast<long>(s0.rows());
    DenseMatrix c(s0.rows(), s0.cols(), 0.0);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (std::labs(i - j) >= m)
                c(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    s0(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                    t0(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return c;
}

/// Side-by-side decay evidence that the Frobenius cone is closed under
/// inversion: the criterion profiles and cone tails of an SPD section and of
/// its dense inverse.
struct FInversionReport {
    std::vector<std::pair<int, double>> sigma_profile;
    std::vector<std::pair<int, double>> inverse_profile;
    double sigma_tail = 0.0;    // frobenius_band_norm(sigma, m)
    double inverse_tail = 0.0;  // frobenius_band_norm(sigma^{-1}, m)
    int band_index = 0;
};

inline FInversionReport f_inversion_witness(const DenseMatrix& sigma, int m, int p_max) {
    detail::require_square_symmetric(sigma, "f_inversion_witness");
    Eigen::LLT<Eigen::MatrixXd> llt(to_eigen(sigma));
    if (llt.info() != Eigen::Success)
        throw MathError("f_inversion_witness: matrix is not positive definite");
    Eigen::MatrixXd inv_e =
        llt.solve(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(sigma.rows()),
                                            static_cast<Eigen::Index>(sigma.rows())));
    inv_e = 0.5 * (inv_e + inv_e.transpose()).eval();  // symmetrize solver roundoff
    const DenseMatrix inv = from_eigen(inv_e);

    FInversionReport rep;
    rep.band_index = m;
    rep.sigma_profile = beta_criterion_profile(sigma, p_max).profile;
    rep.inverse_profile = beta_criterion_profile(inv, p_max).profile;
    rep.sigma_tail = frobenius_band_norm(sigma, m);
    rep.inverse_tail = frobenius_band_norm(inv, m);
    return rep;
}

}  // namespace bandinv
