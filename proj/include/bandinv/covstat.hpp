#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bandinv/banded_matrix.hpp"
#include "bandinv/dense_matrix.hpp"
#include "bandinv/errors.hpp"
#include "bandinv/neumann.hpp"
#include "bandinv/operator_norm.hpp"
#include "bandinv/spectral.hpp"

namespace bandinv {

/// N draws from a p-variate centered Gaussian, rows are samples.
struct SampleSet {
    std::size_t n_samples = 0;
    std::size_t dim = 0;
    std::vector<double> data;  // row-major, n_samples x dim
    std::uint64_t seed = 0;

    double operator()(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
};

enum class EstimateKind { empirical, banded, banded_inverse };

inline const char* to_string(EstimateKind k) {
    switch (k) {
        case EstimateKind::empirical: return "empirical";
        case EstimateKind::banded: return "banded";
        case EstimateKind::banded_inverse: return "banded_inverse";
    }
    return "?";
}

/// A covariance (or precision-series) estimate with its provenance knobs.
struct CovarianceEstimate {
    DenseMatrix sigma_hat;
    EstimateKind kind = EstimateKind::empirical;
    std::optional<int> k;  // banding width, when banded
};

/// Deterministic sampler: x = L z with L the Cholesky factor of sigma and z
/// standard normal from mt19937_64(seed). One jitter retry (1e-10 * trace/p
/// on the diagonal) is allowed before giving up on a non-PD input.
inline SampleSet sample_gaussian(const DenseMatrix& sigma, std::size_t n_samples,
                                 std::uint64_t seed) {
    if (!sigma.square()) throw InputError("sample_gaussian: covariance must be square");
    if (n_samples == 0) throw InputError("sample_gaussian: need at least one sample");
    const std::size_t p = sigma.rows();

    Eigen::MatrixXd s = to_eigen(sigma);
    Eigen::LLT<Eigen::MatrixXd> llt(s);
    if (llt.info() != Eigen::Success) {
        double tr = 0.0;
        for (std::size_t i = 0; i < p; ++i) tr += sigma(i, i);
        s.diagonal().array() += 1e-10 * tr / static_cast<double>(p);
        llt.compute(s);
        if (llt.info() != Eigen::Success)
            throw MathError("sample_gaussian: covariance is not positive definite");
    }
    const Eigen::MatrixXd l = llt.matrixL();

    SampleSet out;
    out.n_samples = n_samples;
    out.dim = p;
    out.seed = seed;
    out.data.resize(n_samples * p);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd z(static_cast<Eigen::Index>(p));
    for (std::size_t i = 0; i < n_samples; ++i) {
        for (std::size_t j = 0; j < p; ++j) z(static_cast<Eigen::Index>(j)) = gauss(rng);
        const Eigen::VectorXd x = l * z;
        for (std::size_t j = 0; j < p; ++j) out.data[i * p + j] = x(static_cast<Eigen::Index>(j));
    }
    return out;
}

/// Centered empirical covariance with 1/N normalization. The upper triangle
/// is computed once and mirrored, so the result is symmetric to the bit.
inline CovarianceEstimate empirical_cov(const SampleSet& samples) {
    if (samples.n_samples < 2) throw InputError("empirical_cov: need at least two samples");
    const std::size_t n = samples.n_samples;
    const std::size_t p = samples.dim;

    std::vector<double> mean(p, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) mean[j] += samples(i, j);
    for (std::size_t j = 0; j < p; ++j) mean[j] /= static_cast<double>(n);

    DenseMatrix s(p, p, 0.0);
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a; b < p; ++b) {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                acc += (samples(i, a) - mean[a]) * (samples(i, b) - mean[b]);
            const double v = acc / static_cast<double>(n);
            s(a, b) = v;
            s(b, a) = v;
        }
    return CovarianceEstimate{std::move(s), EstimateKind::empirical, std::nullopt};
}

/// Banded covariance estimator: zero out everything beyond half-bandwidth k.
inline CovarianceEstimate banded_cov_estimator(const CovarianceEstimate& estimate, int k) {
    if (estimate.kind != EstimateKind::empirical)
        throw InputError("banded_cov_estimator: expects an empirical estimate");
    const BandedMatrix banded = band_truncate(estimate.sigma_hat, k);
    return CovarianceEstimate{banded.to_dense(), EstimateKind::banded, k};
}

/// Everything the precision-series estimator reports.
struct PrecisionEstimate {
    InverseCertificate certificate;   // truncated series for sigma_hat_k^{-1}
    BandedMatrix banded_cov;          // B_k(sigma_hat), the series' target
    double lambda_min = 0.0;          // eigenvalue range of B_k(sigma_hat)
    double lambda_max = 0.0;
    int k = 0;
    int terms = 0;
};

/// Precision estimator: band the empirical covariance at width k, certify it
/// positive definite by its eigenvalue range, and run the plain truncated
/// series with exactly those measured bounds (gamma_hat = 2/(max+min)).
inline PrecisionEstimate banded_precision_estimator(const CovarianceEstimate& estimate, int k,
                                                    int terms) {
    if (estimate.kind != EstimateKind::empirical)
        throw InputError("banded_precision_estimator: expects an empirical estimate");
    BandedMatrix banded = band_truncate(estimate.sigma_hat, k);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(banded.to_dense()),
                                                      Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (lo <= 0.0)
        throw MathError(
            "banded_precision_estimator: banded empirical covariance is indefinite "
            "(smallest eigenvalue " +
            std::to_string(lo) + "); increase the sample size or reduce k");

    PrecisionEstimate out{neumann_spd(banded, terms, user_bounds(lo, hi)), std::move(banded),
                          lo, hi, k, terms};
    return out;
}

/// Error bound for the series-at-banded-target chain against the true
/// precision matrix: 2 delta / (m (m - 2 delta)) for swapping the target,
/// plus (1/m) ((kappa-1)/(kappa+1))^n for the series tail. Requires
/// delta < m/2; bounds describe the true covariance.
inline double precision_tail_bound(const SpectralBounds& bounds, double delta_k, int n) {
    if (n < 0) throw InputError("precision_tail_bound: negative term count");
    if (!(delta_k >= 0.0)) throw InputError("precision_tail_bound: negative banding error");
    const double m = bounds.m_lo;
    if (delta_k >= m / 2.0)
        throw MathError("precision_tail_bound: banding error " + std::to_string(delta_k) +
                        " is not below m/2 = " + std::to_string(m / 2.0));
    const double swap = 2.0 * delta_k / (m * (m - 2.0 * delta_k));
    const double ratio = (bounds.kappa - 1.0) / (bounds.kappa + 1.0);
    return swap + std::pow(ratio, n) / m;
}

/// Cross-validated banding width: split samples into contiguous folds, score
/// each k by the average Frobenius distance between the banded train
/// covariance and the held-out empirical covariance, return the best k
/// (ties and non-improvements keep the smaller width).
inline int select_k(const SampleSet& samples, const std::vector<int>& grid, int folds = 2) {
    if (grid.empty()) throw InputError("select_k: empty width grid");
    if (folds < 2) throw InputError("select_k: need at least two folds");
    if (samples.n_samples < 2 * static_cast<std::size_t>(folds))
        throw InputError("select_k: need at least two samples per fold");

    std::vector<int> ks(grid);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int k : ks)
        if (k < 0 || static_cast<std::size_t>(k) >= samples.dim)
            throw InputError("select_k: width " + std::to_string(k) + " out of range");

    const std::size_t n = samples.n_samples;
    const std::size_t p = samples.dim;
    auto subset = [&](std::size_t lo, std::size_t hi, bool complement) {
        SampleSet s;
        s.dim = p;
        s.seed = samples.seed;
        for (std::size_t i = 0; i < n; ++i) {
            const bool in_fold = i >= lo && i < hi;
            if (in_fold == complement) continue;
            for (std::size_t j = 0; j < p; ++j) s.data.push_back(samples(i, j));
        }
        s.n_samples = s.data.size() / p;
        return s;
    };

    std::vector<double> risk(ks.size(), 0.0);
    for (int f = 0; f < folds; ++f) {
        const std::size_t lo = static_cast<std::size_t>(f) * n / static_cast<std::size_t>(folds);
        const std::size_t hi =
            static_cast<std::size_t>(f + 1) * n / static_cast<std::size_t>(folds);
        const CovarianceEstimate train = empirical_cov(subset(lo, hi, true));
        const CovarianceEstimate test = empirical_cov(subset(lo, hi, false));
        for (std::size_t t = 0; t < ks.size(); ++t) {
            const DenseMatrix diff =
                band_truncate(train.sigma_hat, ks[t]).to_dense() - test.sigma_hat;
            double fro = 0.0;
            for (double v : diff.data()) fro += v * v;
            risk[t] += std::sqrt(fro);
        }
    }

    std::size_t best = 0;
    for (std::size_t t = 1; t < ks.size(); ++t)
        if (risk[t] < risk[best]) best = t;
    return ks[best];
}

}  // namespace bandinv
