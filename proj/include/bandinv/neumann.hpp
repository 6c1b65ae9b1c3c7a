#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "bandinv/banded_matrix.hpp"
#include "bandinv/dense_matrix.hpp"
#include "bandinv/errors.hpp"
#include "bandinv/operator_norm.hpp"
#include "bandinv/spectral.hpp"

namespace bandinv {

/// Extra data recorded by the band-dominated construction.
struct BdoData {
    int k = 0;              // truncation half-bandwidth
    double epsilon_k = 0.0; // measured ||A - B_k(A)||
    double alpha_k = 1.0;   // m_lo / (m_lo - epsilon_k)
    double kappa_plus = 0.0;
    double kappa_minus = 0.0;
};

/// A banded approximant of A^{-1} with its closed-form error bound and the
/// quantities that produced it. Guarantee: ||A^{-1} - approx|| <= error_bound.
struct InverseCertificate {
    BandedMatrix approx;
    long band_width = 0;  // certified bandwidth: n*k (SPD), 3*n*k (general, n>=1)
    int terms = 0;        // series length n (j = 0..n)
    double gamma = 0.0;
    SpectralBounds bounds_used;
    double error_bound = 0.0;
    std::string construction;  // "neumann_spd" | "neumann_general" | "bdo_inverse"
    std::string rigor;         // "rigorous" | "floating-point conservative"
    std::optional<BdoData> bdo;
};

/// SPD-path bound after n+1 series terms: (1/m) * ((kappa-1)/(kappa+1))^{n+1}.
inline double spd_error_bound(const SpectralBounds& b, int terms) {
    if (terms < 0) throw InputError("spd_error_bound: terms must be >= 0");
    const double ratio = (b.kappa - 1.0) / (b.kappa + 1.0);
    return (1.0 / b.m_lo) * std::pow(ratio, terms + 1);
}

/// General-path bound: (kappa^2/M) * ((kappa^2-1)/(kappa^2+1))^{n+1}.
inline double general_error_bound(const SpectralBounds& b, int terms) {
    if (terms < 0) throw InputError("general_error_bound: terms must be >= 0");
    const double k2 = b.kappa * b.kappa;
    const double ratio = (k2 - 1.0) / (k2 + 1.0);
    return (k2 / b.M_hi) * std::pow(ratio, terms + 1);
}

namespace detail {

// gamma * sum_{j=0}^{n} (I - gamma*A)^j, accumulated in fixed order so that
// repeated runs (and independent callers with identical inputs) agree bitwise.
inline BandedMatrix neumann_polynomial(const BandedMatrix& a, double gamma, int terms) {
    const BandedMatrix g = add(BandedMatrix::identity(a.size()), scale(-gamma, a));
    BandedMatrix partial = BandedMatrix::identity(a.size());  // (I - gamma*A)^j, j = 0
    BandedMatrix sum = partial;
    for (int j = 1; j <= terms; ++j) {
        partial = matmul(g, partial);
        sum = add(sum, partial);
    }
    return scale(gamma, sum);
}

// Cheap lower estimate of ||A||: the largest column 2-norm.
inline double max_column_norm(const BandedMatrix& a) {
    const long n = static_cast<long>(a.size());
    const int k = a.half_bandwidth();
    double best = 0.0;
    for (long j = 0; j < n; ++j) {
        double s = 0.0;
        const long ilo = std::max<long>(0, j - k);
        const long ihi = std::min<long>(n - 1, j + k);
        for (long i = ilo; i <= ihi; ++i) {
            const double v = a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            s += v * v;
        }
        best = std::max(best, s);
    }
    return std::sqrt(best);
}

// User-supplied bounds skip the eigensolve validation but must still be
// plausible: M_hi below a cheap lower estimate of ||A|| can only produce an
// unsound certificate. The 1e-9 headroom absorbs eigensolver roundoff when
// callers feed back raw computed eigenvalues.
inline void check_bounds_consistency(const BandedMatrix& a, const SpectralBounds& b,
                                     const char* who) {
    const double colnorm = max_column_norm(a);
    if (b.M_hi < colnorm * (1.0 - 1e-9))
        throw MathError(std::string(who) +
                        ": certificate refused, M_hi is below a column-norm lower estimate of ||A||");
}

}  // namespace detail

/// Banded approximate inverse of an SPD banded matrix via the scaled Neumann
/// series gamma * sum_{j<=n} (I - gamma*A)^j with gamma = 2/(M_hi + m_lo).
/// The approximant lies within half-bandwidth n*k and satisfies
/// ||A^{-1} - approx|| <= (1/m_lo) * ((kappa-1)/(kappa+1))^{n+1}.
inline InverseCertificate neumann_spd(const BandedMatrix& a, int terms,
                                      std::optional<SpectralBounds> bounds = std::nullopt) {
    if (terms < 0) throw InputError("neumann_spd: terms must be >= 0");
    SpectralBounds b;
    if (bounds.has_value()) {
        b = *bounds;
        detail::check_bounds_consistency(a, b, "neumann_spd");
    } else {
        b = spd_bounds(a);  // validates symmetry and positive definiteness
    }
    const double gamma = 2.0 / (b.M_hi + b.m_lo);
    InverseCertificate cert{
        .approx = detail::neumann_polynomial(a, gamma, terms),
        .band_width = static_cast<long>(terms) * a.half_bandwidth(),
        .terms = terms,
        .gamma = gamma,
        .bounds_used = b,
        .error_bound = spd_error_bound(b, terms),
        .construction = "neumann_spd",
        .rigor = b.rigor(),
        .bdo = std::nullopt,
    };
    return cert;
}

/// Banded approximate inverse of a general invertible banded matrix:
/// A^{-1} = (A*A)^{-1} A*, with the SPD machinery applied to B = A*A and
/// gamma_B = 2/(M_hi^2 + m_lo^2). The certificate records the bandwidth
/// accounting 3*n*k (true stored width is (2n+1)*k for n >= 1, and k at n=0).
inline InverseCertificate neumann_general(const BandedMatrix& a, int terms,
                                          std::optional<SpectralBounds> bounds = std::nullopt) {
    if (terms < 0) throw InputError("neumann_general: terms must be >= 0");
    SpectralBounds b;
    if (bounds.has_value()) {
        b = *bounds;
        detail::check_bounds_consistency(a, b, "neumann_general");
    } else {
        b = singular_bounds(a);
    }
    const double gamma_b = 2.0 / (b.M_hi * b.M_hi + b.m_lo * b.m_lo);
    const BandedMatrix at = adjoint(a);
    const BandedMatrix big = matmul(at, a);
    const BandedMatrix poly = detail::neumann_polynomial(big, gamma_b, terms);
    InverseCertificate cert{
        .approx = matmul(poly, at),
        .band_width = terms >= 1 ? 3L * terms * a.half_bandwidth() : a.half_bandwidth(),
        .terms = terms,
        .gamma = gamma_b,
        .bounds_used = b,
        .error_bound = general_error_bound(b, terms),
        .construction = "neumann_general",
        .rigor = b.rigor(),
        .bdo = std::nullopt,
    };
    return cert;
}

/// Banded approximate inverse of a band-dominated matrix: truncate to
/// half-bandwidth k, invert the truncation via the general path, and assemble
/// the two-part bound: the truncation term epsilon*alpha/m_lo^2 plus the
/// series term (kappa+^2/(M_hi+epsilon)) * ((kappa+^2-1)/(kappa-^2+1))^{n+1},
/// kappa+- = (M_hi +- epsilon) * alpha / m_lo, alpha = m_lo/(m_lo - epsilon).
/// Admissibility requires epsilon = ||A - B_k(A)|| < m_lo/2.
inline InverseCertificate bdo_inverse(const DenseMatrix& a, int k, int terms) {
    if (terms < 0) throw InputError("bdo_inverse: terms must be >= 0");
    if (!a.square()) throw InputError("bdo_inverse: matrix must be square");
    const long n = static_cast<long>(a.rows());
    if (k < 0 || k >= n) throw InputError("bdo_inverse: invalid half-bandwidth (need 0 <= k < n)");

    const SpectralBounds outer = singular_bounds(a);

    auto truncation_error_at = [&a](int kk) {
        return op_norm(subtract(a, band_truncate(a, kk).to_dense()));
    };
    const double eps = truncation_error_at(k);
    if (!(eps < outer.m_lo / 2.0)) {
        int admissible = k;
        for (int kk = k + 1; kk < n; ++kk) {
            if (truncation_error_at(kk) < outer.m_lo / 2.0) {
                admissible = kk;
                break;
            }
        }
        throw TruncationError(
            "bdo_inverse: truncation too coarse, ||A - B_k(A)|| = " + std::to_string(eps) +
                " >= m_lo/2 = " + std::to_string(outer.m_lo / 2.0) +
                "; minimal admissible half-bandwidth is " + std::to_string(admissible),
            admissible);
    }

    const double alpha = outer.m_lo / (outer.m_lo - eps);
    const double kappa_plus = (outer.M_hi + eps) * alpha / outer.m_lo;
    const double kappa_minus = (outer.M_hi - eps) * alpha / outer.m_lo;

    const BandedMatrix ak = band_truncate(a, k);
    // The approximant is the general-path series for the truncation, built with
    // the truncation's own singular-value bracket.
    InverseCertificate inner = neumann_general(ak, terms);

    const double horiz = eps * alpha / (outer.m_lo * outer.m_lo);
    const double vert = (kappa_plus * kappa_plus / (outer.M_hi + eps)) *
                        std::pow((kappa_plus * kappa_plus - 1.0) / (kappa_minus * kappa_minus + 1.0),
                                 terms + 1);

    InverseCertificate cert{
        .approx = std::move(inner.approx),
        .band_width = terms >= 1 ? 3L * terms * k : static_cast<long>(k),
        .terms = terms,
        .gamma = inner.gamma,
        .bounds_used = outer,
        .error_bound = horiz + vert,
        .construction = "bdo_inverse",
        .rigor = outer.rigor(),
        .bdo = BdoData{.k = k,
                       .epsilon_k = eps,
                       .alpha_k = alpha,
                       .kappa_plus = kappa_plus,
                       .kappa_minus = kappa_minus},
    };
    return cert;
}

enum class SeriesKind { spd, general };

/// Smallest n with error_bound(n) <= tol, from the exact logarithm of the
/// geometric bound (then nudged for roundoff). kappa == 1 returns 0.
inline int terms_for_tolerance(const SpectralBounds& b, SeriesKind kind, double tol) {
    if (!(tol > 0.0)) throw InputError("terms_for_tolerance: tolerance must be positive");
    const bool spd = kind == SeriesKind::spd;
    const double ratio = spd ? (b.kappa - 1.0) / (b.kappa + 1.0)
                             : (b.kappa * b.kappa - 1.0) / (b.kappa * b.kappa + 1.0);
    const double prefactor = spd ? 1.0 / b.m_lo : b.kappa * b.kappa / b.M_hi;
    if (ratio <= 0.0 || prefactor <= tol) return 0;

    const double exact = std::log(tol / prefactor) / std::log(ratio);  // wanted: n+1 >= exact
    double n_guess = std::ceil(exact) - 1.0;
    if (n_guess < 0.0) n_guess = 0.0;
    if (n_guess > 1e9)
        throw MathError("terms_for_tolerance: tolerance unreachable below 1e9 series terms");
    int terms = static_cast<int>(n_guess);
    auto bound_at = [&](int t) { return prefactor * std::pow(ratio, t + 1); };
    while (terms > 0 && bound_at(terms - 1) <= tol) --terms;
    while (bound_at(terms) > tol) {
        ++terms;
        if (terms > 1000000000) throw MathError("terms_for_tolerance: tolerance unreachable");
    }
    return terms;
}

}  // namespace bandinv
