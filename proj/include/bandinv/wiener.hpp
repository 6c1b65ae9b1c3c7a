#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bandinv/banded_matrix.hpp"
#include "bandinv/dense_matrix.hpp"
#include "bandinv/errors.hpp"
#include "bandinv/index_metric.hpp"
#include "bandinv/neumann.hpp"
#include "bandinv/spectral.hpp"

namespace bandinv {

/// Finitely supported Fourier coefficients (f_k) of a symbol on the unit
/// circle. Offsets are 128-bit: the sparse-lacunary example symbol carries
/// offsets +-m^4, which overflow int64 already at m = 10^6, the scale the
/// summability diagnostics are exercised at.
class SymbolSeries {
public:
    using Offset = __int128;

    SymbolSeries() = default;

    /// Insert or overwrite a coefficient. Zero values are stored (callers may
    /// care about explicit support); non-finite values are rejected.
    void set(Offset k, double value) {
        if (!std::isfinite(value)) throw InputError("SymbolSeries: non-finite coefficient");
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const std::pair<Offset, double>& t, Offset key) { return t.first < key; });
        if (it != terms_.end() && it->first == k)
            it->second = value;
        else
            terms_.insert(it, {k, value});
    }

    double coefficient(Offset k) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const std::pair<Offset, double>& t, Offset key) { return t.first < key; });
        return (it != terms_.end() && it->first == k) ? it->second : 0.0;
    }

    /// Terms sorted by ascending offset.
    const std::vector<std::pair<Offset, double>>& terms() const noexcept { return terms_; }

    std::size_t support_size() const noexcept { return terms_.size(); }

private:
    std::vector<std::pair<Offset, double>> terms_;
};

/// Decimal rendering of a 128-bit offset (for reports and error messages).
inline std::string offset_to_string(SymbolSeries::Offset v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

/// Classical Wiener norm: sum over diagonals of the diagonal supremum.
inline double wiener_norm(const DenseMatrix& a) {
    if (!a.square()) throw InputError("wiener_norm: matrix must be square");
    const long n = static_cast<long>(a.rows());
    double s = 0.0;
    for (long d = -(n - 1); d <= n - 1; ++d) s += diagonal_sup(a, d);
    return s;
}

inline double wiener_norm(const BandedMatrix& a) {
    double s = 0.0;
    for (int d = -a.half_bandwidth(); d <= a.half_bandwidth(); ++d) s += diagonal_sup(a, d);
    return s;
}

/// Metric-generalized Wiener norm: distances are quantized into half-open
/// shells (r-1, r] by ceiling (shell 0 is the diagonal rho = 0). The sum runs
/// over signed shell indices k in Z with d_k = d_{|k|}, so each shell r >= 1
/// is counted twice -- once per sign, exactly as the two diagonals +-r of the
/// classical case. With the |i-j| metric this reproduces wiener_norm on every
/// matrix whose opposite diagonals share their suprema (all symmetric ones).
inline double generalized_wiener_norm(const DenseMatrix& a, const IndexMetric& rho) {
    if (!a.square()) throw InputError("generalized_wiener_norm: matrix must be square");
    if (rho.size() != a.rows()) throw InputError("generalized_wiener_norm: metric size mismatch");
    std::vector<double> shell_sup;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double dist = rho(i, j);
            const std::size_t shell = dist == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(dist));
            if (shell >= shell_sup.size()) shell_sup.resize(shell + 1, 0.0);
            shell_sup[shell] = std::max(shell_sup[shell], std::abs(a(i, j)));
        }
    double s = shell_sup.empty() ? 0.0 : shell_sup[0];
    for (std::size_t r = 1; r < shell_sup.size(); ++r) s += 2.0 * shell_sup[r];
    return s;
}

/// Finite one-sided section of the constant-diagonal (Laurent) matrix of f:
/// entry (i, j) = f_{i-j} for i, j = 0..n-1.
inline DenseMatrix laurent_matrix(const SymbolSeries& f, std::size_t n) {
    if (n == 0) throw InputError("laurent_matrix: size must be positive");
    DenseMatrix a(n, n, 0.0);
    const long ln = static_cast<long>(n);
    for (const auto& [k, v] : f.terms()) {
        if (k <= -ln || k >= ln) continue;  // offset outside the finite section
        const long d = static_cast<long>(k);
        const long lo = std::max<long>(0, d);
        const long hi = std::min<long>(ln - 1, ln - 1 + d);
        for (long i = lo; i <= hi; ++i) a(static_cast<std::size_t>(i), static_cast<std::size_t>(i - d)) = v;
    }
    return a;
}

/// Wiener norm of the symbol itself: sum |f_k|. Compensated (Neumaier)
/// accumulation: long lacunary sums are compared against tail allowances at
/// the 1e-12 level, which naive accumulation over 10^6 terms can miss.
inline double symbol_wiener_norm(const SymbolSeries& f) {
    double sum = 0.0;
    double comp = 0.0;
    for (const auto& [k, v] : f.terms()) {
        const double x = std::abs(v);
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

/// Partial Sobolev-1/2 sum: sum over |k| <= K of |k| * f_k^2, accumulated in
/// ascending offset order. Bounded iff the symbol has square-summable
/// half-derivative up to the cutoff; diverges for the lacunary example.
inline double sobolev_half_partial(const SymbolSeries& f, SymbolSeries::Offset cutoff) {
    if (cutoff < 0) throw InputError("sobolev_half_partial: cutoff must be >= 0");
    double s = 0.0;
    for (const auto& [k, v] : f.terms()) {
        const SymbolSeries::Offset mag = k < 0 ? -k : k;
        if (mag > cutoff) continue;
        s += static_cast<double>(mag) * v * v;
    }
    return s;
}

/// The lacunary symbol with b_0 = shift and b_{+-m^4} = 1/m^2 for m <= m_max.
/// Its coefficient sums converge (2 * sum 1/m^2 -> pi^2/3) while the Sobolev
/// half-norm diverges (each m contributes exactly 2), making the induced
/// process a strong-but-not-beta-mixing witness. shift = 4 keeps the symbol
/// range inside (4 - pi^2/3, 4 + pi^2/3), strictly positive.
inline SymbolSeries example53_symbol(long long m_max, double shift = 4.0) {
    if (m_max < 1) throw InputError("example53_symbol: m_max must be >= 1");
    if (m_max > 3000000000LL)
        throw InputError("example53_symbol: m_max^4 overflows the 128-bit offset range");
    SymbolSeries f;
    // Ascending offset order keeps every insert at the tail of the sorted
    // coefficient vector (support is ~2*m_max; front inserts would be quadratic).
    for (long long m = m_max; m >= 1; --m) {
        const SymbolSeries::Offset m2 = static_cast<SymbolSeries::Offset>(m) * m;
        f.set(-(m2 * m2), 1.0 / (static_cast<double>(m) * static_cast<double>(m)));
    }
    f.set(0, shift);
    for (long long m = 1; m <= m_max; ++m) {
        const SymbolSeries::Offset m2 = static_cast<SymbolSeries::Offset>(m) * m;
        f.set(m2 * m2, 1.0 / (static_cast<double>(m) * static_cast<double>(m)));
    }
    return f;
}

/// Geometric tail r_t of the general-path series, applied per diagonal of the
/// inverse: diagonals of A^{-1} with |j| > 3*t*k are dominated by r_t, so
/// d_j(A^{-1}) <= r_{ceil(|j|/(3k)) - 1} for j != 0, and d_0 <= 1/m_lo.
inline double inverse_diagonal_bound(const SpectralBounds& b, int k, long long j) {
    if (k < 1) throw InputError("inverse_diagonal_bound: half-bandwidth must be >= 1");
    if (j == 0) return 1.0 / b.m_lo;
    const long long mag = j < 0 ? -j : j;
    const long long group = (mag + 3LL * k - 1) / (3LL * k);  // ceil(|j| / (3k)) >= 1
    const long long tail_index = group - 1;
    if (tail_index > 1000000000LL) return 0.0;  // ratio < 1: bound is numerically 0 this far out
    return general_error_bound(b, static_cast<int>(tail_index));
}

/// Closed-form upper bound on the Wiener norm of A^{-1} for invertible banded
/// A: d_0 + 6k * sum_t r_t = 1/m_lo + 3k * kappa^2 (kappa^2 - 1) / M_hi.
inline double inverse_wiener_bound(const SpectralBounds& b, int k) {
    if (k < 1) throw InputError("inverse_wiener_bound: half-bandwidth must be >= 1");
    const double k2 = b.kappa * b.kappa;
    return 1.0 / b.m_lo + 3.0 * static_cast<double>(k) * k2 * (k2 - 1.0) / b.M_hi;
}

}  // namespace bandinv
