#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

#include "bandinv/dense_matrix.hpp"
#include "bandinv/errors.hpp"

namespace bandinv {

/// Metric on the index set {0..n-1}, generalizing |i - j| banding: zero
/// patterns and Wiener shells are dictated by rho(i, j) instead of |i - j|.
/// Sources: (a) the default offset metric, (b) a Euclidean point cloud,
/// (c) an explicit distance table (validated: symmetry, zero diagonal,
/// non-negativity, triangle inequality).
class IndexMetric {
public:
    static IndexMetric offset_metric(std::size_t n) {
        if (n == 0) throw InputError("IndexMetric: size must be positive");
        IndexMetric m;
        m.n_ = n;
        m.kind_ = Kind::offset;
        return m;
    }

    static IndexMetric from_points(const std::vector<std::vector<double>>& points) {
        if (points.empty()) throw InputError("IndexMetric: empty point cloud");
        const std::size_t d = points.front().size();
        if (d == 0) throw InputError("IndexMetric: points need at least one coordinate");
        for (const auto& p : points) {
            if (p.size() != d) throw InputError("IndexMetric: inconsistent point dimensions");
            for (double v : p)
                if (!std::isfinite(v)) throw InputError("IndexMetric: non-finite coordinate");
        }
        IndexMetric m;
        m.n_ = points.size();
        m.kind_ = Kind::points;
        m.dim_ = d;
        m.coords_.reserve(points.size() * d);
        for (const auto& p : points) m.coords_.insert(m.coords_.end(), p.begin(), p.end());
        return m;
    }

    static IndexMetric from_table(const DenseMatrix& table) {
        if (!table.square()) throw InputError("IndexMetric: distance table must be square");
        const std::size_t n = table.rows();
        const double scale = table.max_abs();
        const double tol = 1e-12 * std::max(scale, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (table(i, i) != 0.0) throw InputError("IndexMetric: table diagonal must be zero");
            for (std::size_t j = 0; j < n; ++j) {
                if (!std::isfinite(table(i, j)) || table(i, j) < 0.0)
                    throw InputError("IndexMetric: distances must be finite and non-negative");
                if (table(i, j) != table(j, i)) throw InputError("IndexMetric: table must be symmetric");
            }
        }
        // Triangle inequality, validated with a roundoff allowance.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t j = 0; j < n; ++j)
                    if (table(i, j) > table(i, l) + table(l, j) + tol)
                        throw InputError("IndexMetric: table violates the triangle inequality");
        IndexMetric m;
        m.n_ = n;
        m.kind_ = Kind::table;
        m.table_ = table;
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const {
        switch (kind_) {
            case Kind::offset:
                return static_cast<double>(i > j ? i - j : j - i);
            case Kind::points: {
                double s = 0.0;
                for (std::size_t t = 0; t < dim_; ++t) {
                    const double d = coords_[i * dim_ + t] - coords_[j * dim_ + t];
                    s += d * d;
                }
                return std::sqrt(s);
            }
            case Kind::table:
                return table_(i, j);
        }
        return 0.0;  // unreachable
    }

private:
    enum class Kind { offset, points, table };

    IndexMetric() = default;

    std::size_t n_ = 0;
    Kind kind_ = Kind::offset;
    std::size_t dim_ = 0;
    std::vector<double> coords_;  // points source, row-major n x dim
    DenseMatrix table_;           // table source
};

/// Generalized banding: zeroes every entry with rho(i, j) > r.
inline DenseMatrix metric_truncate(const DenseMatrix& a, const IndexMetric& rho, double r) {
    if (!a.square()) throw InputError("metric_truncate: matrix must be square");
    if (rho.size() != a.rows()) throw InputError("metric_truncate: metric size mismatch");
    if (!(r >= 0.0)) throw InputError("metric_truncate: radius must be non-negative");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (rho(i, j) > r) c(i, j) = 0.0;
    return c;
}

}  // namespace bandinv
