#pragma once

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bandinv/banded_matrix.hpp"
#include "bandinv/covstat.hpp"
#include "bandinv/dense_matrix.hpp"
#include "bandinv/errors.hpp"
#include "bandinv/index_metric.hpp"
#include "bandinv/permutation.hpp"
#include "bandinv/wiener.hpp"

namespace bandinv {

/// Shortest round-trip-exact decimal form of a double.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

enum class MatrixFormat { dense, banded, coo };

/// A parsed matrix file. `dense` is always populated; `banded` carries the
/// declared band structure when the file used the banded format.
struct MatrixFile {
    MatrixFormat format = MatrixFormat::dense;
    DenseMatrix dense;
    std::optional<BandedMatrix> banded;
};

namespace detail {

/// Whitespace token stream over a whole file, with positioned errors.
class TokenReader {
public:
    TokenReader(const std::string& path) : path_(path) {
        std::ifstream in(path);
        if (!in) throw InputError(path + ": cannot open file");
        std::string tok;
        while (in >> tok) tokens_.push_back(tok);
    }

    bool done() const noexcept { return next_ == tokens_.size(); }

    std::string word(const char* what) {
        if (done()) throw InputError(path_ + ": unexpected end of file, expected " + what);
        return tokens_[next_++];
    }

    double number(const char* what) {
        const std::string tok = word(what);
        errno = 0;
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size() || errno == ERANGE || !std::isfinite(v))
            throw InputError(path_ + ": bad " + std::string(what) + " '" + tok + "'");
        return v;
    }

    long long integer(const char* what) {
        const std::string tok = word(what);
        errno = 0;
        char* end = nullptr;
        const long long v = std::strtoll(tok.c_str(), &end, 10);
        if (end != tok.c_str() + tok.size() || errno == ERANGE)
            throw InputError(path_ + ": bad " + std::string(what) + " '" + tok + "'");
        return v;
    }

    std::size_t count(const char* what) {
        const long long v = integer(what);
        if (v < 0) throw InputError(path_ + ": " + what + " must be non-negative");
        return static_cast<std::size_t>(v);
    }

    void expect_done() {
        if (!done())
            throw InputError(path_ + ": trailing data starting at '" + tokens_[next_] + "'");
    }

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
    std::vector<std::string> tokens_;
    std::size_t next_ = 0;
};

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open file for writing");
    return out;
}

}  // namespace detail

/// Reads any of the three matrix formats:
///   dense n        followed by n*n entries, row-major
///   banded n k     followed by, for d = -k..k in order: d then n-|d| entries
///   coo n nnz      followed by nnz triples "i j value" (duplicates refused)
inline MatrixFile read_matrix(const std::string& path) {
    detail::TokenReader r(path);
    const std::string kind = r.word("format tag");

    MatrixFile mf;
    if (kind == "dense") {
        const std::size_t n = r.count("dimension");
        if (n == 0) throw InputError(path + ": dimension must be positive");
        DenseMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = r.number("matrix entry");
        r.expect_done();
        mf.format = MatrixFormat::dense;
        mf.dense = std::move(a);
    } else if (kind == "banded") {
        const std::size_t n = r.count("dimension");
        const long long k = r.integer("half-bandwidth");
        if (n == 0) throw InputError(path + ": dimension must be positive");
        if (k < 0 || static_cast<std::size_t>(k) >= n)
            throw InputError(path + ": need 0 <= k < n");
        BandedMatrix a(n, static_cast<int>(k));
        for (long long d = -k; d <= k; ++d) {
            if (r.integer("diagonal offset") != d)
                throw InputError(path + ": diagonal offsets must run in order -k..k");
            std::vector<double>& diag = a.diagonal(static_cast<long>(d));
            for (double& v : diag) v = r.number("diagonal entry");
        }
        r.expect_done();
        mf.format = MatrixFormat::banded;
        mf.dense = a.to_dense();
        mf.banded = std::move(a);
    } else if (kind == "coo") {
        const std::size_t n = r.count("dimension");
        const std::size_t nnz = r.count("entry count");
        if (n == 0) throw InputError(path + ": dimension must be positive");
        DenseMatrix a(n, n, 0.0);
        std::vector<bool> seen(n * n, false);
        for (std::size_t t = 0; t < nnz; ++t) {
            const std::size_t i = r.count("row index");
            const std::size_t j = r.count("column index");
            if (i >= n || j >= n) throw InputError(path + ": coo index out of range");
            if (seen[i * n + j])
                throw InputError(path + ": duplicate coo entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ")");
            seen[i * n + j] = true;
            a(i, j) = r.number("coo value");
        }
        r.expect_done();
        mf.format = MatrixFormat::coo;
        mf.dense = std::move(a);
    } else {
        throw InputError(path + ": unknown matrix format tag '" + kind + "'");
    }
    return mf;
}

inline void write_matrix_dense(const std::string& path, const DenseMatrix& a) {
    if (!a.square()) throw InputError("write_matrix_dense: matrix must be square");
    std::ofstream out = detail::open_out(path);
    out << "dense " << a.rows() << "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << format_double(a(i, j));
        out << "\n";
    }
}

inline void write_matrix_banded(const std::string& path, const BandedMatrix& a) {
    std::ofstream out = detail::open_out(path);
    out << "banded " << a.size() << " " << a.half_bandwidth() << "\n";
    const long k = a.half_bandwidth();
    for (long d = -k; d <= k; ++d) {
        out << d;
        for (double v : a.diagonal(d)) out << " " << format_double(v);
        out << "\n";
    }
}

/// Writes the nonzero entries in row-major order.
inline void write_matrix_coo(const std::string& path, const DenseMatrix& a) {
    if (!a.square()) throw InputError("write_matrix_coo: matrix must be square");
    std::size_t nnz = 0;
    for (double v : a.data())
        if (v != 0.0) ++nnz;
    std::ofstream out = detail::open_out(path);
    out << "coo " << a.rows() << " " << nnz << "\n";
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0.0) out << i << " " << j << " " << format_double(a(i, j)) << "\n";
}

/// points n d, then n rows of d coordinates.
inline IndexMetric read_points(const std::string& path) {
    detail::TokenReader r(path);
    if (r.word("format tag") != "points") throw InputError(path + ": expected a points file");
    const std::size_t n = r.count("point count");
    const std::size_t d = r.count("dimension");
    if (n == 0 || d == 0) throw InputError(path + ": need at least one point and one dimension");
    std::vector<std::vector<double>> pts(n, std::vector<double>(d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) pts[i][j] = r.number("coordinate");
    r.expect_done();
    return IndexMetric::from_points(pts);
}

/// perm n, then the images pi(0) .. pi(n-1).
inline Permutation read_permutation(const std::string& path) {
    detail::TokenReader r(path);
    if (r.word("format tag") != "perm") throw InputError(path + ": expected a perm file");
    const std::size_t n = r.count("length");
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = r.count("image index");
    r.expect_done();
    return Permutation(std::move(image));
}

/// Symbol files are bare "offset coefficient" pairs, one per line.
inline SymbolSeries read_symbol(const std::string& path) {
    detail::TokenReader r(path);
    SymbolSeries f;
    std::set<long long> seen;
    while (!r.done()) {
        const long long k = r.integer("symbol offset");
        const double v = r.number("symbol coefficient");
        if (!seen.insert(k).second)
            throw InputError(path + ": duplicate symbol offset " + std::to_string(k));
        f.set(k, v);
    }
    return f;
}

inline void write_symbol(const std::string& path, const SymbolSeries& f) {
    std::ofstream out = detail::open_out(path);
    for (const auto& [k, v] : f.terms())
        out << offset_to_string(k) << " " << format_double(v) << "\n";
}

/// samples N p, then N rows of p values.
inline SampleSet read_samples(const std::string& path) {
    detail::TokenReader r(path);
    if (r.word("format tag") != "samples") throw InputError(path + ": expected a samples file");
    SampleSet s;
    s.n_samples = r.count("sample count");
    s.dim = r.count("dimension");
    if (s.n_samples == 0 || s.dim == 0)
        throw InputError(path + ": need at least one sample and one dimension");
    s.data.resize(s.n_samples * s.dim);
    for (double& v : s.data) v = r.number("sample value");
    r.expect_done();
    return s;
}

inline void write_samples(const std::string& path, const SampleSet& s) {
    std::ofstream out = detail::open_out(path);
    out << "samples " << s.n_samples << " " << s.dim << "\n";
    for (std::size_t i = 0; i < s.n_samples; ++i) {
        for (std::size_t j = 0; j < s.dim; ++j) out << (j ? " " : "") << format_double(s(i, j));
        out << "\n";
    }
}

}  // namespace bandinv
