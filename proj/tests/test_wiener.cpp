#include <catch2/catch_amalgamated.hpp>

#include <bandinv/banded_matrix.hpp>
#include <bandinv/dense_matrix.hpp>
#include <bandinv/errors.hpp>
#include <bandinv/index_metric.hpp>
#include <bandinv/operator_norm.hpp>
#include <bandinv/spectral.hpp>
#include <bandinv/wiener.hpp>

#include <cmath>

using namespace bandinv;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("wiener norm of the -1,4,-1 tridiagonal section is exactly 6") {
    BandedMatrix a(8, 1);
    for (double& v : a.diagonal(0)) v = 4.0;
    for (double& v : a.diagonal(1)) v = -1.0;
    for (double& v : a.diagonal(-1)) v = -1.0;
    CHECK(wiener_norm(a) == 6.0);
    CHECK(wiener_norm(a.to_dense()) == 6.0);
}

TEST_CASE("wiener norm dominates the operator norm") {
    BandedMatrix a(12, 2);
    int t = 0;
    for (int d = -2; d <= 2; ++d)
        for (double& v : a.diagonal(d)) v = std::sin(0.9 * ++t) * 2.0;
    CHECK(op_norm(a) <= wiener_norm(a) * (1.0 + 1e-12));
}

TEST_CASE("generalized norm with the offset metric reproduces the plain norm") {
    // Shells are unsigned distances, counted once per sign: the two members
    // of a +-r diagonal pair share their supremum exactly when |a_ij| is a
    // symmetric field, so equality is tested on a symmetric instance.
    DenseMatrix a(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i; j < 6; ++j) {
            a(i, j) = 1.0 / (1.0 + i + 2 * j);
            a(j, i) = a(i, j);
        }
    const IndexMetric rho = IndexMetric::offset_metric(6);
    CHECK(generalized_wiener_norm(a, rho) == Catch::Approx(wiener_norm(a)).epsilon(1e-15));

    // On a one-sided matrix the shell sum over-counts the empty side, so the
    // generalized norm dominates (never undercuts) the classical one.
    DenseMatrix lower(5, 5, 0.0);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j <= i; ++j) lower(i, j) = 1.0 + static_cast<double>(i - j);
    CHECK(generalized_wiener_norm(lower, IndexMetric::offset_metric(5)) >= wiener_norm(lower));
}

TEST_CASE("generalized norm groups entries by distance shells") {
    // Two points at distance 2.5: shells are {0} and ceil(2.5) = 3.
    const IndexMetric rho = IndexMetric::from_points({{0.0}, {2.5}});
    DenseMatrix a(2, 2, 0.0);
    a(0, 0) = 3.0;
    a(1, 1) = -5.0;
    a(0, 1) = 2.0;
    a(1, 0) = -7.0;
    // sup over shell 0 is 5, sup over shell 3 is 7 (counted per sign): 5 + 2*7.
    CHECK(generalized_wiener_norm(a, rho) == 19.0);
}

TEST_CASE("laurent sections place coefficient f_d on diagonal i - j = d") {
    SymbolSeries f;
    f.set(1, 2.5);   // i - j = 1: below the main diagonal
    f.set(-2, 1.5);  // i - j = -2: above it
    f.set(0, 4.0);
    const DenseMatrix a = laurent_matrix(f, 4);
    CHECK(a(1, 0) == 2.5);
    CHECK(a(0, 2) == 1.5);
    CHECK(a(2, 2) == 4.0);
    CHECK(a(0, 1) == 0.0);

    // Full-support section: its Wiener norm equals the symbol's.
    CHECK(wiener_norm(a) == Catch::Approx(symbol_wiener_norm(f)).epsilon(1e-15));
}

TEST_CASE("geometric symbol 2^{-|k|}: norm 3, full Sobolev-1/2 sum 8/9") {
    SymbolSeries f;
    f.set(0, 1.0);
    for (long long k = 1; k <= 60; ++k) {  // 2^{-60} is far below double resolution of the sums
        f.set(k, std::pow(2.0, -static_cast<double>(k)));
        f.set(-k, std::pow(2.0, -static_cast<double>(k)));
    }
    CHECK(symbol_wiener_norm(f) == Catch::Approx(3.0).epsilon(1e-15));
    // sum_k |k| 4^{-|k|} = 2 * (1/4)/(1 - 1/4)^2 = 8/9.
    CHECK(sobolev_half_partial(f, 60) == Catch::Approx(8.0 / 9.0).epsilon(1e-15));
    // The cutoff matters: dropping |k| > 2 removes mass.
    CHECK(sobolev_half_partial(f, 2) < 8.0 / 9.0);
}

TEST_CASE("sparse quartic-support symbol: summable coefficients, divergent half-seminorm") {
    const SymbolSeries f = example53_symbol(100000);
    // Norm converges to 4 + pi^2/3; the tail beyond m = 1e5 is below 2e-5.
    CHECK(symbol_wiener_norm(f) ==
          Catch::Approx(4.0 + kPi * kPi / 3.0).margin(2e-5));
    CHECK(f.coefficient(0) == 4.0);
    CHECK(f.coefficient(16) == 0.25);   // m = 2: offset 16, weight 1/4
    CHECK(f.coefficient(-81) == 1.0 / 9.0);
    CHECK(f.support_size() == 2 * 100000 + 1);

    // Sobolev-1/2 partial sums grow without bound: each quartic offset
    // contributes exactly 1 (m^4 * (1/m^2)^2), so the partial at cutoff m^4
    // is exactly 2m.
    const SymbolSeries g = example53_symbol(100);
    for (long long m : {1LL, 2LL, 5LL, 10LL, 100LL}) {
        const auto cutoff = static_cast<SymbolSeries::Offset>(m) * m * m * m;
        CHECK(sobolev_half_partial(g, cutoff) == 2.0 * static_cast<double>(m));
    }
}

TEST_CASE("finite sections of the quartic-support symbol are positive definite") {
    // f_0 = 4 exceeds the off-diagonal mass pi^2/3 < 3.3, so every finite
    // section is strictly diagonally dominant.
    const SymbolSeries f = example53_symbol(30);
    const DenseMatrix a = laurent_matrix(f, 40);
    const SpectralBounds b = spd_bounds(a);
    CHECK(b.m_lo > 4.0 - (kPi * kPi / 3.0) - 1e-9);
    CHECK(b.M_hi < 4.0 + (kPi * kPi / 3.0) + 1e-9);
}

TEST_CASE("symbol guards: bad support size and giant offsets are refused") {
    CHECK_THROWS_AS(example53_symbol(0), InputError);
    CHECK_THROWS_AS(example53_symbol(4000000000LL), InputError);
    SymbolSeries f;
    CHECK_THROWS_AS(f.set(0, std::nan("")), InputError);
}

TEST_CASE("128-bit offsets print correctly beyond the 64-bit range") {
    const auto big = static_cast<SymbolSeries::Offset>(3000000000LL) * 3000000000LL;  // 9e18
    CHECK(offset_to_string(big) == "9000000000000000000");
    const auto bigger = big * 10;  // 9e19 > 2^63 - 1
    CHECK(offset_to_string(bigger) == "90000000000000000000");
    CHECK(offset_to_string(-bigger) == "-90000000000000000000");
    CHECK(offset_to_string(0) == "0");
}

TEST_CASE("inverse diagonal decay bound: geometric in ceil(|j|/3k)") {
    const SpectralBounds b = user_bounds(1.0, 2.0);
    const int k = 2;
    CHECK(inverse_diagonal_bound(b, k, 0) == 1.0);  // 1/m_lo
    // |j| = 1..3k share the first shell bound r_0; 3k+1..6k use r_1.
    const double r0 = general_error_bound(b, 0);
    const double r1 = general_error_bound(b, 1);
    CHECK(inverse_diagonal_bound(b, k, 1) == r0);
    CHECK(inverse_diagonal_bound(b, k, 6) == r0);
    CHECK(inverse_diagonal_bound(b, k, -6) == r0);
    CHECK(inverse_diagonal_bound(b, k, 7) == r1);
    CHECK(inverse_diagonal_bound(b, k, 12) == r1);

    // Closed-form tail: 1/m + 3k kappa^2 (kappa^2 - 1)/M.
    const double want = 1.0 + 3.0 * k * (4.0 * 3.0) / 2.0;
    CHECK(inverse_wiener_bound(b, k) == Catch::Approx(want).epsilon(1e-15));
}

TEST_CASE("inverse diagonal bound actually dominates a concrete inverse") {
    BandedMatrix a(30, 1);
    for (double& v : a.diagonal(0)) v = 4.0;
    for (double& v : a.diagonal(1)) v = -1.0;
    for (double& v : a.diagonal(-1)) v = -1.0;
    const SpectralBounds b = singular_bounds(a);
    const DenseMatrix inv = from_eigen(to_eigen(a.to_dense()).inverse());
    for (long j = -29; j <= 29; ++j) {
        const double actual = diagonal_sup(inv, j);
        const double bound = inverse_diagonal_bound(b, 1, j);
        CHECK(actual <= bound * (1.0 + 1e-9));
    }
    CHECK(wiener_norm(inv) <= inverse_wiener_bound(b, 1) * (1.0 + 1e-9));
}
