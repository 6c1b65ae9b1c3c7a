#include <catch2/catch_amalgamated.hpp>

#include <bandinv/banded_matrix.hpp>
#include <bandinv/dense_matrix.hpp>
#include <bandinv/errors.hpp>
#include <bandinv/spectral.hpp>

#include <cmath>

using namespace bandinv;

TEST_CASE("spd bounds bracket known eigenvalues with the declared slack") {
    DenseMatrix a(2, 2, 0.0);
    a(0, 0) = 1.0;
    a(1, 1) = 3.0;
    const SpectralBounds b = spd_bounds(a);
    CHECK(b.m_lo == Catch::Approx(1.0 * (1 - 1e-8)).epsilon(1e-14));
    CHECK(b.M_hi == Catch::Approx(3.0 * (1 + 1e-8)).epsilon(1e-14));
    CHECK(b.kappa == Catch::Approx(3.0).epsilon(1e-7));
    CHECK_FALSE(b.user_supplied);
    CHECK(b.rigor() == "floating-point conservative");
}

TEST_CASE("tridiagonal Toeplitz eigenvalues: diag 2, off -1, closed form 2 - 2cos(j pi/(n+1))") {
    const std::size_t n = 10;
    BandedMatrix a(n, 1);
    for (double& v : a.diagonal(0)) v = 2.0;
    for (double& v : a.diagonal(1)) v = -1.0;
    for (double& v : a.diagonal(-1)) v = -1.0;
    const double pi = std::acos(-1.0);
    const double lo = 2.0 - 2.0 * std::cos(pi / (n + 1.0));
    const double hi = 2.0 - 2.0 * std::cos(n * pi / (n + 1.0));
    const SpectralBounds b = spd_bounds(a);
    CHECK(b.m_lo == Catch::Approx(lo * (1 - 1e-8)).epsilon(1e-10));
    CHECK(b.M_hi == Catch::Approx(hi * (1 + 1e-8)).epsilon(1e-10));
    // The bracket really brackets: m_lo <= lambda_min, M_hi >= lambda_max.
    CHECK(b.m_lo <= lo);
    CHECK(b.M_hi >= hi);
}

TEST_CASE("spd bounds refuse asymmetric and indefinite inputs") {
    DenseMatrix asym(2, 2, 0.0);
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(spd_bounds(asym), MathError);

    DenseMatrix indef(2, 2, 0.0);
    indef(0, 0) = 1.0;
    indef(1, 1) = -1.0;
    CHECK_THROWS_AS(spd_bounds(indef), MathError);
}

TEST_CASE("singular bounds come from singular values, not eigenvalues") {
    // Nilpotent-ish shear: eigenvalues both 1, singular values far apart.
    DenseMatrix a(2, 2, 0.0);
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    a(0, 1) = 10.0;
    const SpectralBounds b = singular_bounds(a);
    // sigma^2 are roots of t^2 - 102 t + 1 (det = 1, ||A||_F^2 = 102).
    const double s_hi = std::sqrt((102.0 + std::sqrt(102.0 * 102.0 - 4.0)) / 2.0);
    const double s_lo = 1.0 / s_hi;
    CHECK(b.M_hi == Catch::Approx(s_hi * (1 + 1e-8)).epsilon(1e-12));
    CHECK(b.m_lo == Catch::Approx(s_lo * (1 - 1e-8)).epsilon(1e-12));
}

TEST_CASE("numerically singular input is refused with the measured ratio") {
    DenseMatrix a(2, 2, 0.0);
    a(0, 0) = 1.0;
    a(1, 1) = 1e-15;
    CHECK_THROWS_AS(singular_bounds(a), MathError);
}

TEST_CASE("user-supplied bounds pass through verbatim and claim rigor") {
    const SpectralBounds b = user_bounds(0.5, 8.0);
    CHECK(b.m_lo == 0.5);
    CHECK(b.M_hi == 8.0);
    CHECK(b.kappa == 16.0);
    CHECK(b.user_supplied);
    CHECK(b.rigor() == "rigorous");
    CHECK_THROWS_AS(user_bounds(-1.0, 2.0), InputError);
    CHECK_THROWS_AS(user_bounds(3.0, 2.0), InputError);
}
