#include <catch2/catch_amalgamated.hpp>

#include <bandinv/banded_matrix.hpp>
#include <bandinv/dense_matrix.hpp>
#include <bandinv/errors.hpp>
#include <bandinv/index_metric.hpp>
#include <bandinv/operator_norm.hpp>
#include <bandinv/permutation.hpp>

#include <cmath>
#include <random>

using namespace bandinv;

namespace {

DenseMatrix random_dense(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = u(rng);
    return a;
}

BandedMatrix tridiag(std::size_t n, double off, double diag) {
    BandedMatrix a(n, 1);
    for (double& v : a.diagonal(0)) v = diag;
    for (double& v : a.diagonal(1)) v = off;
    for (double& v : a.diagonal(-1)) v = off;
    return a;
}

}  // namespace

TEST_CASE("dense matrix shape and entry basics") {
    DenseMatrix a(2, 3, 1.5);
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);
    CHECK(a(1, 2) == 1.5);
    CHECK_FALSE(a.square());
    CHECK_THROWS_AS(DenseMatrix(0, 3), InputError);

    const DenseMatrix id = DenseMatrix::identity(3);
    CHECK(id(0, 0) == 1.0);
    CHECK(id(0, 1) == 0.0);
}

TEST_CASE("dense product against hand-computed 2x2") {
    DenseMatrix a(2, 2), b(2, 2);
    a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 3; a(1, 1) = 4;
    b(0, 0) = 5; b(0, 1) = 6; b(1, 0) = 7; b(1, 1) = 8;
    const DenseMatrix c = a * b;
    CHECK(c(0, 0) == 19.0);
    CHECK(c(0, 1) == 22.0);
    CHECK(c(1, 0) == 43.0);
    CHECK(c(1, 1) == 50.0);
}

TEST_CASE("dense algebra identities on random matrices") {
    const DenseMatrix a = random_dense(7, 11);
    const DenseMatrix b = random_dense(7, 12);
    const DenseMatrix i7 = DenseMatrix::identity(7);

    const DenseMatrix ai = a * i7;
    const DenseMatrix ab_t = adjoint(a * b);
    const DenseMatrix bt_at = adjoint(b) * adjoint(a);
    for (std::size_t r = 0; r < 7; ++r)
        for (std::size_t c = 0; c < 7; ++c) {
            CHECK(ai(r, c) == a(r, c));
            CHECK(ab_t(r, c) == Catch::Approx(bt_at(r, c)).margin(1e-14));
        }
}

TEST_CASE("diagonal indexing convention: d-th diagonal collects entries with i - j = d") {
    DenseMatrix a(3, 3, 0.0);
    a(2, 0) = 9.0;   // i - j = 2
    a(0, 1) = -4.0;  // i - j = -1
    CHECK(diagonal_sup(a, 2) == 9.0);
    CHECK(diagonal_sup(a, -1) == 4.0);
    CHECK(diagonal_sup(a, 0) == 0.0);
    CHECK_THROWS_AS(diagonal_sup(a, 3), InputError);
}

TEST_CASE("banded storage round-trips through dense") {
    BandedMatrix a(5, 2);
    int fill = 1;
    for (int d = -2; d <= 2; ++d)
        for (double& v : a.diagonal(d)) v = fill++;
    const DenseMatrix dense = a.to_dense();
    const BandedMatrix back = BandedMatrix::from_dense(dense, 2);
    for (int d = -2; d <= 2; ++d) CHECK(back.diagonal(d) == a.diagonal(d));

    CHECK(a.at(0, 3) == 0.0);  // outside the band reads as zero
    CHECK_THROWS_AS(a.set(0, 3, 1.0), InputError);
}

TEST_CASE("from_dense refuses mass outside the declared band") {
    DenseMatrix a(4, 4, 0.0);
    a(0, 3) = 1e-30;
    CHECK_THROWS_AS(BandedMatrix::from_dense(a, 1), InputError);
    CHECK_NOTHROW(band_truncate(a, 1));  // truncation is the lossy alternative
    CHECK(band_truncate(a, 1).to_dense()(0, 3) == 0.0);
}

TEST_CASE("banded product width adds and clips at the dimension") {
    const BandedMatrix a = tridiag(6, 1.0, 2.0);
    const BandedMatrix b = tridiag(6, -1.0, 3.0);
    const BandedMatrix ab = a * b;
    CHECK(ab.half_bandwidth() == 2);

    const DenseMatrix want = a.to_dense() * b.to_dense();
    const DenseMatrix got = ab.to_dense();
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(got(i, j) == Catch::Approx(want(i, j)).margin(1e-14));

    BandedMatrix wide(4, 3);
    for (int d = -3; d <= 3; ++d)
        for (double& v : wide.diagonal(d)) v = 1.0;
    CHECK((wide * wide).half_bandwidth() == 3);  // clipped at n - 1
}

TEST_CASE("banded adjoint mirrors diagonals") {
    BandedMatrix a(4, 1);
    for (double& v : a.diagonal(1)) v = 5.0;
    const BandedMatrix at = adjoint(a);
    for (double v : at.diagonal(-1)) CHECK(v == 5.0);
    for (double v : at.diagonal(1)) CHECK(v == 0.0);
}

TEST_CASE("operator norm matches hand values and power iteration agrees with SVD") {
    // diag(3, -7): largest singular value 7.
    DenseMatrix d(2, 2, 0.0);
    d(0, 0) = 3.0;
    d(1, 1) = -7.0;
    CHECK(op_norm(d) == Catch::Approx(7.0).epsilon(1e-12));

    // Rank-one uv^T has norm |u||v|.
    DenseMatrix r1(3, 3);
    const double u[3] = {1, 2, 2}, v[3] = {2, 1, 2};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r1(i, j) = u[i] * v[j];
    CHECK(op_norm(r1) == Catch::Approx(9.0).epsilon(1e-12));

    // Cross-check the iterative path against the dense SVD on the same matrix.
    const DenseMatrix a = random_dense(40, 3);
    const double svd = op_norm(a);
    const double noisy = detail::power_iteration_sigma_max(
        detail::power_start(40),
        [&](const std::vector<double>& x) {
            std::vector<double> ax(40, 0.0), atax(40, 0.0);
            for (std::size_t i = 0; i < 40; ++i)
                for (std::size_t j = 0; j < 40; ++j) ax[i] += a(i, j) * x[j];
            for (std::size_t j = 0; j < 40; ++j)
                for (std::size_t i = 0; i < 40; ++i) atax[j] += a(i, j) * ax[i];
            return atax;
        },
        40);
    CHECK(noisy == Catch::Approx(svd).epsilon(1e-9));
}

TEST_CASE("band distance brackets the truncation error") {
    const DenseMatrix a = random_dense(30, 17);
    for (int k : {0, 1, 5, 20, 29}) {
        const auto [lo, hi] = band_distance_bounds(a, k);
        CHECK(lo <= hi);
        const double exact = op_norm(a - band_truncate(a, k).to_dense());
        CHECK(exact <= hi * (1.0 + 1e-12) + 1e-15);
        CHECK(exact >= lo * (1.0 - 1e-12) - 1e-15);
    }
    CHECK(band_distance_bounds(a, 29) == std::pair{0.0, 0.0});
}

TEST_CASE("offset metric reproduces |i - j| and truncation zeroes far entries") {
    const IndexMetric rho = IndexMetric::offset_metric(5);
    CHECK(rho(0, 4) == 4.0);
    CHECK(rho(3, 3) == 0.0);

    DenseMatrix a(5, 5, 1.0);
    const DenseMatrix t = metric_truncate(a, rho, 1.5);
    CHECK(t(0, 1) == 1.0);
    CHECK(t(0, 2) == 0.0);
}

TEST_CASE("point-cloud metric satisfies the metric axioms by construction") {
    const IndexMetric rho = IndexMetric::from_points({{0.0, 0.0}, {3.0, 4.0}, {3.0, 0.0}});
    CHECK(rho(0, 1) == 5.0);
    CHECK(rho(0, 2) == 3.0);
    CHECK(rho(1, 2) == 4.0);
    CHECK(rho(1, 0) == rho(0, 1));
}

TEST_CASE("table metric validates the axioms") {
    DenseMatrix good(2, 2, 0.0);
    good(0, 1) = good(1, 0) = 2.0;
    CHECK_NOTHROW(IndexMetric::from_table(good));

    DenseMatrix asym = good;
    asym(0, 1) = 3.0;
    CHECK_THROWS_AS(IndexMetric::from_table(asym), InputError);

    DenseMatrix triangle(3, 3, 0.0);
    triangle(0, 1) = triangle(1, 0) = 1.0;
    triangle(1, 2) = triangle(2, 1) = 1.0;
    triangle(0, 2) = triangle(2, 0) = 5.0;  // 5 > 1 + 1
    CHECK_THROWS_AS(IndexMetric::from_table(triangle), InputError);
}

TEST_CASE("permutation conjugation is an exact involution") {
    const DenseMatrix a = random_dense(6, 23);
    const Permutation pi({3, 1, 4, 0, 5, 2});
    const DenseMatrix twice = permute_conjugate(permute_conjugate(a, pi), pi.inverse());
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(twice(i, j) == a(i, j));

    CHECK_THROWS_AS(Permutation({0, 0, 1}), InputError);
}

TEST_CASE("scrambled band: conjugation preserves norms while hiding band structure") {
    const BandedMatrix a = tridiag(8, -1.0, 4.0);
    const Permutation pi({7, 0, 3, 5, 1, 6, 2, 4});
    const DenseMatrix scrambled = permute_conjugate(a.to_dense(), pi);

    CHECK(op_norm(scrambled) == Catch::Approx(op_norm(a)).epsilon(1e-12));
    // The permuted matrix is no longer banded at width 1 ...
    CHECK(band_distance_bounds(scrambled, 1).second > 0.5);
    // ... but the pulled-back metric rho(i,j) = |pi(i) - pi(j)| restores it.
    DenseMatrix table(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            table(i, j) = std::abs(static_cast<double>(pi(i)) - static_cast<double>(pi(j)));
    const IndexMetric rho = IndexMetric::from_table(table);
    const DenseMatrix kept = metric_truncate(scrambled, rho, 1.0);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) CHECK(kept(i, j) == scrambled(i, j));
}
