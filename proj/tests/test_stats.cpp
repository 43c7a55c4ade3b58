#include "exem/stats.hpp"

#include "exem/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace exem;

namespace {

Vector random_vector(Rng& rng, Index n, double scale = 1.0) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = scale * rng.normal();
    return v;
}

Matrix random_matrix(Rng& rng, Index rows, Index cols, double scale = 1.0) {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) m(i, j) = scale * rng.normal();
    }
    return m;
}

}  // namespace

TEST_SUITE("numeric_core") {

TEST_CASE("euclidean_dist closed forms") {
    Vector zero2 = Vector::Zero(2);
    CHECK(euclidean_dist(zero2, zero2) == 0.0);

    Vector v(2);
    v << 3.0, 4.0;
    CHECK(euclidean_dist(zero2, v) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("euclidean_dist matches the naive loop oracle") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Vector u = random_vector(rng, 16, 3.0);
        Vector v = random_vector(rng, 16, 3.0);
        CHECK(euclidean_dist(u, v) == doctest::Approx(oracle::naive_euclidean(u, v)).epsilon(1e-12));
        CHECK(euclidean_dist(u, v) == euclidean_dist(v, u));
        CHECK(euclidean_dist(u, v) >= 0.0);
    }
}

TEST_CASE("euclidean_dist rejects length mismatch") {
    CHECK_THROWS_AS(euclidean_dist(Vector::Zero(2), Vector::Zero(3)), std::invalid_argument);
}

TEST_CASE("euclidean_dist triangle inequality on random triples") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        Vector a = random_vector(rng, 8);
        Vector b = random_vector(rng, 8);
        Vector c = random_vector(rng, 8);
        CHECK(euclidean_dist(a, c) <= euclidean_dist(a, b) + euclidean_dist(b, c) + 1e-9);
    }
}

TEST_CASE("weighted_euclidean_dist unit scales equal the plain distance") {
    Rng rng(13);
    Vector ones = Vector::Ones(10);
    for (int trial = 0; trial < 20; ++trial) {
        Vector u = random_vector(rng, 10);
        Vector v = random_vector(rng, 10);
        CHECK(weighted_euclidean_dist(u, v, ones) == euclidean_dist(u, v));
    }
}

TEST_CASE("weighted_euclidean_dist closed form and oracle") {
    Vector u(1), v(1), w(1);
    u << 0.0;
    v << 2.0;
    w << 0.5;
    CHECK(weighted_euclidean_dist(u, v, w) == doctest::Approx(1.0).epsilon(1e-15));

    Rng rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        Vector a = random_vector(rng, 7);
        Vector b = random_vector(rng, 7);
        Vector scale(7);
        for (Index i = 0; i < 7; ++i) scale[i] = 0.1 + rng.uniform01();
        CHECK(weighted_euclidean_dist(a, b, scale) ==
              doctest::Approx(oracle::naive_weighted_euclidean(a, b, scale)).epsilon(1e-12));
    }
}

TEST_CASE("weighted_euclidean_dist rejects non-positive scales") {
    Vector u = Vector::Zero(2), w(2);
    w << 1.0, 0.0;
    CHECK_THROWS_AS(weighted_euclidean_dist(u, u, w), std::invalid_argument);
    w << 1.0, -2.0;
    CHECK_THROWS_AS(weighted_euclidean_dist(u, u, w), std::invalid_argument);
}

TEST_CASE("column_mean basics") {
    Matrix m(2, 2);
    m << 1.0, 2.0, 3.0, 4.0;
    Vector mean = column_mean(m);
    CHECK(mean[0] == doctest::Approx(2.0));
    CHECK(mean[1] == doctest::Approx(3.0));

    Matrix one_row(1, 3);
    one_row << 5.0, -1.0, 0.5;
    CHECK(column_mean(one_row).isApprox(one_row.transpose(), 0.0));

    CHECK_THROWS_AS(column_mean(Matrix(0, 3)), std::invalid_argument);
}

TEST_CASE("column_mean matches oracle on random data") {
    Rng rng(15);
    Matrix m = random_matrix(rng, 100, 5, 2.0);
    Vector got = column_mean(m);
    Vector want = oracle::naive_column_mean(m);
    for (Index j = 0; j < 5; ++j) CHECK(got[j] == doctest::Approx(want[j]).epsilon(1e-12));
}

TEST_CASE("column_std basics") {
    Matrix constant(4, 2);
    constant.col(0).setConstant(3.0);
    constant.col(1).setConstant(-1.0);
    CHECK(column_std(constant, 0).isZero(0.0));

    Matrix two(2, 1);
    two << 0.0, 2.0;
    CHECK(column_std(two, 0)[0] == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(column_std(two, 2), std::invalid_argument);
    CHECK_THROWS_AS(column_std(two, 3), std::invalid_argument);
}

TEST_CASE("column_std matches the two-pass oracle") {
    Rng rng(16);
    Matrix m = random_matrix(rng, 60, 4, 5.0);
    for (Index ddof : {Index{0}, Index{1}}) {
        Vector got = column_std(m, ddof);
        Vector want = oracle::naive_column_std(m, ddof);
        for (Index j = 0; j < 4; ++j) CHECK(got[j] == doctest::Approx(want[j]).epsilon(1e-12));
    }
}

TEST_CASE("column stats are permutation-invariant over rows") {
    Rng rng(17);
    Matrix m = random_matrix(rng, 30, 3);
    std::vector<Index> perm(30);
    for (Index i = 0; i < 30; ++i) perm[static_cast<std::size_t>(i)] = i;
    rng.shuffle(perm);
    Matrix shuffled(30, 3);
    for (Index i = 0; i < 30; ++i) shuffled.row(i) = m.row(perm[static_cast<std::size_t>(i)]);

    CHECK(column_mean(m).isApprox(column_mean(shuffled), 1e-12));
    CHECK(column_std(m, 1).isApprox(column_std(shuffled, 1), 1e-12));
}

TEST_CASE("require_finite rejects NaN and Inf at ingestion") {
    Matrix m = Matrix::Zero(2, 2);
    CHECK_NOTHROW(require_finite(m, "m"));
    m(1, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(require_finite(m, "m"), std::invalid_argument);
    m(1, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(require_finite(m, "m"), std::invalid_argument);
}

}  // TEST_SUITE
