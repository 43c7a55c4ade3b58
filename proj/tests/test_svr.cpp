#include "exem/svr.hpp"

#include "exem/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace exem;

namespace {

Matrix random_points(Rng& rng, Index s, Index dim, double scale = 1.0) {
    Matrix m(s, dim);
    for (Index i = 0; i < s; ++i) {
        for (Index j = 0; j < dim; ++j) m(i, j) = scale * rng.normal();
    }
    return m;
}

struct RandomProblem {
    Matrix points;
    Vector targets;
    SvrHyperParams hyper;
};

RandomProblem random_problem(Rng& rng, Index max_s = 12) {
    RandomProblem p;
    const Index s = 4 + static_cast<Index>(rng.uniform_below(static_cast<std::uint64_t>(max_s - 3)));
    const Index dim = 2 + static_cast<Index>(rng.uniform_below(4));
    p.points = random_points(rng, s, dim);
    p.targets.resize(s);
    for (Index i = 0; i < s; ++i) {
        p.targets[i] = std::sin(2.0 * p.points(i, 0)) + 0.3 * rng.normal();
    }
    p.hyper.lambda = std::exp(rng.uniform01() * 4.0 - 1.0);   // ~[0.37, 20]
    p.hyper.nu = 0.15 + 0.7 * rng.uniform01();
    p.hyper.kernel.gamma = 0.2 + 1.5 * rng.uniform01();
    return p;
}

}  // namespace

TEST_SUITE("svr") {

TEST_CASE("rbf_kernel closed forms") {
    KernelParams p{0.7};
    Vector a(3);
    a << 1.0, -2.0, 0.5;
    CHECK(rbf_kernel(a, a, p) == 1.0);

    Vector b = a;
    b[0] += 1.0;  // unit distance
    CHECK(rbf_kernel(a, b, KernelParams{1.0}) == doctest::Approx(0.367879).epsilon(1e-5));
    CHECK(rbf_kernel(a, b, KernelParams{1.0}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

    CHECK_THROWS_AS(rbf_kernel(a, Vector::Zero(2), p), std::invalid_argument);
    CHECK_THROWS_AS(rbf_kernel(a, a, KernelParams{0.0}), std::invalid_argument);
    CHECK_THROWS_AS(rbf_kernel(a, a, KernelParams{-1.0}), std::invalid_argument);
}

TEST_CASE("rbf_kernel composes distance and exp") {
    Rng rng(21);
    KernelParams p{0.9};
    for (int trial = 0; trial < 30; ++trial) {
        Vector a(5), b(5);
        for (Index i = 0; i < 5; ++i) {
            a[i] = rng.normal();
            b[i] = rng.normal();
        }
        const double dist = oracle::naive_euclidean(a, b);
        CHECK(rbf_kernel(a, b, p) == doctest::Approx(std::exp(-p.gamma * dist * dist)).epsilon(1e-12));
    }
}

TEST_CASE("gram_matrix structure") {
    Rng rng(22);
    Matrix one = random_points(rng, 1, 3);
    Matrix g1 = gram_matrix(one, KernelParams{1.0});
    CHECK(g1.rows() == 1);
    CHECK(g1(0, 0) == 1.0);

    Matrix two(2, 3);
    two.row(0) = one.row(0);
    two.row(1) = one.row(0);
    Matrix g2 = gram_matrix(two, KernelParams{2.0});
    CHECK(g2.isApprox(Matrix::Ones(2, 2), 1e-15));

    Matrix pts = random_points(rng, 10, 4);
    Matrix g = gram_matrix(pts, KernelParams{0.5});
    CHECK(g.isApprox(g.transpose(), 0.0));
    CHECK((g.diagonal().array() == 1.0).all());
    // PSD: shifted Cholesky must succeed
    Eigen::LLT<Matrix> llt(g + 1e-10 * Matrix::Identity(10, 10));
    CHECK(llt.info() == Eigen::Success);
}

TEST_CASE("constant targets give a zero-beta model with exact bias") {
    Rng rng(23);
    Matrix pts = random_points(rng, 6, 3);
    Vector targets = Vector::Constant(6, 2.5);
    for (double nu : {0.3, 0.5, 1.0}) {
        SvrTrainInfo info;
        SvrModel model = train_nu_svr(pts, targets, SvrHyperParams{5.0, nu, KernelParams{1.0}},
                                      SvrSolverOptions{}, &info);
        CHECK(model.beta.isZero(0.0));
        CHECK(model.bias == doctest::Approx(2.5).epsilon(1e-12));
        CHECK(model.epsilon == doctest::Approx(0.0).epsilon(1e-12));
        for (Index i = 0; i < 6; ++i) {
            CHECK(svr_predict(model, pts.row(i)) == doctest::Approx(2.5).epsilon(1e-12));
        }
    }
}

TEST_CASE("four points on a line match the projected-gradient oracle") {
    Matrix pts(4, 1);
    pts << -1.5, -0.5, 0.5, 1.5;
    Vector targets(4);
    targets << -3.0, -1.0, 1.0, 3.0;
    SvrHyperParams hyper{10.0, 0.5, KernelParams{0.5}};

    SvrModel model = train_nu_svr(pts, targets, hyper, SvrSolverOptions{1e-6, 10'000'000});
    const double got = dual_objective(model, pts, targets);
    const Matrix k = gram_matrix(pts, hyper.kernel);
    const auto pg = oracle::pg_nu_svr(k, targets, hyper.lambda, hyper.nu);
    CHECK(got == doctest::Approx(pg.objective).epsilon(1e-6));
    CHECK(std::abs(model.beta.sum()) <= 1e-8);
}

TEST_CASE("nu = 1 makes every point a support vector") {
    Matrix pts(4, 1);
    pts << -1.5, -0.5, 0.5, 1.5;
    Vector targets(4);
    targets << -3.0, -1.0, 1.0, 3.0;
    SvrHyperParams hyper{10.0, 1.0, KernelParams{0.5}};
    SvrTrainInfo info;
    train_nu_svr(pts, targets, hyper, SvrSolverOptions{1e-6, 10'000'000}, &info);
    CHECK(info.support_vectors == 4);
}

TEST_CASE("svr_predict basics and naive-sum oracle") {
    Rng rng(24);
    Matrix pts = random_points(rng, 8, 3);
    SvrModel zero;
    zero.train_points = std::make_shared<const Matrix>(pts);
    zero.beta = Vector::Zero(8);
    zero.bias = -0.75;
    zero.kernel = KernelParams{1.0};
    for (int trial = 0; trial < 5; ++trial) {
        Vector q(3);
        for (Index i = 0; i < 3; ++i) q[i] = rng.normal();
        CHECK(svr_predict(zero, q) == -0.75);
    }

    SvrModel model = zero;
    Vector beta(8);
    for (Index i = 0; i < 8; ++i) beta[i] = rng.normal();
    beta.array() -= beta.mean();
    model.beta = beta;
    for (int trial = 0; trial < 20; ++trial) {
        Vector q(3);
        for (Index i = 0; i < 3; ++i) q[i] = rng.normal();
        double want = model.bias;
        for (Index c = 0; c < 8; ++c) {
            const double dist = oracle::naive_euclidean(pts.row(c).transpose(), q);
            want += model.beta[c] * std::exp(-model.kernel.gamma * dist * dist);
        }
        CHECK(svr_predict(model, q) == doctest::Approx(want).epsilon(1e-12));
    }

    CHECK_THROWS_AS(svr_predict(model, Vector::Zero(2)), std::invalid_argument);
}

TEST_CASE("training-point predictions stay within the tube plus slack") {
    Rng rng(25);
    for (int trial = 0; trial < 10; ++trial) {
        RandomProblem p = random_problem(rng);
        SvrModel model = train_nu_svr(p.points, p.targets, p.hyper,
                                      SvrSolverOptions{1e-6, 10'000'000});
        // recompute slacks from the model; feasibility of the primal at the
        // dual optimum bounds each residual by epsilon + its slack
        Vector preds = svr_predict_rows(model, p.points);
        for (Index c = 0; c < p.targets.size(); ++c) {
            const double residual = std::abs(preds[c] - p.targets[c]);
            const double slack = std::max(0.0, residual - model.epsilon);
            CHECK(residual <= model.epsilon + slack + 1e-9);
        }
    }
}

TEST_CASE("dual_objective closed forms and oracle") {
    Rng rng(26);
    Matrix pts = random_points(rng, 5, 2);
    Vector targets(5);
    for (Index i = 0; i < 5; ++i) targets[i] = rng.normal();

    SvrModel model;
    model.train_points = std::make_shared<const Matrix>(pts);
    model.kernel = KernelParams{0.8};
    model.beta = Vector::Zero(5);
    CHECK(dual_objective(model, pts, targets) == 0.0);

    // hand 2x2 expansion: k12 = exp(-gamma * d^2), beta = (b, -b)
    Matrix two(2, 1);
    two << 0.0, 1.0;
    Vector t2(2);
    t2 << 0.4, -0.2;
    SvrModel m2;
    m2.train_points = std::make_shared<const Matrix>(two);
    m2.kernel = KernelParams{0.8};
    m2.beta.resize(2);
    m2.beta << 0.3, -0.3;
    const double k12 = std::exp(-0.8);
    const double want = -0.5 * (0.09 + 0.09 - 2 * 0.09 * k12) + 0.3 * 0.4 + (-0.3) * (-0.2);
    CHECK(dual_objective(m2, two, t2) == doctest::Approx(want).epsilon(1e-14));

    // random feasible beta vs the naive quadratic form
    for (int trial = 0; trial < 10; ++trial) {
        Vector beta(5);
        for (Index i = 0; i < 5; ++i) beta[i] = rng.normal();
        beta.array() -= beta.mean();
        model.beta = beta;
        const Matrix k = gram_matrix(pts, model.kernel);
        double quad = 0.0, lin = 0.0;
        for (Index i = 0; i < 5; ++i) {
            lin += beta[i] * targets[i];
            for (Index j = 0; j < 5; ++j) quad += beta[i] * beta[j] * k(i, j);
        }
        CHECK(dual_objective(model, pts, targets) ==
              doctest::Approx(-0.5 * quad + lin).epsilon(1e-12));
    }
}

TEST_CASE("solver matches the projected-gradient oracle on random problems") {
    Rng rng(27);
    for (int trial = 0; trial < 12; ++trial) {
        RandomProblem p = random_problem(rng);
        SvrModel model = train_nu_svr(p.points, p.targets, p.hyper,
                                      SvrSolverOptions{1e-6, 10'000'000});
        const Matrix k = gram_matrix(p.points, p.hyper.kernel);
        const auto pg = oracle::pg_nu_svr(k, p.targets, p.hyper.lambda, p.hyper.nu);
        const double got = dual_objective(model, p.points, p.targets);
        CHECK(got == doctest::Approx(pg.objective).epsilon(1e-6));
    }
}

TEST_CASE("trained models satisfy the dual feasibility invariants") {
    Rng rng(28);
    for (int trial = 0; trial < 25; ++trial) {
        RandomProblem p = random_problem(rng);
        SvrTrainInfo info;
        SvrModel model = train_nu_svr(p.points, p.targets, p.hyper, SvrSolverOptions{}, &info);
        const double box = p.hyper.lambda / double(p.targets.size());
        CHECK(std::abs(model.beta.sum()) <= 1e-8);
        CHECK((model.beta.array().abs() <= box + 1e-12).all());
        CHECK(model.epsilon >= 0.0);
        CHECK(info.alpha_sum.sum() <= p.hyper.lambda * p.hyper.nu + 1e-8);
    }
}

TEST_CASE("nu bounds margin errors from above and support vectors from below") {
    Rng rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        RandomProblem p = random_problem(rng, 20);
        SvrTrainInfo info;
        train_nu_svr(p.points, p.targets, p.hyper, SvrSolverOptions{1e-6, 10'000'000}, &info);
        const double s = double(p.targets.size());
        CHECK(double(info.margin_errors) <= p.hyper.nu * s + 1.0);
        CHECK(double(info.support_vectors) >= p.hyper.nu * s - 1.0);
    }
}

TEST_CASE("increasing lambda does not worsen training RMSE") {
    Rng rng(30);
    Matrix pts = random_points(rng, 10, 2);
    Vector targets(10);
    for (Index i = 0; i < 10; ++i) targets[i] = std::cos(pts(i, 0)) + 0.5 * pts(i, 1);

    double prev = std::numeric_limits<double>::infinity();
    for (double lambda : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
        SvrModel model = train_nu_svr(pts, targets, SvrHyperParams{lambda, 0.6, KernelParams{0.7}},
                                      SvrSolverOptions{1e-6, 10'000'000});
        const double rmse = std::sqrt((svr_predict_rows(model, pts) - targets).squaredNorm() / 10.0);
        CHECK(rmse <= prev + 1e-6);
        prev = rmse;
    }
}

TEST_CASE("training is deterministic") {
    Rng rng(31);
    RandomProblem p = random_problem(rng);
    SvrModel a = train_nu_svr(p.points, p.targets, p.hyper);
    SvrModel b = train_nu_svr(p.points, p.targets, p.hyper);
    CHECK(a.beta == b.beta);
    CHECK(a.bias == b.bias);
    CHECK(a.epsilon == b.epsilon);
}

TEST_CASE("precomputed-gram training equals the plain path") {
    Rng rng(32);
    RandomProblem p = random_problem(rng);
    auto shared = std::make_shared<const Matrix>(p.points);
    SvrModel a = train_nu_svr(shared, p.targets, p.hyper);
    SvrModel b = train_nu_svr_gram(shared, gram_matrix(p.points, p.hyper.kernel), p.targets,
                                   p.hyper);
    CHECK(a.beta == b.beta);
    CHECK(a.bias == b.bias);
}

TEST_CASE("solver reports the KKT gap when iterations run out") {
    Rng rng(33);
    Matrix pts = random_points(rng, 16, 3);
    Vector targets(16);
    for (Index i = 0; i < 16; ++i) targets[i] = std::sin(3.0 * pts(i, 0)) + 0.2 * rng.normal();
    SvrHyperParams hyper{10.0, 0.5, KernelParams{0.5}};
    CHECK_THROWS_WITH_AS(train_nu_svr(pts, targets, hyper, SvrSolverOptions{1e-8, 2}),
                         doctest::Contains("KKT gap"), std::runtime_error);
}

TEST_CASE("hyper-parameter validation") {
    Matrix pts(2, 1);
    pts << 0.0, 1.0;
    Vector t(2);
    t << 0.0, 1.0;
    CHECK_THROWS_AS(train_nu_svr(pts, t, SvrHyperParams{-1.0, 0.5, KernelParams{1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(train_nu_svr(pts, t, SvrHyperParams{1.0, 0.0, KernelParams{1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(train_nu_svr(pts, t, SvrHyperParams{1.0, 1.5, KernelParams{1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(train_nu_svr(Matrix(1, 1), Vector::Zero(1),
                                 SvrHyperParams{1.0, 0.5, KernelParams{1.0}}),
                    std::invalid_argument);
    Vector bad(2);
    bad << 0.0, std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(train_nu_svr(pts, bad, SvrHyperParams{1.0, 0.5, KernelParams{1.0}}),
                    std::invalid_argument);
}

TEST_CASE("two-point problems solve in closed form") {
    Matrix pts(2, 1);
    pts << 0.0, 2.0;
    Vector targets(2);
    targets << 1.0, -1.0;
    SvrHyperParams hyper{4.0, 0.5, KernelParams{0.25}};
    SvrModel model = train_nu_svr(pts, targets, hyper, SvrSolverOptions{1e-8, 10'000'000});
    const Matrix k = gram_matrix(pts, hyper.kernel);
    const auto pg = oracle::pg_nu_svr(k, targets, hyper.lambda, hyper.nu);
    CHECK(dual_objective(model, pts, targets) == doctest::Approx(pg.objective).epsilon(1e-8));
    CHECK(std::abs(model.beta.sum()) <= 1e-12);
}

}  // TEST_SUITE
