#include <doctest.h>

#include <Eigen/Dense>

#include "lrrsc/proximal.hpp"
#include "lrrsc/rng.hpp"
#include "oracles.hpp"

using lrrsc::ShrinkageThreshold;

TEST_SUITE("proximal") {

TEST_CASE("shrinkage threshold rejects invalid amounts") {
    CHECK_THROWS_AS(ShrinkageThreshold(-0.1), lrrsc::argument_error);
    CHECK_THROWS_AS(ShrinkageThreshold(std::numeric_limits<double>::quiet_NaN()),
                    lrrsc::argument_error);
    CHECK_THROWS_AS(ShrinkageThreshold(std::numeric_limits<double>::infinity()),
                    lrrsc::argument_error);
    CHECK(ShrinkageThreshold(0.0).value() == 0.0);
    CHECK(ShrinkageThreshold(2.5).value() == 2.5);
}

TEST_CASE("soft threshold branch values") {
    CHECK(lrrsc::soft_threshold(5.0, ShrinkageThreshold(2.0)) == 3.0);
    CHECK(lrrsc::soft_threshold(0.5, ShrinkageThreshold(1.0)) == 0.0);
    CHECK(lrrsc::soft_threshold(-3.0, ShrinkageThreshold(1.0)) == -2.0);
    CHECK(lrrsc::soft_threshold(2.0, ShrinkageThreshold(2.0)) == 0.0); // boundary stays in the dead zone
}

TEST_CASE("soft threshold is odd") {
    lrrsc::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = 10.0 * (rng.uniform() - 0.5);
        const ShrinkageThreshold tau(5.0 * rng.uniform());
        CHECK(lrrsc::soft_threshold(-x, tau) == -lrrsc::soft_threshold(x, tau));
    }
}

TEST_CASE("symmetric svt on trivial matrices") {
    const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(4, 4);
    CHECK(lrrsc::symmetric_svt(zero, ShrinkageThreshold(0.0)).isZero(0.0));
    CHECK(lrrsc::symmetric_svt(zero, ShrinkageThreshold(1.0)).isZero(0.0));

    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    const Eigen::MatrixXd w = lrrsc::symmetric_svt(d, ShrinkageThreshold(2.0));
    CHECK(w(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w(1, 1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(w(0, 1)) < 1e-14);
}

TEST_CASE("symmetric svt rejects non-square input") {
    CHECK_THROWS_AS(lrrsc::symmetric_svt(Eigen::MatrixXd::Zero(3, 4), ShrinkageThreshold(1.0)),
                    lrrsc::argument_error);
}

TEST_CASE("symmetric svt matches the full-SVD shrinkage oracle") {
    lrrsc::Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::MatrixXd q = oracles::random_matrix(5, 5, rng);
        const Eigen::MatrixXd expect =
            oracles::full_svd_shrink(0.5 * (q + q.transpose()), 0.3);
        const Eigen::MatrixXd got = lrrsc::symmetric_svt(q, ShrinkageThreshold(0.3));
        CHECK((got - expect).norm() < 1e-10);
    }
}

TEST_CASE("symmetric svt output is exactly symmetric") {
    lrrsc::Rng rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXd q = oracles::random_matrix(7, 7, rng);
        const Eigen::MatrixXd w = lrrsc::symmetric_svt(q, ShrinkageThreshold(0.2));
        CHECK((w - w.transpose()).norm() == 0.0);
    }
}

TEST_CASE("symmetric svt shrinks singular values by exactly tau") {
    lrrsc::Rng rng(44);
    const Eigen::MatrixXd q = oracles::random_matrix(6, 6, rng);
    const Eigen::MatrixXd sym = 0.5 * (q + q.transpose());
    const double tau = 0.4;
    const Eigen::MatrixXd w = lrrsc::symmetric_svt(q, ShrinkageThreshold(tau));

    Eigen::VectorXd before = Eigen::BDCSVD<Eigen::MatrixXd>(sym).singularValues();
    Eigen::VectorXd after = Eigen::BDCSVD<Eigen::MatrixXd>(w).singularValues();
    for (Eigen::Index i = 0; i < before.size(); ++i)
        CHECK(std::abs(after[i] - std::max(before[i] - tau, 0.0)) < 1e-10);
}

TEST_CASE("symmetric svt rank never increases with tau") {
    lrrsc::Rng rng(55);
    const Eigen::MatrixXd q = oracles::random_matrix(8, 8, rng);
    auto rank_of = [](const Eigen::MatrixXd& m) {
        return Eigen::FullPivLU<Eigen::MatrixXd>(m).setThreshold(1e-9).rank();
    };
    Eigen::Index prev = 9;
    for (double tau : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        const Eigen::Index r = rank_of(lrrsc::symmetric_svt(q, ShrinkageThreshold(tau)));
        CHECK(r <= prev);
        prev = r;
    }
}

TEST_CASE("symmetric svt with tau zero returns the symmetrized input") {
    lrrsc::Rng rng(66);
    const Eigen::MatrixXd q = oracles::random_matrix(5, 5, rng);
    const Eigen::MatrixXd w = lrrsc::symmetric_svt(q, ShrinkageThreshold(0.0));
    CHECK((w - 0.5 * (q + q.transpose())).norm() == 0.0);
}

TEST_CASE("proximal operators are nonexpansive") {
    lrrsc::Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXd a = oracles::random_matrix(6, 6, rng);
        const Eigen::MatrixXd b = oracles::random_matrix(6, 6, rng);
        const ShrinkageThreshold tau(0.7);

        const double sym_out = (lrrsc::symmetric_svt(a, tau) - lrrsc::symmetric_svt(b, tau)).norm();
        const double sym_in = (0.5 * (a + a.transpose()) - 0.5 * (b + b.transpose())).norm();
        CHECK(sym_out <= sym_in + 1e-12);

        const Eigen::MatrixXd c = oracles::random_matrix(6, 4, rng);
        const Eigen::MatrixXd d = oracles::random_matrix(6, 4, rng);
        CHECK((lrrsc::l21_shrink(c, tau) - lrrsc::l21_shrink(d, tau)).norm() <=
              (c - d).norm() + 1e-12);
    }
}

TEST_CASE("symmetric svt output beats random symmetric perturbations") {
    lrrsc::Rng rng(88);
    const Eigen::MatrixXd q = oracles::random_matrix(6, 6, rng);
    const Eigen::MatrixXd sym = 0.5 * (q + q.transpose());
    const double tau = 0.6;
    const Eigen::MatrixXd w = lrrsc::symmetric_svt(q, ShrinkageThreshold(tau));

    auto objective = [&](const Eigen::MatrixXd& m) {
        const double nuclear = Eigen::BDCSVD<Eigen::MatrixXd>(m).singularValues().sum();
        return tau * nuclear + 0.5 * (m - sym).squaredNorm();
    };
    const double opt = objective(w);
    for (int trial = 0; trial < 100; ++trial) {
        Eigen::MatrixXd p = 0.1 * oracles::random_matrix(6, 6, rng);
        p = 0.5 * (p + p.transpose());
        CHECK(opt <= objective(w + p) + 1e-12);
    }
}

TEST_CASE("plain svt matches the oracle and agrees on symmetric inputs") {
    lrrsc::Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXd q = oracles::random_matrix(6, 5, rng);
        CHECK((lrrsc::svt(q, ShrinkageThreshold(0.5)) - oracles::full_svd_shrink(q, 0.5)).norm() <
              1e-10);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXd q = oracles::random_matrix(6, 6, rng);
        const Eigen::MatrixXd sym = 0.5 * (q + q.transpose());
        CHECK((lrrsc::svt(sym, ShrinkageThreshold(0.4)) -
               lrrsc::symmetric_svt(sym, ShrinkageThreshold(0.4)))
                  .norm() < 1e-10);
    }
}

TEST_CASE("l21 shrink column cases") {
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(4, 3);
    q.col(0) << 0.3, 0.4, 0.0, 0.0;     // norm 0.5
    q.col(1) << 0.0, 0.0, 1.2, 1.6;     // norm 2
    const Eigen::MatrixXd e = lrrsc::l21_shrink(q, ShrinkageThreshold(1.0));
    CHECK(e.col(0).isZero(0.0));
    CHECK((e.col(1) - 0.5 * q.col(1)).norm() < 1e-14);
    CHECK(e.col(2).isZero(0.0));

    const Eigen::MatrixXd half = lrrsc::l21_shrink(q, ShrinkageThreshold(0.5));
    CHECK((half.col(1) - 0.75 * q.col(1)).norm() < 1e-14);

    CHECK(lrrsc::l21_shrink(Eigen::MatrixXd::Zero(3, 3), ShrinkageThreshold(0.1)).isZero(0.0));
}

TEST_CASE("l21 shrink matches the ray-minimization oracle") {
    lrrsc::Rng rng(111);
    const Eigen::MatrixXd q = oracles::random_matrix(6, 8, rng);
    const double tau = 0.8;
    const Eigen::MatrixXd e = lrrsc::l21_shrink(q, ShrinkageThreshold(tau));
    for (Eigen::Index j = 0; j < q.cols(); ++j)
        CHECK((e.col(j) - oracles::l21_column_minimize(q.col(j), tau)).norm() < 1e-8);
}

TEST_CASE("l21 shrink acts independently per column") {
    lrrsc::Rng rng(122);
    const Eigen::MatrixXd q = oracles::random_matrix(5, 6, rng);
    const ShrinkageThreshold tau(0.6);
    const Eigen::MatrixXd e = lrrsc::l21_shrink(q, tau);

    std::vector<int> perm = {3, 0, 5, 1, 4, 2};
    Eigen::MatrixXd shuffled(q.rows(), q.cols());
    for (Eigen::Index j = 0; j < q.cols(); ++j)
        shuffled.col(j) = q.col(perm[static_cast<std::size_t>(j)]);
    const Eigen::MatrixXd e_shuffled = lrrsc::l21_shrink(shuffled, tau);
    for (Eigen::Index j = 0; j < q.cols(); ++j)
        CHECK((e_shuffled.col(j) - e.col(perm[static_cast<std::size_t>(j)])).norm() == 0.0);
}

} // TEST_SUITE
