#include "mtd/game.hpp"
#include "mtd/simulator.hpp"

#include <doctest.h>

#include <random>

using namespace mtd;

namespace {

OverlapTable table_from(const Vector& grid, const Matrix& entries) {
    OverlapTable t;
    t.grid = grid;
    t.entries = entries;
    return t;
}

// fixed w values at a single grid point
OverlapTable single_tau_table(double tau, const Vector& w) {
    Vector grid(1);
    grid << tau;
    return table_from(grid, w.transpose());
}

Matrix random_alpha_row_matrix(Index n, double alpha, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Matrix P(n, n);
    for (Index i = 0; i < n; ++i) {
        Vector raw(n);
        for (Index j = 0; j < n; ++j) raw[j] = u(rng);
        raw /= raw.sum();
        P.row(i) = Vector::Constant(n, alpha) +
                   (1.0 - alpha * static_cast<double>(n)) * raw;
    }
    return P;
}

} // namespace

TEST_CASE("stage cost") {
    SUBCASE("single configuration") {
        Vector w(1), p(1);
        w << 0.5;
        p << 1.0;
        Matrix M(1, 1);
        M << 1.0;
        CHECK(stage_cost(p, 2.0, 0, M, single_tau_table(2.0, w)) ==
              doctest::Approx(1.5));
    }
    SUBCASE("symmetric max") {
        Vector w(2), p(2);
        w << 1.0, 1.0;
        p << 0.5, 0.5;
        Matrix M = Matrix::Zero(2, 2);
        CHECK(stage_cost(p, 1.0, 0, M, single_tau_table(1.0, w)) ==
              doctest::Approx(0.5));
    }
    SUBCASE("hand-evaluated asymmetric case") {
        Vector w(2), p(2);
        w << 0.2, 3.0;
        p << 0.99, 0.01;
        Matrix M(2, 2);
        M << 1.0, 2.0, 0.0, 0.0;
        CHECK(stage_cost(p, 1.0, 0, M, single_tau_table(1.0, w)) ==
              doctest::Approx(1.208).epsilon(1e-12));
    }
    SUBCASE("off-grid tau rejected") {
        Vector w(1), p(1);
        w << 0.5;
        p << 1.0;
        Matrix M = Matrix::Zero(1, 1);
        CHECK_THROWS_AS(stage_cost(p, 1.7, 0, M, single_tau_table(2.0, w)),
                        ValidationError);
    }
}

TEST_CASE("attacker best response") {
    Vector p(2);
    p << 0.5, 0.5;
    Vector w(2);
    w << 1.0, 2.0;
    CHECK(attacker_best_response(p, 1.0, single_tau_table(1.0, w)) == 1);

    w << 1.0, 1.0;  // tie breaks to the smallest index
    CHECK(attacker_best_response(p, 1.0, single_tau_table(1.0, w)) == 0);

    p << 0.9, 0.1;
    w << 0.2, 3.0;  // 0.3 > 0.18
    CHECK(attacker_best_response(p, 1.0, single_tau_table(1.0, w)) == 1);
}

TEST_CASE("attacker best response properties") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Index n = 4;
        Vector p(n), w(n);
        for (Index j = 0; j < n; ++j) {
            p[j] = u(rng);
            w[j] = u(rng);
        }
        p /= p.sum();
        const Index br = attacker_best_response(p, 1.0, single_tau_table(1.0, w));
        // argmax recomputed independently
        Index expect = 0;
        for (Index j = 1; j < n; ++j)
            if (p[j] * w[j] > p[expect] * w[expect]) expect = j;
        CHECK(br == expect);
        // scaling w leaves the argmax unchanged
        CHECK(attacker_best_response(p, 1.0, single_tau_table(1.0, 3.7 * w)) == br);
    }
}

TEST_CASE("stage cost is convex in the probability row") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    const Index n = 3;
    Vector w(n);
    w << 0.4, 1.1, 0.7;
    Matrix M(n, n);
    M << 0.2, 0.5, 0.1, 0.3, 0.4, 0.9, 0.6, 0.2, 0.3;
    const OverlapTable table = single_tau_table(1.0, w);
    for (int trial = 0; trial < 100; ++trial) {
        Vector a(n), b(n);
        for (Index j = 0; j < n; ++j) {
            a[j] = u(rng);
            b[j] = u(rng);
        }
        a /= a.sum();
        b /= b.sum();
        const Vector mid = 0.5 * (a + b);
        CHECK(stage_cost(mid, 1.0, 0, M, table) <=
              0.5 * stage_cost(a, 1.0, 0, M, table) +
                  0.5 * stage_cost(b, 1.0, 0, M, table) + 1e-12);
    }
}

TEST_CASE("stationary distribution") {
    SUBCASE("doubly stochastic gives uniform") {
        Matrix P(3, 3);
        P << 0.5, 0.3, 0.2, 0.3, 0.4, 0.3, 0.2, 0.3, 0.5;
        const Vector pi = stationary_distribution(P);
        for (Index i = 0; i < 3; ++i)
            CHECK(pi[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    }
    SUBCASE("two-state symmetric") {
        Matrix P(2, 2);
        P << 0.5, 0.5, 0.5, 0.5;
        const Vector pi = stationary_distribution(P);
        CHECK(pi[0] == doctest::Approx(0.5).epsilon(1e-10));
    }
    SUBCASE("two-state balance equations") {
        Matrix P(2, 2);
        P << 0.9, 0.1, 0.2, 0.8;
        const Vector pi = stationary_distribution(P);
        CHECK(pi[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
        CHECK(pi[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    }
    SUBCASE("entries bounded below by alpha") {
        std::mt19937_64 rng(31);
        const double alpha = 0.05;
        const Matrix P = random_alpha_row_matrix(5, alpha, rng);
        const Vector pi = stationary_distribution(P);
        CHECK((pi.array() >= alpha - 1e-9).all());
        CHECK((P.transpose() * pi - pi).lpNorm<Eigen::Infinity>() <= 1e-10);
    }
    SUBCASE("non-stochastic input rejected") {
        Matrix P(2, 2);
        P << 0.9, 0.3, 0.2, 0.8;
        CHECK_THROWS_AS(stationary_distribution(P), ValidationError);
    }
}

TEST_CASE("policy evaluation") {
    SUBCASE("single configuration") {
        Vector w(1);
        w << 0.5;
        Matrix M(1, 1);
        M << 1.0;
        DefenseStrategy s;
        s.P = Matrix::Ones(1, 1);
        s.tau = Vector::Constant(1, 2.0);
        CHECK(evaluate_policy(s, M, single_tau_table(2.0, w)).g ==
              doctest::Approx(0.75));
    }
    SUBCASE("symmetric two-state collapses to the one-state formula") {
        Vector w(2);
        w << 0.8, 0.8;
        Matrix M = Matrix::Constant(2, 2, 0.4);
        DefenseStrategy s;
        s.P = Matrix::Constant(2, 2, 0.5);
        s.tau = Vector::Constant(2, 1.5);
        // per-state cost: max_j(0.5 * 0.8) + 0.4 = 0.8, g = 0.8 / 1.5
        CHECK(evaluate_policy(s, M, single_tau_table(1.5, w)).g ==
              doctest::Approx((0.5 * 0.8 + 0.4) / 1.5).epsilon(1e-12));
    }
}
