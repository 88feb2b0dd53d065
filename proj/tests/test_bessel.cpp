#include <cmath>
#include <random>

#include "doctest.h"
#include "gbessel/bessel.hpp"
#include "gbessel/error.hpp"
#include "sampling.hpp"

using namespace gbessel;
using gbessel::testing::disk_point;
using gbessel::testing::uniform;

TEST_CASE("make_params derives kappa") {
    CHECK(make_params(0.0, 2.0, 1.0).kappa() == 1.5);
    CHECK(make_params(-0.5, 2.0, -1.0).kappa() == 1.0);
    CHECK_THROWS_AS(make_params(-1.5, 2.0, 1.0), InvalidKappa);
    CHECK_THROWS_AS(make_params(-2.0, 1.0, 0.0), InvalidKappa);
    CHECK_NOTHROW(make_params(-2.5, 1.0, 0.0));
    CHECK_THROWS_AS(make_params(-3.0 + 1e-10, 3.0, 0.0), InvalidKappa);
    CHECK_NOTHROW(make_params(-3.0 + 1e-6, 3.0, 0.0));
    CHECK_THROWS_AS(make_params(std::nan(""), 0.0, 0.0), InvalidArgument);

    const auto p = make_params(0.25, 0.5, 3.0);
    CHECK(p.kappa() == p.p() + (p.b() + 1.0) / 2.0);
    CHECK(params_from_kappa(0.1, 2.0).kappa() == 0.1);
    CHECK(p.shifted().kappa() == doctest::Approx(p.kappa() + 1.0));
}

TEST_CASE("eval_u reference values") {
    const EvalConfig cfg;
    CHECK(eval_u(make_params(0.3, 0.0, 0.0), {0.3, 0.4}, 0, cfg).values[0] == cplx{1.0, 0.0});

    const auto j0 = eval_u(make_params(0.0, 2.0, 1.0), {1.0, 0.0}, 0, cfg).values[0];
    CHECK(std::abs(j0 - 0.841470984807897) < 1e-14);
    const auto i0 = eval_u(make_params(0.0, 2.0, -1.0), {1.0, 0.0}, 0, cfg).values[0];
    CHECK(std::abs(i0 - 1.1752011936438015) < 1e-14);

    // i_p'(0) = 1 / (4p + 6)
    for (double p : {-0.5, 0.0, 1.0, 2.5}) {
        const auto d = eval_u(make_params(p, 2.0, -1.0), {0.0, 0.0}, 1, cfg).values[1];
        CHECK(std::abs(d - 1.0 / (4.0 * p + 6.0)) < 1e-16);
    }
}

TEST_CASE("eval_u preconditions and truncation") {
    const auto params = make_params(0.0, 2.0, 3.0);
    CHECK_THROWS_AS(eval_u(params, {1.1, 0.0}), InvalidArgument);
    CHECK_THROWS_AS(eval_u(params, {0.5, 0.0}, 4), InvalidArgument);
    CHECK_THROWS_AS(eval_u(params, {0.9, 0.3}, 0, EvalConfig{1e-14, 3}), NoConvergence);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto r = eval_u(params, disk_point(rng, 1.0), 3);
        CHECK(r.values.size() == 4);
        CHECK(r.truncation_estimate <= 1e-14 * std::max(1.0, std::abs(r.values[0])));
    }
}

TEST_CASE("closed forms sin(sqrt z)/sqrt z and sinh(sqrt z)/sqrt z") {
    std::mt19937_64 rng(11);
    const auto j = make_params(0.0, 2.0, 1.0);
    const auto i = make_params(0.0, 2.0, -1.0);
    for (int k = 0; k < 100; ++k) {
        const cplx z = disk_point(rng, 1.0);
        const cplx s = std::sqrt(z);
        CHECK(std::abs(eval_u(j, z).values[0] - std::sin(s) / s) < 1e-12);
        CHECK(std::abs(eval_u(i, z).values[0] - std::sinh(s) / s) < 1e-12);
    }
}

TEST_CASE("ode residual") {
    const auto j = make_params(0.0, 2.0, 1.0);
    CHECK(std::abs(ode_residual(j, {0.0, 0.7})) < 1e-10);
    CHECK(std::abs(ode_residual(make_params(1.0, 0.0, 0.0), {0.4, -0.8})) == 0.0);

    // Wrong kappa in the operator: residual = 2 z u'(z) at z = 0.5 (mpmath: -0.158480772789938).
    const cplx wrong = ode_residual_with_kappa(j, j.kappa() + 0.5, {0.5, 0.0});
    CHECK(std::abs(wrong) > 1e-3);
    CHECK(wrong.real() == doctest::Approx(-0.15848077278993829).epsilon(1e-13));
}

TEST_CASE("recurrence residual") {
    CHECK(std::abs(recurrence_residual(make_params(0.0, 2.0, 1.0), {0.5, 0.0})) < 1e-12);
    CHECK(std::abs(recurrence_residual(make_params(1.0, 1.0, -2.0), {-0.3, 0.2})) < 1e-12);
    CHECK(recurrence_residual(make_params(1.0, 1.0, 0.0), {-0.3, 0.2}) == cplx{0.0, 0.0});
}

TEST_CASE("property: residuals, normalization, conjugate symmetry") {
    std::mt19937_64 rng(2024);
    for (int n = 0; n < 200; ++n) {
        const double kappa = uniform(rng, 0.5, 10.0);
        const double b = uniform(rng, -2.0, 4.0);
        const double c = uniform(rng, -4.0, 4.0);
        const auto params = make_params(kappa - (b + 1.0) / 2.0, b, c);
        const cplx z = disk_point(rng, 0.999);

        const auto v = eval_u(params, z, 2).values;
        const double scale = 1.0 + std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]);
        CHECK(std::abs(ode_residual(params, z)) < 1e-9 * scale);
        CHECK(std::abs(recurrence_residual(params, z)) < 1e-10 * (1.0 + std::abs(v[1])));

        CHECK(eval_u(params, {0.0, 0.0}).values[0] == cplx{1.0, 0.0});
        const cplx a = eval_u(params, std::conj(z)).values[0];
        CHECK(std::abs(a - std::conj(v[0])) < 1e-13);
    }
}
