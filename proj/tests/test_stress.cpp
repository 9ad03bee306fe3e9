#include <cmath>

#include "compwave/quad.hpp"
#include "compwave/rng.hpp"
#include "compwave/stress.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace compwave;

namespace {
const StressModel kModel = cwtest::default_model();  // a=1, b=1, k=0.5
}

TEST_CASE("stress model construction validates parameters") {
    CHECK_THROWS_AS(StressModel::make(0.0, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(StressModel::make(1.0, -1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(StressModel::make(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("sigma piecewise values") {
    CHECK(sigma(kModel, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sigma(kModel, 2.0) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(sigma(kModel, -2.0) == doctest::Approx(-2.5).epsilon(1e-15));
    CHECK(sigma(kModel, 0.0) == 0.0);
}

TEST_CASE("sigma derivatives and joint continuity") {
    CHECK(sigma_prime(kModel, 2.0) == doctest::Approx(2.0));
    CHECK(sigma_double_prime(kModel, 2.0) == doctest::Approx(1.0));
    CHECK(sigma_prime(kModel, 0.0) == doctest::Approx(1.0));
    CHECK(sigma_double_prime(kModel, 0.0) == 0.0);
    // joint convention: right-branch curvature at v = a, left-branch at v = -a
    CHECK(sigma_prime(kModel, 1.0) == doctest::Approx(1.0));
    CHECK(sigma_double_prime(kModel, 1.0) == doctest::Approx(1.0));
    CHECK(sigma_double_prime(kModel, -1.0) == doctest::Approx(-1.0));
    // one-sided sigma' limits coincide at both joints
    const double h = 1e-9;
    CHECK(sigma_prime(kModel, 1.0 - h) ==
          doctest::Approx(sigma_prime(kModel, 1.0 + h)).epsilon(1e-7));
    CHECK(sigma_prime(kModel, -1.0 - h) ==
          doctest::Approx(sigma_prime(kModel, -1.0 + h)).epsilon(1e-7));
}

TEST_CASE("lambda2 values") {
    CHECK(lambda2(kModel, 0.3) == doctest::Approx(1.0));
    CHECK(lambda2(kModel, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(lambda2(kModel, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("lambda2_inverse closed form and round trip") {
    CHECK(lambda2_inverse(kModel, std::sqrt(2.0)) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(lambda2_inverse(kModel, 1.0) == doctest::Approx(1.0));
    const double v = lambda2_inverse(kModel, 1.2);
    CHECK(v == doctest::Approx(1.44).epsilon(1e-14));
    CHECK(lambda2(kModel, v) == doctest::Approx(1.2).epsilon(1e-14));
    CHECK_THROWS_AS(lambda2_inverse(kModel, 0.5), std::domain_error);
}

TEST_CASE("lambda2_inverse round trip on the convex branch") {
    SplitMix64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double v = rng.uniform(1.0, 6.0);
        const double back = lambda2_inverse(kModel, lambda2(kModel, v));
        CHECK(std::abs(back - v) <= 1e-14 * (1.0 + v));
    }
}

TEST_CASE("lambda2_primitive against quadrature oracle") {
    const auto oracle = [&](double lo, double hi) {
        return integrate_adaptive([&](double s) { return lambda2(kModel, s); }, lo, hi,
                                  1e-14, 48, 8)
            .value;
    };
    const double exact_12 = 2.0 / 3.0 * (2.0 * std::sqrt(2.0) - 1.0);
    CHECK(lambda2_primitive(kModel, 1.0, 2.0) == doctest::Approx(exact_12).epsilon(1e-14));
    CHECK(std::abs(lambda2_primitive(kModel, 1.0, 2.0) - oracle(1.0, 2.0)) <= 1e-12);
    CHECK(lambda2_primitive(kModel, 1.0, 1.0) == 0.0);
    CHECK(std::abs(lambda2_primitive(kModel, 1.5, 2.0) - oracle(1.5, 2.0)) <= 1e-12);
    CHECK_THROWS_AS(lambda2_primitive(kModel, 0.5, 2.0), std::domain_error);
    CHECK_THROWS_AS(lambda2_primitive(kModel, 2.0, 1.0), std::domain_error);
}

TEST_CASE("lambda2_primitive additivity") {
    SplitMix64 rng(12);
    for (int i = 0; i < 200; ++i) {
        double v0 = rng.uniform(1.0, 5.0);
        double v1 = rng.uniform(1.0, 5.0);
        double v2 = rng.uniform(1.0, 5.0);
        if (v0 > v1) std::swap(v0, v1);
        if (v1 > v2) std::swap(v1, v2);
        if (v0 > v1) std::swap(v0, v1);
        const double split =
            lambda2_primitive(kModel, v0, v1) + lambda2_primitive(kModel, v1, v2);
        const double whole = lambda2_primitive(kModel, v0, v2);
        CHECK(std::abs(split - whole) <= 1e-13 * (1.0 + std::abs(whole)));
    }
}

TEST_CASE("sigma_prime positive and sigma_double_prime sign pattern") {
    SplitMix64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const double v = rng.uniform(-8.0, 8.0);
        CHECK(sigma_prime(kModel, v) > 0.0);
        const double c = sigma_double_prime(kModel, v);
        if (v > 1.0) CHECK(c > 0.0);
        else if (v < -1.0) CHECK(c < 0.0);
        else CHECK(c == 0.0);
    }
}

TEST_CASE("centered differences match sigma_prime away from the joints") {
    SplitMix64 rng(14);
    for (double h : {1e-3, 1e-4}) {
        for (int i = 0; i < 200; ++i) {
            double v = rng.uniform(-4.0, 4.0);
            if (std::abs(std::abs(v) - kModel.a) < 2.0 * h) continue;
            const double fd = (sigma(kModel, v + h) - sigma(kModel, v - h)) / (2.0 * h);
            // branches are at most quadratic, so the centered difference is
            // exact up to rounding
            CHECK(std::abs(fd - sigma_prime(kModel, v)) <= 1e-9);
        }
    }
}

TEST_CASE("sigma is odd across the three regions") {
    SplitMix64 rng(15);
    for (int i = 0; i < 300; ++i) {
        const double v = rng.uniform(0.0, 5.0);
        CHECK(sigma(kModel, -v) == doctest::Approx(-sigma(kModel, v)).epsilon(1e-14));
    }
}
