#include <cmath>

#include "compwave/interaction.hpp"
#include "compwave/rootfind.hpp"
#include "compwave/verify.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace compwave;

namespace {
const WaveAnsatz kAnsatz = cwtest::default_ansatz();
}

TEST_CASE("X1 golden value at t = 100") {
    InteractionCurves curves(kAnsatz);
    const double x1 = curves.find_x1(100.0);
    // frozen from converged bisection; cross-checked below at 100x tighter tol
    CHECK(x1 == doctest::Approx(107.4286136).epsilon(1e-8));
    const auto f = [&](double x) { return kAnsatz.v_hat1(x, 100.0) - kAnsatz.data.a; };
    const double tight = bisect(f, 90.0, 160.0, 1e-12);
    CHECK(std::abs(x1 - tight) <= 1e-7);
}

TEST_CASE("X1 defining relation holds at the root") {
    InteractionCurves curves(kAnsatz);
    for (double t : {1.0, 10.0, 1000.0}) {
        const double x1 = curves.find_x1(t);
        CHECK(std::abs(kAnsatz.v_hat1(x1, t) - kAnsatz.data.a) <= 1e-8);
    }
}

TEST_CASE("Z1 lies left of X1 at all sampled times") {
    InteractionCurves curves(kAnsatz);
    for (double t : log_spaced(1.0, 1e4, 12)) {
        const CurveSample s = curves.sample(t);
        CHECK(s.z1 <= s.x1);
        CHECK(std::abs(kAnsatz.v_hat1(s.z1, t) - curves.z1_level(t)) <= 1e-8);
    }
}

TEST_CASE("degenerate amplitude: no rarefaction means no interaction curve") {
    // v+ = a has an identically flat fan; the defining function stays below a
    FarFieldData d;
    d.v_minus = 0.0;
    d.v_plus = kAnsatz.model.a;
    d.a = kAnsatz.model.a;
    d.u_minus = 0.0;
    d.u_a = -1.0;
    d.u_plus = -1.0;
    d.delta = 1.0;
    const WaveAnsatz degen(kAnsatz.model, d, kAnsatz.mu);
    InteractionCurves curves(degen);
    CHECK_THROWS_AS(curves.find_x1(10.0), RootBracketError);
    const T0Result t0 = detect_t0(curves, 1.0, 100.0, 16);
    CHECK_FALSE(t0.found);
    CHECK(t0.reason.find("not bracketed") != std::string::npos);
}

TEST_CASE("detect_t0 finds the onset at beta = 0.05") {
    InteractionCurves curves(kAnsatz, 0.05, 0.25);
    const T0Result r = detect_t0(curves, 1.0, 1e4, 50);
    REQUIRE(r.found);
    // onset is set by the lower X1 bound, around t ~ 8.7e2 on this grid
    CHECK(r.t0 == doctest::Approx(868.511).epsilon(1e-3));
    for (const CurveSample& s : r.samples) {
        if (s.t < r.t0) continue;
        CHECK(s.x1_lower_slack >= 0.0);
        CHECK(s.x1_upper_slack >= 0.0);
        CHECK(s.z1_lower_slack >= 0.0);
        CHECK(s.y1 >= 1.0);
    }
}

TEST_CASE("detect_t0 reports failure at the proof value beta = 1/4") {
    // the Z1 lower bound at beta = 1/4 holds only far beyond t = 1e4 for this
    // amplitude, so detection must fail inside the scan window
    InteractionCurves curves(kAnsatz, 0.25, 0.25);
    const T0Result r = detect_t0(curves, 1.0, 1e4, 50);
    CHECK_FALSE(r.found);
    CHECK(r.reason.find("never hold") != std::string::npos);
}

TEST_CASE("upper X1 bound holds on the whole scan grid") {
    InteractionCurves curves(kAnsatz);
    for (double t : log_spaced(1.0, 1e4, 20))
        CHECK(curves.sample(t).x1_upper_slack >= 0.0);
}

TEST_CASE("slack report and Y1 floor past the onset") {
    InteractionCurves curves(kAnsatz, 0.05, 0.25);
    const SlackReport early = curves.slack_report(2000.0, 0.25);
    const SlackReport late = curves.slack_report(9000.0, 0.25);
    CHECK(early.y1 >= 1.0);
    CHECK(late.y1 >= 1.0);
    // the upper slack decreases toward its constant
    CHECK(late.upper_slack <= early.upper_slack + 0.05);
    CHECK_THROWS_AS(curves.slack_report(2000.0, 1.5), std::domain_error);
}

TEST_CASE("Z1 lower-bound locus stays below the level set at beta = 0.05") {
    const double beta = 0.05;
    InteractionCurves curves(kAnsatz, beta, 0.25);
    for (double t : log_spaced(900.0, 1e4, 10)) {
        const double m1 = z1_lower_locus(kAnsatz, beta, t);
        CHECK(kAnsatz.v_hat1(m1, t) <= curves.z1_level(t));
    }
}

TEST_CASE("interaction battery passes end to end at beta = 0.05") {
    const InteractionBattery b = run_interaction_battery(kAnsatz, 0.05, 0.25, 50);
    INFO(b.detection.detail);
    CHECK(b.detection.passed);
    INFO(b.x1_bounds.detail);
    CHECK(b.x1_bounds.passed);
    INFO(b.z1_bounds.detail);
    CHECK(b.z1_bounds.passed);
    INFO(b.slack_trends.detail);
    CHECK(b.slack_trends.passed);
    INFO(b.x1_consistency.detail);
    CHECK(b.x1_consistency.passed);
}

TEST_CASE("curve samples are cached for export") {
    InteractionCurves curves(kAnsatz);
    curves.sample(5.0);
    curves.sample(50.0);
    CHECK(curves.cached_samples().size() == 2);
    CHECK(curves.cached_samples()[1].t == doctest::Approx(50.0));
}
