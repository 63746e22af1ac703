#include "doctest.h"

#include "plane_waves.hpp"
#include "rng.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace ptq;

namespace {

TwoSpinor random_spinor(Rng& rng) {
    while (true) {
        CFloat a(rng.dyadic_double(3), rng.dyadic_double(3));
        CFloat b(rng.dyadic_double(3), rng.dyadic_double(3));
        if (std::norm(a) + std::norm(b) > 0.01) return TwoSpinor::normalized(a, b);
    }
}

std::vector<SampleXT> sample_points(Rng& rng, int n) {
    std::vector<SampleXT> pts;
    for (int k = 0; k < n; ++k) {
        SampleXT s;
        s.x0 = rng.dyadic_double(2);
        for (int j = 0; j < 3; ++j) s.x[j] = rng.dyadic_double(2);
        pts.push_back(s);
    }
    return pts;
}

// 4th-order central difference of one component of eval: the independent
// derivative oracle the analytic jets are validated against.
CFloat fd_partial(const PlaneWaveState& s, int comp, int axis, double x0, Vec3 x, double h) {
    auto value = [&](double shift) {
        double x0s = x0;
        Vec3 xs = x;
        if (axis == 0)
            x0s += shift;
        else
            xs[axis - 1] += shift;
        return s.eval(x0s, xs)[comp];
    };
    return (-value(2 * h) + 8.0 * value(h) - 8.0 * value(-h) + value(2 * h * -1 * 1)) / (12.0 * h);
}

}  // namespace

TEST_CASE("shell momentum") {
    CHECK(shell_p0({0, 0, 0}, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(shell_p0({0, 0, 4}, 1.0, 3.0) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(shell_p0({0, 0, 4}, 1.0, -3.0) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK_THROWS_AS(shell_p0({0, 0, 0}, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(shell_p0({0, 0, 0}, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("two-spinor validation") {
    CHECK_THROWS_AS(TwoSpinor(CFloat(1, 0), CFloat(1, 0)), std::invalid_argument);
    TwoSpinor w = TwoSpinor::normalized(CFloat(1, 0), CFloat(1, 0));
    CHECK(std::abs(std::norm(w[0]) + std::norm(w[1]) - 1.0) < 1e-15);
    CHECK_THROWS_AS(TwoSpinor::normalized(CFloat(0, 0), CFloat(0, 0)), std::invalid_argument);
}

TEST_CASE("rest-frame amplitudes") {
    // p = 0: u_pos = (sqrt(2mc) w, 0), and the direction convention cannot
    // leak because the lower block carries the exact factor sqrt(p0 - mc) = 0
    double m = 1.0, c = 3.0;
    TwoSpinor w(CFloat(1, 0), CFloat(0, 0));
    Bispinor u = spinor_pos({0, 0, 0}, w, m, c);
    double root6 = std::sqrt(6.0);
    CHECK(u[0] == CFloat(root6, 0));
    CHECK(u[1] == CFloat(0, 0));
    CHECK(u[2] == CFloat(0, 0));
    CHECK(u[3] == CFloat(0, 0));

    Bispinor v = spinor_neg({0, 0, 0}, w, m, c);
    CHECK(v[0] == CFloat(0, 0));
    CHECK(v[1] == CFloat(0, 0));
    CHECK(v[2] == CFloat(root6, 0));
    CHECK(v[3] == CFloat(0, 0));
}

TEST_CASE("normalization and momentum residuals on both sheets") {
    Rng rng(31);
    for (double c : {3.0, -3.0}) {
        double m = 1.0, mc = m * c;
        for (int k = 0; k < 100; ++k) {
            Vec3 p = {rng.dyadic_double(17), rng.dyadic_double(17), rng.dyadic_double(17)};
            TwoSpinor w = random_spinor(rng);
            double p0 = shell_p0(p, m, c);

            Bispinor up = spinor_pos(p, w, m, c);
            CHECK(std::abs(ubar_u(up) - 2 * mc) <= 1e-12 * std::abs(2 * mc));
            CHECK(momentum_residual(up, p, p0, mc, +1) <= 1e-12);

            Bispinor un = spinor_neg(p, w, m, c);
            CHECK(std::abs(ubar_u(un) + 2 * mc) <= 1e-12 * std::abs(2 * mc));
            CHECK(momentum_residual(un, p, p0, mc, -1) <= 1e-12);

            CHECK(std::abs(p0 * p0 - dot3(p, p) - mc * mc) <= 1e-12 * p0 * p0);
        }
    }
}

TEST_CASE("off-shell inputs are rejected") {
    TwoSpinor w(CFloat(1, 0), CFloat(0, 0));
    CHECK_THROWS_AS(spinor_pos_at({0, 0, 4}, 999.0, w, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(spinor_neg_at({0, 0, 4}, 1.0, w, 3.0), std::invalid_argument);
    CHECK(momentum_residual(spinor_pos_at({0, 0, 4}, 5.0, w, 3.0), {0, 0, 4}, 5.0, 3.0, +1) <=
          1e-12);
}

TEST_CASE("evaluation basics") {
    Rng rng(43);
    TwoSpinor w = random_spinor(rng);
    auto s = PlaneWaveState::make(FrequencyKind::positive, {1, -2, 0.5}, w, 1.0, 3.0, 1.0);

    // unit phase at the origin
    Bispinor u = s.amplitude();
    CVec4 at0 = s.eval(0, {0, 0, 0});
    double n = 1.0 / std::sqrt(2 * s.p0());
    for (int k = 0; k < 4; ++k) CHECK(std::abs(at0[k] - n * u[k]) <= 1e-15);

    // plane waves have position-independent modulus
    for (const SampleXT& pt : sample_points(rng, 10)) {
        CVec4 v = s.eval(pt.x0, pt.x);
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(std::abs(v[k]) - std::abs(at0[k])) <= 1e-12 * (1 + std::abs(at0[k])));
    }
}

TEST_CASE("analytic jets match the finite-difference oracle") {
    Rng rng(47);
    auto s = PlaneWaveState::make(FrequencyKind::positive, {2, 1, -3}, random_spinor(rng), 1.0,
                                  3.0, 1.0);
    SpinorField f = field_of(s);
    for (const SampleXT& pt : sample_points(rng, 3)) {
        Jet jet = f(pt.x0, pt.x);
        for (int comp = 0; comp < 4; ++comp) {
            CFloat fd_t = fd_partial(s, comp, 0, pt.x0, pt.x, 1e-3);
            CHECK(std::abs(jet.dt[comp] - fd_t) <= 1e-6);
            for (int axis = 1; axis <= 3; ++axis) {
                CFloat fd_x = fd_partial(s, comp, axis, pt.x0, pt.x, 1e-3);
                CHECK(std::abs(jet.dx[axis - 1][comp] - fd_x) <= 1e-6);
            }
        }
    }
}

TEST_CASE("free residual vanishes for both kinds on both sheets") {
    Rng rng(53);
    auto pts = sample_points(rng, 10);
    for (double c : {3.0, -3.0}) {
        for (int k = 0; k < 20; ++k) {
            Vec3 p = {rng.dyadic_double(17), rng.dyadic_double(17), rng.dyadic_double(17)};
            TwoSpinor w = random_spinor(rng);
            auto pos = PlaneWaveState::make(FrequencyKind::positive, p, w, 1.0, c, 1.0);
            auto neg = PlaneWaveState::make(FrequencyKind::negative, p, w, 1.0, c, 1.0);
            CHECK(free_residual(field_of(pos), pos.mc(), 1.0, pts) <= 1e-12);
            CHECK(free_residual(field_of(neg), neg.mc(), 1.0, pts) <= 1e-12);
        }
    }
}

TEST_CASE("charge conjugation dictionary") {
    Rng rng(59);
    auto pts = sample_points(rng, 10);
    DiscreteOp C = make_C();

    for (int k = 0; k < 20; ++k) {
        Vec3 p = k == 0 ? Vec3{0, 0, 0}
                        : Vec3{rng.dyadic_double(8), rng.dyadic_double(8), rng.dyadic_double(8)};
        TwoSpinor wp = random_spinor(rng);
        auto neg = PlaneWaveState::make(FrequencyKind::negative, p, wp, 1.0, 3.0, 1.0);

        // C image of the negative state equals the positive state with
        // w = sigma_y conj(w'), pointwise
        PlaneWaveState pos = charge_conjugate(neg);
        CHECK(pos.kind() == FrequencyKind::positive);
        CHECK(field_deviation(op_image(C, field_of(neg)), field_of(pos), pts) <= 1e-12);
    }

    auto pos_state = PlaneWaveState::make(FrequencyKind::positive, {1, 2, 3},
                                          random_spinor(rng), 1.0, 3.0, 1.0);
    CHECK_THROWS_AS(charge_conjugate(pos_state), std::invalid_argument);

    // applying the operator twice restores the field
    SpinorField twice = op_image(C, op_image(C, field_of(pos_state)));
    CHECK(field_deviation(twice, field_of(pos_state), pts) <= 1e-12);
}

TEST_CASE("sheet identification changes no value") {
    Rng rng(61);
    auto s = PlaneWaveState::make(FrequencyKind::positive, {0.5, -1, 2}, random_spinor(rng), 1.0,
                                  3.0, 1.0);
    auto flipped = s.sheet_identified();

    CHECK(flipped.c() == -s.c());
    CHECK(flipped.mc() == s.mc());
    CHECK(flipped.p0() == s.p0());
    CHECK(flipped.energy() == -s.energy());

    // bit-for-bit: the evaluation formula reads only p, w, hbar and mc
    for (const SampleXT& pt : sample_points(rng, 10)) {
        CVec4 a = s.eval(pt.x0, pt.x);
        CVec4 b = flipped.eval(pt.x0, pt.x);
        for (int k = 0; k < 4; ++k) CHECK(a[k] == b[k]);
    }

    auto twice = flipped.sheet_identified();
    CHECK(twice.c() == s.c());
    CHECK(twice.energy() == s.energy());
}

TEST_CASE("conjugate-and-negate leaves the exponential factor unchanged") {
    Rng rng(67);
    auto s = PlaneWaveState::make(FrequencyKind::positive, {2, -1, 1}, random_spinor(rng), 1.0,
                                  3.0, 1.0);
    // the phase of Psi*(-x0,-x) equals the phase of Psi(x0,x); compare the
    // full values against amplitude-conjugation alone
    Bispinor u = s.amplitude();
    double n = 1.0 / std::sqrt(2 * s.p0());
    for (const SampleXT& pt : sample_points(rng, 10)) {
        CVec4 direct = s.eval(pt.x0, pt.x);
        CVec4 flipped = s.eval(-pt.x0, {-pt.x[0], -pt.x[1], -pt.x[2]});
        for (int k = 0; k < 4; ++k) {
            CFloat lhs = std::conj(flipped[k]);
            // conj(u_k) times the unflipped phase
            CFloat phase = direct[k] / (n * u[k] == CFloat(0, 0) ? CFloat(1, 0) : n * u[k]);
            if (std::abs(u[k]) > 1e-14)
                CHECK(std::abs(lhs - std::conj(u[k]) * n * phase) <= 1e-12);
        }
    }
}

TEST_CASE("PTQ versus charge conjugation on states") {
    Rng rng(71);
    auto pts = sample_points(rng, 10);
    for (double c : {3.0, -3.0}) {
        for (int k = 0; k < 20; ++k) {
            Vec3 p = k == 0 ? Vec3{0, 0, 0}
                            : Vec3{rng.dyadic_double(8), rng.dyadic_double(8),
                                   rng.dyadic_double(8)};
            auto pos = PlaneWaveState::make(FrequencyKind::positive, p, random_spinor(rng), 1.0,
                                            c, 1.0);
            PtqVsCResult res = ptq_vs_c_check(pos, pts, 1e-12);
            CHECK(res.conj_image_dev <= 1e-12);
            CHECK(res.table_formula_dev <= 1e-12);
            CHECK(res.best_fit_dev <= 1e-12);
            CHECK(res.deviation <= 1e-12);
            CHECK(res.fitted_phase == Phase::minus_one());
            CHECK(res.paper_phase_attained);
        }
    }

    auto neg = PlaneWaveState::make(FrequencyKind::negative, {1, 0, 0},
                                    TwoSpinor(CFloat(1, 0), CFloat(0, 0)), 1.0, 3.0, 1.0);
    CHECK_THROWS_AS(ptq_vs_c_check(neg, pts, 1e-12), std::invalid_argument);
}

TEST_CASE("PTQ image solves the speed-flipped free equation") {
    Rng rng(73);
    auto pts = sample_points(rng, 10);
    DiscreteOp PTQ = op_by_name("PTQ");
    for (int k = 0; k < 10; ++k) {
        Vec3 p = {rng.dyadic_double(8), rng.dyadic_double(8), rng.dyadic_double(8)};
        auto pos = PlaneWaveState::make(FrequencyKind::positive, p, random_spinor(rng), 1.0, 3.0,
                                        1.0);
        SpinorField img = op_image(PTQ, field_of(pos));
        CHECK(free_residual(img, -pos.mc(), 1.0, pts) <= 1e-12);
        // and it does not solve the unflipped equation
        CHECK(free_residual(img, pos.mc(), 1.0, pts) > 1e-3);
    }
}

TEST_CASE("state validation") {
    TwoSpinor w(CFloat(1, 0), CFloat(0, 0));
    CHECK_THROWS_AS(PlaneWaveState::make(FrequencyKind::positive, {0, 0, 0}, w, -1.0, 3.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(PlaneWaveState::make(FrequencyKind::positive, {0, 0, 0}, w, 1.0, 0.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(PlaneWaveState::make(FrequencyKind::positive, {0, 0, 0}, w, 1.0, 3.0, 0.0),
                    std::invalid_argument);
}
