#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "atsmem/optim.hpp"
#include "atsmem/zeeman.hpp"

using namespace atsmem;

TEST_CASE("zeeman splitting") {
    CHECK(zeeman_splitting(0.5, 0.0) == 0.0);
    CHECK(zeeman_splitting(0.5, 1.6e-4) ==
          doctest::Approx(2.0 * zeeman_splitting(0.5, 0.8e-4)).epsilon(1e-12));

    // consistency: period of the g_F = 1/2 beat equals 2h/(mu_B B)
    const double omega = zeeman_splitting(0.5, 0.8e-4);
    CHECK(kTwoPi / omega == doctest::Approx(oscillation_period(0.8e-4)).epsilon(1e-12));
}

TEST_CASE("oscillation period") {
    const double period = oscillation_period(0.8e-4);
    CHECK(period == doctest::Approx(1.7861933764510776e-06).epsilon(1e-12));
    CHECK(std::abs(period - 1.7e-6) / 1.7e-6 < 0.10);

    CHECK(oscillation_period(0.4e-4) == doctest::Approx(2.0 * period).epsilon(1e-12));

    // the observed 2.0 us period corresponds to about 0.71 G by inversion
    const double b = 2.0 * kConst.h / (kConst.mu_B * 2.0e-6);
    CHECK(b == doctest::Approx(0.71e-4).epsilon(0.01));
    CHECK(oscillation_period(b) == doctest::Approx(2.0e-6).epsilon(1e-12));

    CHECK(std::isinf(oscillation_period(0.0)));  // no oscillation sentinel
}

TEST_CASE("retrieved intensity") {
    const double omega = zeeman_splitting(0.5, 0.8e-4);

    // single spin-wave: constant intensity
    const SpinWaveAmplitudes single{0.0, 1.3, 0.0};
    CHECK(retrieved_intensity(0.0, single, omega) == doctest::Approx(1.69).epsilon(1e-12));
    CHECK(retrieved_intensity(0.7e-6, single, omega) == doctest::Approx(1.69).epsilon(1e-12));

    // high-contrast condition q1 = 2 q0 = 2 q2: I ~ (q1 + 2 q0 cos)^2, min 0
    const SpinWaveAmplitudes high{1.0, 2.0, 1.0};
    CHECK(retrieved_intensity(0.0, high, omega) == doctest::Approx(16.0).epsilon(1e-12));
    const double half_period = kPi / omega;
    CHECK(retrieved_intensity(half_period, high, omega) == doctest::Approx(0.0).epsilon(1e-9));

    // periodicity in 2 pi / omega
    const SpinWaveAmplitudes q{0.4, 1.1, 0.8};
    const double period = kTwoPi / omega;
    CHECK(retrieved_intensity(period, q, omega) ==
          doctest::Approx(retrieved_intensity(0.0, q, omega)).epsilon(1e-9));
}

TEST_CASE("intensity extrema match dense sampling") {
    const double omega = 1.0;
    const std::vector<SpinWaveAmplitudes> cases = {
        {1.0, 2.0, 1.0}, {0.4, 1.1, 0.8}, {0.0, 1.0, 0.5}, {0.9, 0.1, 0.8}, {1.0, 0.0, 1.0}};
    for (const auto& q : cases) {
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i < 20000; ++i) {
            const double v = retrieved_intensity(kTwoPi * i / 20000.0, q, omega);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const IntensityExtrema ext = intensity_extrema(q);
        CHECK(ext.i_max == doctest::Approx(hi).epsilon(1e-6));
        CHECK(ext.i_min == doctest::Approx(lo).epsilon(1e-6).scale(ext.i_max));
    }
}

TEST_CASE("visibility") {
    CHECK(visibility(2.0, 0.0) == doctest::Approx(1.0));
    CHECK(visibility(2.0, 2.0) == doctest::Approx(0.0));

    // invariance under common scaling
    CHECK(visibility(3.0, 1.0) == doctest::Approx(visibility(30.0, 10.0)).epsilon(1e-14));

    // reported visibilities round-trip through constructed intensity pairs
    for (double v : {0.80, 0.62}) {
        const double i_max = 1.0;
        const double i_min = (1.0 - v) / (1.0 + v);
        CHECK(visibility(i_max, i_min) == doctest::Approx(v).epsilon(1e-12));
    }

    CHECK_THROWS_AS(visibility(1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(visibility(0.0, 0.0), std::domain_error);
}

TEST_CASE("high-contrast amplitudes give unit visibility") {
    const IntensityExtrema ext = intensity_extrema({1.0, 2.0, 1.0});
    CHECK(std::abs(visibility(ext.i_max, ext.i_min) - 1.0) < 1e-9);
}

TEST_CASE("sinusoid-times-decay fit recovers the beat frequency within 1%") {
    const double omega_true = zeeman_splitting(0.5, 0.71e-4);
    const SpinWaveAmplitudes q{0.9, 2.1, 1.1};
    DecoherenceParams decay;
    decay.theta = 110.0 * kPi / 180.0;
    decay.lambda = rb87().lambda_probe(Line::d2);
    decay.temperature = 450e-9;
    decay.f_bec = 0.3;
    decay.tau_mag = 7e-6;
    decay.mass = rb87().mass;

    // synthetic trace over ~2.2 periods, as measured in 200 ns steps
    std::vector<std::pair<double, double>> data;
    for (int i = 0; i <= 22; ++i) {
        const double t = 200e-9 * i;
        data.emplace_back(t, retrieved_intensity(t, q, omega_true, decay));
    }
    auto sse = [&](double omega) {
        double acc = 0;
        for (const auto& [t, y] : data) {
            const double r = y - retrieved_intensity(t, q, omega, decay);
            acc += r * r;
        }
        return acc;
    };
    const MinResult fit = golden_section_min(sse, 0.8 * omega_true, 1.25 * omega_true, 1e-12);
    CHECK(fit.x == doctest::Approx(omega_true).epsilon(0.01));
}

TEST_CASE("even in time when the side amplitudes match") {
    const SpinWaveAmplitudes q{0.7, 1.0, 0.7};
    const double omega = 1.0;
    for (double t : {0.3, 1.1, 2.9}) {
        // I(-t) = I(t) reads as I(2pi - wt) by periodicity
        CHECK(retrieved_intensity(kTwoPi - t, q, omega) ==
              doctest::Approx(retrieved_intensity(t, q, omega)).epsilon(1e-10));
    }
}

TEST_CASE("amplitude validation") {
    CHECK_THROWS_AS(retrieved_intensity(0.0, {0, 0, 0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(retrieved_intensity(0.0, {-1.0, 1.0, 0.0}, 1.0), std::domain_error);
}
