// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "atsmem/cloud.hpp"
#include "atsmem/counting.hpp"
#include "atsmem/decoherence.hpp"
#include "atsmem/fwm.hpp"
#include "atsmem/memory.hpp"
#include "atsmem/optics.hpp"
#include "atsmem/rng.hpp"
#include "atsmem/zeeman.hpp"
#include "oracles.hpp"

using namespace atsmem;

namespace {

const AtomSpecies kRb = rb87();
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Check {
    std::string name;
    std::function<bool(std::ostream&)> run;
};

bool within(double value, double target, double tol_rel) {
    return std::abs(value - target) <= tol_rel * std::abs(target);
}

// ---- 1. forward-efficiency ceiling -----------------------------------------

bool criterion_forward_ceiling(std::ostream& log) {
    const double eta_demo = eta_forward(4.0 * 3.7, 3.7);
    const double eta_broadband = eta_forward(4.0e4, 1.0e4);
    log << "eta_f(4F,F=3.7)=" << eta_demo << " (0.41 +- 0.02), eta_f(4F,F=1e4)="
        << eta_broadband << " (0.541 +- 0.001)";
    return std::abs(eta_demo - 0.41) <= 0.02 && std::abs(eta_broadband - 0.541) <= 0.001;
}

// ---- 2. thermal decoherence -------------------------------------------------

bool criterion_tau_thermal(std::ostream& log) {
    DecoherenceParams p;
    p.theta = 110.0 * kPi / 180.0;
    p.lambda = kRb.lambda_probe(Line::d2);
    p.temperature = 6.2e-6;
    p.mass = kRb.mass;
    const double tau = tau_thermal(p);
    log << "tau_th(6.2 uK, 110 deg, D2) = " << tau * 1e6 << " us (window [3.0, 3.3])";
    return tau >= 3.0e-6 && tau <= 3.3e-6;
}

// ---- 3. lifetime fits ---------------------------------------------------------

bool criterion_lifetimes(std::ostream& log) {
    struct Case {
        double temperature, f_bec, tau_mag, expected;
    };
    const Case cases[] = {{6.2e-6, 0.0, 7.0e-6, 4.5e-6},
                          {340e-9, 0.15, 7.0e-6, 7.8e-6},
                          {280e-9, 0.80, 16.5e-6, 15.8e-6}};
    bool ok = true;
    for (const Case& c : cases) {
        DecoherenceParams p;
        p.theta = 110.0 * kPi / 180.0;
        p.lambda = kRb.lambda_probe(Line::d2);
        p.temperature = c.temperature;
        p.f_bec = c.f_bec;
        p.tau_mag = c.tau_mag;
        p.mass = kRb.mass;
        p.t_s0 = 2e-6;  // shortest measured storage time
        const double t_star = memory_lifetime(p, DecayModel::fit);
        const bool pass = within(t_star, c.expected, 0.15);
        ok = ok && pass;
        log << t_star * 1e6 << "/" << c.expected * 1e6 << " us ";
    }
    log << "(each within 15%)";
    return ok;
}

// ---- 4. Zeeman period and visibility ---------------------------------------

bool criterion_zeeman(std::ostream& log) {
    const double period = oscillation_period(0.8e-4);
    const IntensityExtrema ext = intensity_extrema({1.0, 2.0, 1.0});
    const double v = visibility(ext.i_max, ext.i_min);
    log << "T(0.8 G) = " << period * 1e6 << " us (window [1.7, 1.9]), V(q1=2q0=2q2) = " << v;
    return period >= 1.7e-6 && period <= 1.9e-6 && std::abs(v - 1.0) <= 1e-9;
}

// ---- 5. FWM comparison -------------------------------------------------------

std::vector<double> fwm_bandwidths() {
    std::vector<double> b;
    const double linewidth = kRb.Gamma_eg / kTwoPi;
    for (int i = 0; i <= 30; ++i) b.push_back((10.0 + i) * linewidth);
    return b;
}

bool criterion_fwm_half(std::ostream& log) {
    const auto rows = protocol_noise_curve(fwm_bandwidths(), kRb, GammaConvention::half);
    bool ok = true;
    double prev_ratio = 0, prev_ats = 0, prev_eit = 0;
    double min_ratio = kInf;
    for (const auto& r : rows) {
        ok = ok && r.ratio >= 1e3;
        ok = ok && r.ratio > prev_ratio && r.s_ats_norm > prev_ats && r.s_eit_norm > prev_eit;
        prev_ratio = r.ratio;
        prev_ats = r.s_ats_norm;
        prev_eit = r.s_eit_norm;
        min_ratio = std::min(min_ratio, r.ratio);
    }
    log << "min S_EIT/S_ATS = " << min_ratio << " (>= 1e3), curves monotone in B";
    return ok;
}

bool criterion_fwm_full(std::ostream& log) {
    const auto rows = protocol_noise_curve(fwm_bandwidths(), kRb, GammaConvention::full);
    const double ratio_at_40 = rows.back().ratio;
    log << "full-convention S_EIT/S_ATS at B=40*Gamma/2pi = " << ratio_at_40 << " (>= 1e4)";
    return ratio_at_40 >= 1e4;
}

// ---- 6. optical-depth pipeline ----------------------------------------------

bool criterion_od_pipeline(std::ostream& log) {
    // (a) 10 randomized cloud/beam configurations vs a 2048^2 Riemann oracle
    SplitMix64 rng(20260810);
    double worst = 0;
    for (int k = 0; k < 10; ++k) {
        const bool symmetric = k % 2 == 0;
        const double wx = kTwoPi * rng.uniform(60.0, 280.0);
        const double wy = symmetric ? wx : kTwoPi * rng.uniform(60.0, 280.0);
        const double wz = kTwoPi * rng.uniform(60.0, 280.0);
        const TrapConfig trap{wx, wy, wz};
        const double n = rng.uniform(2e4, 2e5);
        const double t = rng.uniform(150e-9, 1.2e-6);
        const double f_bec = rng.uniform(0.0, 0.9);
        const CloudState cloud(n, t, f_bec, trap, kRb);
        const double rp = rng.uniform(2e-6, 60e-6);
        const BeamProfile beam{rp, rp};

        const double d = effective_od(beam, cloud, Line::d1);
        const double hx = std::max(3.0 * rp, cloud.extent(0));
        const double hy = std::max(3.0 * rp, cloud.extent(1));
        // oracle columns: product Gaussian + general Thomas-Fermi line integral
        auto column = [&](double x, double y) {
            double col = 0;
            if (cloud.n_thermal() > 0) {
                const double sx = cloud.sigma_thermal(0), sy = cloud.sigma_thermal(1);
                col += cloud.n_thermal() / (kTwoPi * sx * sy) *
                       std::exp(-x * x / (2 * sx * sx) - y * y / (2 * sy * sy));
            }
            if (cloud.n_bec() > 0) {
                const double rx = cloud.tf_radius(0), ry = cloud.tf_radius(1);
                const double u = 1.0 - x * x / (rx * rx) - y * y / (ry * ry);
                if (u > 0)
                    col += cloud.peak_condensate_density() * 4.0 * cloud.tf_radius(2) / 3.0 * u *
                           std::sqrt(u);
            }
            return col;
        };
        const double oracle = oracles::riemann_effective_od(
            beam.r_px, beam.r_py, column, resonant_cross_section(kRb, Line::d1), hx, hy, 2048);
        worst = std::max(worst, std::abs(d - oracle) / oracle);
    }
    const bool riemann_ok = worst <= 1e-4;

    // (b) pencil-beam limit
    const TrapConfig trap{kTwoPi * 166.0, kTwoPi * 166.0, kTwoPi * 166.0};
    const CloudState bec(1e5, 280e-9, 0.8, trap, kRb);
    const double r_small = bec.tf_radius(0) / 100.0;
    const double d_pencil = effective_od(BeamProfile{r_small, r_small}, bec, Line::d1);
    const double d0 = peak_od(bec, Line::d1);
    const bool pencil_ok = std::abs(d_pencil - d0) / d0 <= 0.01;

    // (c) nearly-pure-BEC working point: N ~ 1e5, 2 R_TF ~ 10 um, D1, R_p = 1 um
    const double d_bec = effective_od(BeamProfile{1e-6, 1e-6}, bec, Line::d1);
    const bool range_ok = d_bec >= 100.0 && d_bec <= 500.0 &&
                          within(2.0 * bec.tf_radius(0), 10e-6, 0.05);

    log << "max |d - oracle|/d = " << worst << " (<= 1e-4), pencil |d-d0|/d0 = "
        << std::abs(d_pencil - d0) / d0 << " (<= 0.01), d(R_p=1um) = " << d_bec
        << " (in [100, 500])";
    return riemann_ok && pencil_ok && range_ok;
}

// ---- 7. estimator consistency -------------------------------------------------

bool criterion_estimators(std::ostream& log) {
    // efficiency round trip at eta = 0.30, N_A = 3e5
    MeasurementPlan plan;
    plan.n_r = 1000;
    plan.n_cyc = 300;
    plan.n_bar_in = 1.0;
    plan.p_n = 6.6e-5;
    const double capture = oracles::window_capture(20e-9, plan.window.length());

    const CountHistogram signal = simulate_histogram(0.30, plan, 20e-9, 811);
    const CountHistogram noise = simulate_histogram(0.0, plan, 20e-9, 812);
    const double p_s = signal.probability_in(plan.window);
    const double p_n = noise.probability_in(plan.window);
    const double n_events = static_cast<double>(plan.n_events());
    const EfficiencyEstimate eta = estimate_efficiency(p_s, p_n, 1.0);
    const double sigma_eta = std::sqrt(p_s * (1 - p_s) + p_n * (1 - p_n)) / std::sqrt(n_events);
    const bool eta_ok = std::abs(eta.raw - 0.30 * capture) <= 3.0 * sigma_eta;

    // SNR round trip at SNR = 42 (n_bar = 0.22, eta = 0.30)
    MeasurementPlan snr_plan = plan;
    snr_plan.n_bar_in = 0.22;
    snr_plan.p_n = 0.30 * 0.22 / 42.0;
    const CountHistogram s_run = simulate_histogram(0.30, snr_plan, 20e-9, 813);
    const CountHistogram n_run = simulate_histogram(0.0, snr_plan, 20e-9, 814);
    const double ps2 = s_run.probability_in(snr_plan.window);
    const double pn2 = n_run.probability_in(snr_plan.window);
    const SnrEstimate snr = estimate_snr(ps2, pn2);
    const double expected_snr = 42.0 * capture;
    // delta-method propagation of the binomial errors through (p_s - p_n)/p_n
    const double var_ps = ps2 * (1 - ps2) / n_events;
    const double var_pn = pn2 * (1 - pn2) / n_events;
    const double sigma_snr =
        std::sqrt(var_ps / (pn2 * pn2) + var_pn * ps2 * ps2 / (pn2 * pn2 * pn2 * pn2));
    const bool snr_ok = std::abs(snr.snr - expected_snr) <= 3.0 * sigma_snr;

    log << "eta_hat = " << eta.raw << " vs " << 0.30 * capture << " +- " << 3.0 * sigma_eta
        << "; snr_hat = " << snr.snr << " vs " << expected_snr << " +- " << 3.0 * sigma_snr;
    return eta_ok && snr_ok;
}

// ---- 8. fit recovery ----------------------------------------------------------

bool criterion_fit_recovery(std::ostream& log) {
    const double tau_true = 7e-6, tau_th = 13.290156776701787e-6, t_s0 = 2e-6;
    std::vector<std::pair<double, double>> clean;
    for (int i = 0; i < 17; ++i) {
        const double t = t_s0 + (10e-6 - t_s0) * i / 16.0;
        clean.emplace_back(t, 0.3 * fit_decay_shape(t - t_s0, 0.15, tau_true, tau_th));
    }
    const TauMagFit noiseless = fit_tau_mag(clean, {0.15, tau_th, t_s0});
    const bool noiseless_ok = within(noiseless.tau_mag, tau_true, 1e-3);

    double sum = 0;
    for (int seed = 0; seed < 100; ++seed) {
        SplitMix64 rng(5000 + static_cast<std::uint64_t>(seed));
        auto noisy = clean;
        for (auto& [t, y] : noisy) y *= 1.0 + 0.05 * rng.gaussian();
        sum += fit_tau_mag(noisy, {0.15, tau_th, t_s0}).tau_mag;
    }
    const double mean = sum / 100.0;
    const bool noisy_ok = within(mean, tau_true, 0.05);

    log << "noiseless rel err = " << std::abs(noiseless.tau_mag - tau_true) / tau_true
        << " (<= 1e-3), 100-seed mean = " << mean * 1e6 << " us (7.0 +- 5%)";
    return noiseless_ok && noisy_ok;
}

// ---- 9. property suites --------------------------------------------------------

bool criterion_properties(std::ostream& log) {
    SplitMix64 rng(424242);
    int failures = 0;
    const int draws = 1000;

    // memory: bounds, monotonicity, forward optimum
    for (int i = 0; i < draws; ++i) {
        const double f = rng.uniform(0.05, 50.0);
        const double d = rng.uniform(0.0, 400.0);
        const double ef = eta_forward(d, f);
        const double eb = eta_backward(d, f);
        if (!(ef >= 0 && ef <= 1 && eb >= 0 && eb <= 1)) ++failures;
        if (!(eta_backward(d + 1.0, f) > eb)) ++failures;
        const double d_star = 4.0 * f;
        if (!(eta_forward(d_star, f) >= eta_forward(0.9 * d_star, f) &&
              eta_forward(d_star, f) >= eta_forward(1.1 * d_star, f)))
            ++failures;
    }

    // decoherence: decay models non-increasing, lifetime between pure bounds
    for (int i = 0; i < draws; ++i) {
        DecoherenceParams p;
        p.theta = rng.uniform(0.01, kPi);
        p.lambda = kRb.lambda_probe(Line::d2);
        p.temperature = rng.uniform(100e-9, 10e-6);
        p.f_bec = rng.uniform(0.0, 1.0);
        p.tau_mag = rng.uniform(1e-6, 50e-6);
        p.mass = kRb.mass;
        const double horizon = 80e-6;
        double prev = kInf;
        bool monotone = true;
        for (int k = 0; k <= 50; ++k) {
            const double v = decay_fit_model(horizon * k / 50.0, 1.0, 0.0, p);
            monotone = monotone && v <= prev * (1.0 + 1e-14);
            prev = v;
        }
        if (!monotone) ++failures;

        DecoherenceParams thermal = p;
        thermal.f_bec = 0.0;
        DecoherenceParams bec = p;
        bec.f_bec = 1.0;
        const double mid = memory_lifetime(p, DecayModel::fit);
        const double lo = memory_lifetime(thermal, DecayModel::fit);
        const double hi = memory_lifetime(bec, DecayModel::fit);
        if (!(mid >= std::min(lo, hi) * (1 - 1e-9) && mid <= std::max(lo, hi) * (1 + 1e-9)))
            ++failures;
    }

    // fwm: monotone mismatch and noise strength
    for (int i = 0; i < draws; ++i) {
        const double lambda = rng.uniform(400e-9, 1600e-9);
        const double length = rng.uniform(1e-6, 1e-3);
        const double theta = rng.uniform(0.0, kPi - 0.01);
        const double d_theta = rng.uniform(1e-4, 0.01);
        if (!(phase_mismatch({theta + d_theta, lambda, length}) >
              phase_mismatch({theta, lambda, length})))
            ++failures;
        const double om = rng.uniform(1e7, 1e10);
        const double d = rng.uniform(0.1, 2000.0);
        if (!(noise_strength(om * 1.01, d, kRb) > noise_strength(om, d, kRb))) ++failures;
        if (!(noise_strength(om, d * 1.01, kRb) > noise_strength(om, d, kRb))) ++failures;
    }

    // zeeman: periodicity and visibility scale invariance
    for (int i = 0; i < draws; ++i) {
        SpinWaveAmplitudes q{rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0),
                             rng.uniform(0.0, 2.0)};
        if (q.q0 + q.q1 + q.q2 == 0) q.q1 = 1.0;
        const double omega = rng.uniform(1e5, 1e8);
        const double t = rng.uniform(0.0, 5e-6);
        const double period = kTwoPi / omega;
        if (!within(retrieved_intensity(t + period, q, omega),
                    retrieved_intensity(t, q, omega) + 1e-30, 1e-6))
            ++failures;
        const IntensityExtrema ext = intensity_extrema(q);
        if (ext.i_max > 0) {
            const double scale = rng.uniform(0.1, 10.0);
            if (!within(visibility(scale * ext.i_max, scale * ext.i_min),
                        visibility(ext.i_max, ext.i_min) + 1e-30, 1e-12))
                ++failures;
        }
    }

    // cloud: non-negative densities, normalization bookkeeping
    for (int i = 0; i < draws; ++i) {
        const TrapConfig trap{kTwoPi * rng.uniform(50.0, 400.0),
                              kTwoPi * rng.uniform(50.0, 400.0),
                              kTwoPi * rng.uniform(50.0, 400.0)};
        const CloudState cloud(rng.uniform(1e3, 5e5), rng.uniform(50e-9, 5e-6),
                               rng.uniform(0.0, 1.0), trap, kRb);
        const Vec3 r = {rng.uniform(-1e-5, 1e-5), rng.uniform(-1e-5, 1e-5),
                        rng.uniform(-1e-5, 1e-5)};
        if (!(cloud.total_density(r) >= 0)) ++failures;
        if (cloud.n_bec() > 0) {
            const double tf_integral = 8.0 * kPi / 15.0 * cloud.peak_condensate_density() *
                                       cloud.tf_radius(0) * cloud.tf_radius(1) *
                                       cloud.tf_radius(2);
            if (!within(tf_integral, cloud.n_bec(), 1e-9)) ++failures;
        }
    }

    // optics: 0 <= effective od <= peak od, monotone in beam diameter
    const TrapConfig trap{kTwoPi * 166.0, kTwoPi * 166.0, kTwoPi * 120.0};
    for (int i = 0; i < draws; ++i) {
        const CloudState cloud(rng.uniform(1e4, 2e5), rng.uniform(150e-9, 2e-6),
                               rng.uniform(0.0, 0.9), trap, kRb);
        const double rp = rng.uniform(1e-6, 60e-6);
        const double d1 = effective_od(BeamProfile{rp, rp}, cloud, Line::d1, 1e-6);
        const double d2 = effective_od(BeamProfile{1.3 * rp, 1.3 * rp}, cloud, Line::d1, 1e-6);
        const double d0 = peak_od(cloud, Line::d1);
        if (!(d1 >= 0 && d1 <= d0 * (1 + 1e-6))) ++failures;
        if (!(d2 <= d1 * (1 + 1e-6))) ++failures;
    }

    // counting: determinism and estimator scale invariance
    for (int i = 0; i < 200; ++i) {
        MeasurementPlan plan;
        plan.n_r = 100;
        plan.n_cyc = 10;
        plan.n_bar_in = rng.uniform(0.1, 1.0);
        const double eta = rng.uniform(0.0, 0.9);
        const std::uint64_t seed = rng();
        const CountHistogram a = simulate_histogram(eta, plan, 20e-9, seed);
        const CountHistogram b = simulate_histogram(eta, plan, 20e-9, seed);
        if (!(a.counts == b.counts)) ++failures;
        const double ps = rng.uniform(1e-4, 1e-2);
        const double pn = rng.uniform(1e-6, 1e-4);
        const double scale = rng.uniform(0.1, 10.0);
        if (!within(estimate_snr(scale * ps, scale * pn).snr, estimate_snr(ps, pn).snr, 1e-12))
            ++failures;
    }

    log << failures << " failures across randomized property draws";
    return failures == 0;
}

}  // namespace

int main() {
    std::vector<Check> checks = {
        {"1. forward-efficiency ceiling", criterion_forward_ceiling},
        {"2. thermal decoherence time", criterion_tau_thermal},
        {"3. lifetime fits", criterion_lifetimes},
        {"4. Zeeman period and visibility", criterion_zeeman},
        {"5a. FWM comparison (half convention, >= 1e3, monotone)", criterion_fwm_half},
        {"5b. FWM comparison (full convention, >= 1e4 at B=40)", criterion_fwm_full},
        {"6. optical-depth pipeline", criterion_od_pipeline},
        {"7. estimator consistency", criterion_estimators},
        {"8. fit recovery", criterion_fit_recovery},
        {"9. property suites", criterion_properties},
    };

    int failures = 0;
    std::cout << std::setprecision(6);
    for (const Check& c : checks) {
        std::ostringstream log;
        log << std::setprecision(6);
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "exception: " << e.what();
        }
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name << "  [" << log.str() << "]\n";
    }
    return failures;
}
