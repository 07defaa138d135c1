#include "atsmem/decoherence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "atsmem/errors.hpp"
#include "atsmem/optim.hpp"

namespace atsmem {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_angle(const DecoherenceParams& p) {
    if (!(p.theta > 0 && p.theta <= kPi))
        throw std::domain_error("decoherence: theta must be in (0, pi]");
}

// Gaussian decay factor that tolerates tau = infinity.
double gauss_decay(double t, double tau) {
    if (std::isinf(tau)) return 1.0;
    const double u = t / tau;
    return std::exp(-u * u);
}

double exp_decay(double t, double tau) { return std::isinf(tau) ? 1.0 : std::exp(-t / tau); }

struct FitScales {
    double tau_mag, tau_th;
};

FitScales resolve_fit(const DecoherenceParams& p) {
    if (!p.tau_mag) throw ConfigError("decoherence: tau_mag required for the fit decay model");
    double tau_th = kInf;
    if (p.f_bec < 1.0) {
        check_angle(p);
        tau_th = tau_thermal(p);
    }
    return {*p.tau_mag, tau_th};
}

struct PredictScales {
    double tau_col, tau_rec, tau_th;
};

PredictScales resolve_predict(const DecoherenceParams& p) {
    double tau_col = kInf, tau_rec = kInf, tau_th = kInf;
    if (p.f_bec > 0) {
        if (!p.im_a_sc || !(p.rho_b > 0))
            throw ConfigError(
                "decoherence: im_a_sc and rho_b required for collisional decay (f_bec > 0)");
        tau_col = tau_collision(p);
        tau_rec = tau_recoil(p);
    }
    if (p.f_bec < 1.0) {
        check_angle(p);
        tau_th = tau_thermal(p);
    }
    return {tau_col, tau_rec, tau_th};
}

// 1/e time of a strictly-decreasing normalized shape, or +inf if the shape
// never drops below 1/e (its long-time floor is checked first).
template <class Shape>
double one_over_e_time(Shape&& shape, double floor) {
    constexpr double target = 0.36787944117144233;  // 1/e
    if (floor >= target) return kInf;
    double hi = 1e-12;
    while (shape(hi) > target) {
        hi *= 2.0;
        if (hi > 1e18) return kInf;
    }
    if (hi == 1e-12) return 0.0;
    const double lo = hi / 2.0;
    return bisect_root([&](double t) { return shape(t) - target; }, lo, hi, 1e-9);
}

}  // namespace

double tau_thermal(const DecoherenceParams& p) {
    check_angle(p);
    if (!(p.temperature > 0))
        throw std::domain_error("tau_thermal: temperature must be positive");
    if (!(p.lambda > 0 && p.mass > 0))
        throw std::domain_error("tau_thermal: lambda and mass must be positive");
    return p.lambda / (4.0 * kPi * std::sin(p.theta / 2.0)) *
           std::sqrt(p.mass / (kConst.k_B * p.temperature));
}

double tau_recoil(const DecoherenceParams& p) {
    check_angle(p);
    if (!(p.r_p > 0)) throw std::domain_error("tau_recoil: r_p must be positive");
    return p.r_p * p.lambda * p.mass / (2.0 * kConst.h * std::sin(p.theta / 2.0));
}

double tau_collision(const DecoherenceParams& p) {
    if (!p.im_a_sc) throw ConfigError("tau_collision: im_a_sc not configured");
    if (!(*p.im_a_sc > 0 && p.rho_b > 0))
        throw std::domain_error("tau_collision: im_a_sc and rho_b must be positive");
    return p.mass / (4.0 * kConst.h * (*p.im_a_sc) * p.rho_b);
}

double fit_decay_shape(double dt, double f_bec, double tau_mag, double tau_th) {
    return exp_decay(dt, tau_mag) * (f_bec + (1.0 - f_bec) * gauss_decay(dt, tau_th));
}

double predict_decay_shape(double t, double f_bec, double tau_col, double tau_rec,
                           double tau_th) {
    return f_bec * exp_decay(t, tau_col) * gauss_decay(t, tau_rec) +
           (1.0 - f_bec) * gauss_decay(t, tau_th);
}

double decay_fit_model(double t, double eta0, double t0, const DecoherenceParams& p) {
    if (t < t0) throw std::domain_error("decay_fit_model: t must be >= t0");
    const FitScales s = resolve_fit(p);
    return eta0 * fit_decay_shape(t - t0, p.f_bec, s.tau_mag, s.tau_th);
}

double decay_predict_model(double t, double eta0, const DecoherenceParams& p) {
    if (t < 0) throw std::domain_error("decay_predict_model: t must be non-negative");
    const PredictScales s = resolve_predict(p);
    return eta0 * predict_decay_shape(t, p.f_bec, s.tau_col, s.tau_rec, s.tau_th);
}

double memory_lifetime(const DecoherenceParams& p, DecayModel model) {
    if (model == DecayModel::fit) {
        const FitScales s = resolve_fit(p);
        // long-time floor: the BEC term survives if tau_mag is infinite
        double floor = 0.0;
        if (std::isinf(s.tau_mag)) floor = p.f_bec + (std::isinf(s.tau_th) ? 1.0 - p.f_bec : 0.0);
        const double dt = one_over_e_time(
            [&](double t) { return fit_decay_shape(t, p.f_bec, s.tau_mag, s.tau_th); }, floor);
        return std::isinf(dt) ? dt : p.t_s0 + dt;
    }
    const PredictScales s = resolve_predict(p);
    double floor = 0.0;
    if (std::isinf(s.tau_col) && std::isinf(s.tau_rec)) floor += p.f_bec;
    if (std::isinf(s.tau_th)) floor += 1.0 - p.f_bec;
    return one_over_e_time(
        [&](double t) { return predict_decay_shape(t, p.f_bec, s.tau_col, s.tau_rec, s.tau_th); },
        floor);
}

}  // namespace atsmem
