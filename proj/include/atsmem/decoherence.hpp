#ifndef ATSMEM_DECOHERENCE_HPP
#define ATSMEM_DECOHERENCE_HPP

#include <optional>

#include "atsmem/species.hpp"

namespace atsmem {

// Physical inputs for the spin-wave decoherence timescales. The spin-wave
// period is lambda/(2 sin(theta/2)), taking |k_p| = |k_c|.
struct DecoherenceParams {
    double theta = 0;        // probe-control separation angle, rad, (0, pi]
    double lambda = 0;       // optical wavelength, m
    double temperature = 0;  // K
    double f_bec = 0;        // condensate fraction
    std::optional<double> tau_mag;  // magnetic dephasing constant, s
    double r_p = 0;          // probe 1/e^2 diameter, m (recoil decoherence)
    double rho_b = 0;        // peak condensate density, m^-3 (collisions)
    std::optional<double> im_a_sc;  // m
    double mass = 0;         // kg
    double t_s0 = 0;         // s, shortest measured storage time (fit-model anchor)
};

// Thermal spin-wave decoherence time lambda/(4 pi sin(theta/2)) sqrt(m/kB T).
double tau_thermal(const DecoherenceParams& p);

// Recoil-motion decoherence time R_p lambda m / (2 h sin(theta/2)).
double tau_recoil(const DecoherenceParams& p);

// Inelastic two-body collision decay time m / (4 h Im(a_sc) rho_B).
double tau_collision(const DecoherenceParams& p);

// Observed-decay fit form (exponential magnetic dephasing times the bimodal
// thermal term), anchored at the shortest measured storage time t0:
// eta(t) = eta0 e^{-(t-t0)/tau_mag} [F_BEC + (1-F_BEC) e^{-(t-t0)^2/tau_th^2}].
double decay_fit_model(double t, double eta0, double t0, const DecoherenceParams& p);

// Predictive decay: collisional + recoil loss for the condensate part,
// thermal Gaussian for the rest;
// eta(t) = eta0 [F_BEC e^{-t/tau_col} e^{-t^2/tau_rec^2} + (1-F_BEC) e^{-t^2/tau_th^2}].
double decay_predict_model(double t, double eta0, const DecoherenceParams& p);

enum class DecayModel { fit, predict };

// Normalized decay envelopes with explicit timescales (an infinite tau
// disables that channel). Used by the models above and directly by fitting.
double fit_decay_shape(double dt, double f_bec, double tau_mag, double tau_th);
double predict_decay_shape(double t, double f_bec, double tau_col, double tau_rec, double tau_th);

// Storage time at which the chosen decay model reaches 1/e of its anchor
// value (absolute time; the fit model anchors at p.t_s0). The models are
// strictly decreasing, so the 1/e time is unique; found by exponential
// bracketing plus bisection to relative 1e-9. Returns +infinity when the
// model never decays below 1/e ("no decay" sentinel).
double memory_lifetime(const DecoherenceParams& p, DecayModel model);

}  // namespace atsmem

#endif  // ATSMEM_DECOHERENCE_HPP
