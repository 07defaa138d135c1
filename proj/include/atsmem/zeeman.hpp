#ifndef ATSMEM_ZEEMAN_HPP
#define ATSMEM_ZEEMAN_HPP

#include "atsmem/decoherence.hpp"

namespace atsmem {

// Real non-negative probability amplitudes of the three spin-wave classes
// S0, S1, S2 (relative phases are absorbed into the time origin; the weak
// m_F = -1 spin-wave is dropped). Normalization-free: intensity is relative.
struct SpinWaveAmplitudes {
    double q0 = 0;
    double q1 = 0;
    double q2 = 0;
    void validate() const;
};

// Zeeman splitting between adjacent sublevels, g_F mu_B |B| / hbar (rad/s).
double zeeman_splitting(double g_f, double b_field);

// Beat period of the spin-wave interference, T = 2h / (mu_B |B|). Returns
// +infinity at zero field (no oscillation).
double oscillation_period(double b_field);

// Retrieved probe intensity |q0 e^{-i w t} + q1 + q2 e^{i w t}|^2, optionally
// multiplied by the fit-form decoherence envelope (normalized to 1 at t = 0).
double retrieved_intensity(double t, const SpinWaveAmplitudes& q, double omega);
double retrieved_intensity(double t, const SpinWaveAmplitudes& q, double omega,
                           const DecoherenceParams& decay);

// Exact extrema of the undecayed interference curve over one period.
struct IntensityExtrema {
    double i_max;
    double i_min;
};
IntensityExtrema intensity_extrema(const SpinWaveAmplitudes& q);

// Interference contrast (I_max - I_min) / (I_max + I_min).
double visibility(double i_max, double i_min);

}  // namespace atsmem

#endif  // ATSMEM_ZEEMAN_HPP
