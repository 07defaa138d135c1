#include "atsmem/zeeman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace atsmem {

void SpinWaveAmplitudes::validate() const {
    if (q0 < 0 || q1 < 0 || q2 < 0)
        throw std::domain_error("zeeman: amplitudes must be non-negative");
    if (!(q0 > 0 || q1 > 0 || q2 > 0))
        throw std::domain_error("zeeman: at least one amplitude must be nonzero");
}

double zeeman_splitting(double g_f, double b_field) {
    if (b_field < 0) throw std::domain_error("zeeman_splitting: b_field must be non-negative");
    return g_f * kConst.mu_B * b_field / kConst.hbar;
}

double oscillation_period(double b_field) {
    if (b_field < 0) throw std::domain_error("oscillation_period: b_field must be non-negative");
    if (b_field == 0) return std::numeric_limits<double>::infinity();
    return 2.0 * kConst.h / (kConst.mu_B * b_field);
}

double retrieved_intensity(double t, const SpinWaveAmplitudes& q, double omega) {
    q.validate();
    if (t < 0) throw std::domain_error("retrieved_intensity: t must be non-negative");
    // |q0 e^{-iwt} + q1 + q2 e^{iwt}|^2 with real amplitudes
    const double c = std::cos(omega * t), s = std::sin(omega * t);
    const double re = q.q1 + (q.q0 + q.q2) * c;
    const double im = (q.q2 - q.q0) * s;
    return re * re + im * im;
}

double retrieved_intensity(double t, const SpinWaveAmplitudes& q, double omega,
                           const DecoherenceParams& decay) {
    return retrieved_intensity(t, q, omega) * decay_fit_model(t, 1.0, 0.0, decay);
}

IntensityExtrema intensity_extrema(const SpinWaveAmplitudes& q) {
    q.validate();
    // In c = cos(w t): I(c) = (S^2 - D^2) c^2 + 2 q1 S c + q1^2 + D^2 with
    // S = q0 + q2, D = q2 - q0. The c^2 coefficient is 4 q0 q2 >= 0, so the
    // maximum sits at an endpoint and an interior minimum exists only when
    // the vertex c* = -q1 S / (4 q0 q2) falls inside [-1, 1].
    const double sum = q.q0 + q.q2;
    const double diff = q.q2 - q.q0;
    const double a = 4.0 * q.q0 * q.q2;
    auto at = [&](double c) {
        return (sum * sum - diff * diff) * c * c + 2.0 * q.q1 * sum * c + q.q1 * q.q1 +
               diff * diff;
    };
    const double i_max = std::max(at(1.0), at(-1.0));
    double i_min = std::min(at(1.0), at(-1.0));
    if (a > 0) {
        const double c_star = -q.q1 * sum / a;  // vertex -B/2A of A c^2 + B c + C
        if (c_star >= -1.0 && c_star <= 1.0) i_min = std::min(i_min, at(c_star));
    }
    return {i_max, std::max(i_min, 0.0)};
}

double visibility(double i_max, double i_min) {
    if (!(i_max >= i_min && i_min >= 0) || !(i_max > 0))
        throw std::domain_error("visibility: need i_max >= i_min >= 0 and i_max > 0");
    return (i_max - i_min) / (i_max + i_min);
}

}  // namespace atsmem
