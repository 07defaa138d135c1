#ifndef ATSMEM_FWM_HPP
#define ATSMEM_FWM_HPP

#include <span>
#include <vector>

#include "atsmem/species.hpp"

namespace atsmem {

struct FwmGeometry {
    double theta = 0;   // probe-control separation, rad, [0, pi]
    double lambda = 0;  // optical wavelength, m
    double length = 0;  // effective medium length along the probe, m
    void validate() const;
};

// Phase-mismatch figure |dk_FWM| L = (8 pi L / lambda) sin^2(theta/2).
// Values >> 1 mean the mixing process is suppressed.
double phase_mismatch(const FwmGeometry& g);

// Threshold angle 2 arcsin(sqrt(lambda / 8 pi L)) at which the mismatch
// figure crosses 1. Domain error when lambda/(8 pi L) > 1.
double threshold_angle(double lambda, double length);

// Which rate multiplies d in the noise-strength argument. `half` uses the
// optical-coherence decay rate gamma_eg = Gamma_eg/2 (the formula as
// written); `full` substitutes the full linewidth Gamma_eg. The published
// orders-of-magnitude comparison is sensitive to this factor of two, so both
// are first-class options rather than a hidden choice.
enum class GammaConvention { half, full };

// Relative four-wave-mixing noise strength
// S = Omega_c^4 sinh^2(zeta d gamma / delta_gs), proportionality constant 1;
// only ratios and normalized curves are meaningful.
double noise_strength(double omega_c, double d, const AtomSpecies& species,
                      GammaConvention convention = GammaConvention::half);

struct NoiseCurveRow {
    double bandwidth_hz;
    double ats_factor;  // B in units of Gamma_eg / 2 pi
    double d_ats, d_eit;
    double omega_ats, omega_eit;  // rad/s
    double s_ats_norm, s_eit_norm;  // normalized to the protocol value at B = 10 Gamma/2pi
    double ratio;                   // S_EIT / S_ATS at this bandwidth
    bool in_range;                  // B within [10, 40] Gamma_eg / 2 pi
};

// Protocol noise comparison across a bandwidth grid, using the optimal-memory
// resource scalings and normalizing each protocol to its strength at
// B = 10 Gamma_eg / 2 pi.
std::vector<NoiseCurveRow> protocol_noise_curve(std::span<const double> bandwidths_hz,
                                                const AtomSpecies& species,
                                                GammaConvention convention = GammaConvention::half);

}  // namespace atsmem

#endif  // ATSMEM_FWM_HPP
