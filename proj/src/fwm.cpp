#include "atsmem/fwm.hpp"

#include <cmath>
#include <stdexcept>

#include "atsmem/memory.hpp"

namespace atsmem {

void FwmGeometry::validate() const {
    if (!(length > 0)) throw std::domain_error("fwm: medium length must be positive");
    if (!(theta >= 0 && theta <= kPi)) throw std::domain_error("fwm: theta must be in [0, pi]");
    if (!(lambda > 0)) throw std::domain_error("fwm: lambda must be positive");
}

double phase_mismatch(const FwmGeometry& g) {
    g.validate();
    const double s = std::sin(g.theta / 2.0);
    return 8.0 * kPi * g.length / g.lambda * s * s;
}

double threshold_angle(double lambda, double length) {
    if (!(lambda > 0 && length > 0))
        throw std::domain_error("threshold_angle: lambda and length must be positive");
    const double arg = lambda / (8.0 * kPi * length);
    if (arg > 1.0)
        throw std::domain_error("threshold_angle: medium shorter than lambda/(8 pi), no threshold");
    return 2.0 * std::asin(std::sqrt(arg));
}

double noise_strength(double omega_c, double d, const AtomSpecies& species,
                      GammaConvention convention) {
    if (d < 0) throw std::domain_error("noise_strength: d must be non-negative");
    const double gamma =
        convention == GammaConvention::half ? species.gamma_eg : species.Gamma_eg;
    const double s = std::sinh(species.zeta * d * gamma / species.delta_gs);
    const double om2 = omega_c * omega_c;
    return om2 * om2 * s * s;
}

std::vector<NoiseCurveRow> protocol_noise_curve(std::span<const double> bandwidths_hz,
                                                const AtomSpecies& species,
                                                GammaConvention convention) {
    const double linewidth_hz = species.Gamma_eg / kTwoPi;
    const double b_ref = 10.0 * linewidth_hz;  // normalization anchor

    auto strength = [&](Protocol p, double b) {
        const ResourceRequirement r = required_resources(p, b, species);
        return noise_strength(r.omega_c, r.d, species, convention);
    };
    const double s_ats_ref = strength(Protocol::ats, b_ref);
    const double s_eit_ref = strength(Protocol::eit, b_ref);

    std::vector<NoiseCurveRow> rows;
    rows.reserve(bandwidths_hz.size());
    for (double b : bandwidths_hz) {
        const ResourceRequirement ats = required_resources(Protocol::ats, b, species);
        const ResourceRequirement eit = required_resources(Protocol::eit, b, species);
        const double s_ats = noise_strength(ats.omega_c, ats.d, species, convention);
        const double s_eit = noise_strength(eit.omega_c, eit.d, species, convention);
        const double f = ats_factor(b, species);
        rows.push_back({b, f, ats.d, eit.d, ats.omega_c, eit.omega_c, s_ats / s_ats_ref,
                        s_eit / s_eit_ref, s_eit / s_ats, f >= 10.0 && f <= 40.0});
    }
    return rows;
}

}  // namespace atsmem
