#include "atsmem/memory.hpp"

#include <cmath>
#include <stdexcept>

namespace atsmem {

double bandwidth_from_duration(double tau_p) {
    if (!(tau_p > 0)) throw std::domain_error("bandwidth_from_duration: tau_p must be positive");
    return 0.44 / tau_p;
}

double duration_from_bandwidth(double bandwidth) {
    if (!(bandwidth > 0))
        throw std::domain_error("duration_from_bandwidth: bandwidth must be positive");
    return 0.44 / bandwidth;
}

MemoryConfig MemoryConfig::with_bandwidth(Protocol p, Recall r, Line line, double bandwidth_hz) {
    if (!(bandwidth_hz > 0)) throw std::domain_error("memory: bandwidth must be positive");
    return MemoryConfig{p, r, line, bandwidth_hz, 0.0};
}

MemoryConfig MemoryConfig::with_duration(Protocol p, Recall r, Line line, double tau_p_s) {
    return MemoryConfig{p, r, line, bandwidth_from_duration(tau_p_s), 0.0};
}

double ats_factor(double bandwidth_hz, const AtomSpecies& species) {
    if (!(bandwidth_hz > 0)) throw std::domain_error("ats_factor: bandwidth must be positive");
    return kTwoPi * bandwidth_hz / species.Gamma_eg;
}

double eta_forward(double d, double ats_factor) {
    if (d < 0) throw std::domain_error("eta_forward: d must be non-negative");
    if (!(ats_factor > 0)) throw std::domain_error("eta_forward: ATS factor must be positive");
    const double u = d / (2.0 * ats_factor);
    return u * u * std::exp(-u) * std::exp(-1.0 / ats_factor);
}

double eta_backward(double d, double ats_factor) {
    if (d < 0) throw std::domain_error("eta_backward: d must be non-negative");
    if (!(ats_factor > 0)) throw std::domain_error("eta_backward: ATS factor must be positive");
    const double a = 1.0 - std::exp(-d / (2.0 * ats_factor));
    return a * a * std::exp(-1.0 / ats_factor);
}

double optimal_od(double ats_factor, Recall recall) {
    if (!(ats_factor > 0)) throw std::domain_error("optimal_od: ATS factor must be positive");
    return recall == Recall::forward ? 4.0 * ats_factor : 8.0 * ats_factor;
}

ResourceRequirement required_resources(Protocol protocol, double bandwidth_hz,
                                       const AtomSpecies& species) {
    const double f = ats_factor(bandwidth_hz, species);
    const bool broadband = f >= 10.0;
    if (protocol == Protocol::ats) return {8.0 * f, 1.5 * kTwoPi * bandwidth_hz, broadband};
    return {50.0 * f, 4.0 * kTwoPi * bandwidth_hz, broadband};
}

}  // namespace atsmem
