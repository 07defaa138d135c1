#ifndef ATSMEM_MEMORY_HPP
#define ATSMEM_MEMORY_HPP

#include "atsmem/species.hpp"

namespace atsmem {

enum class Protocol { ats, eit };
enum class Recall { forward, backward };

// B = 0.44 / tau_p for Gaussian pulses (FWHM duration <-> bandwidth in Hz).
double bandwidth_from_duration(double tau_p);
double duration_from_bandwidth(double bandwidth);

// Protocol configuration. Exactly one of (duration, bandwidth) is
// authoritative; construct through the named factories.
struct MemoryConfig {
    Protocol protocol = Protocol::ats;
    Recall recall = Recall::forward;
    Line line = Line::d2;
    double bandwidth = 0;  // Hz
    double d = 0;          // effective optical depth

    static MemoryConfig with_bandwidth(Protocol p, Recall r, Line line, double bandwidth_hz);
    static MemoryConfig with_duration(Protocol p, Recall r, Line line, double tau_p_s);
    double tau_p() const { return duration_from_bandwidth(bandwidth); }
};

// ATS factor F = 2 pi B / Gamma_eg (bandwidth in natural-linewidth units).
double ats_factor(double bandwidth_hz, const AtomSpecies& species);

// Forward-recall ATS efficiency (d/2F)^2 e^{-d/2F} e^{-1/F}.
double eta_forward(double d, double ats_factor);

// Backward-recall ATS efficiency (1 - e^{-d/2F})^2 e^{-1/F}.
double eta_backward(double d, double ats_factor);

// Optical depth at the protocol working point: forward recall returns the
// argmax d = 4F of the forward efficiency; backward returns d = 8F (d/2F = 4).
double optimal_od(double ats_factor, Recall recall);

struct ResourceRequirement {
    double d;        // optical depth
    double omega_c;  // peak control Rabi frequency, rad/s
    bool broadband;  // false when B < 10 Gamma_eg / 2 pi (values still valid)
};

// Resource scalings for an optimal broadband memory:
// ATS: d = 8 (2 pi B/Gamma_eg), Omega = 1.5 (2 pi B);
// EIT: d = 50 (2 pi B/Gamma_eg), Omega = 4 (2 pi B).
ResourceRequirement required_resources(Protocol protocol, double bandwidth_hz,
                                       const AtomSpecies& species);

}  // namespace atsmem

#endif  // ATSMEM_MEMORY_HPP
