#ifndef ATSMEM_SPECIES_HPP
#define ATSMEM_SPECIES_HPP

#include <optional>

#include "atsmem/constants.hpp"

namespace atsmem {

enum class Line { d1, d2 };

// One optical line: resonant wavelength plus the strength factors entering
// the resonant cross section (3 lambda^2 / 2 pi) * alpha_sq * degeneracy.
struct TransitionLine {
    double lambda = 0;      // resonant wavelength, m
    double alpha_sq = 0;    // squared Clebsch-Gordan strength factor
    double degeneracy = 0;  // (2J'+1)/(2J+1)
};

// Atomic parameter bundle. Unit rule: every linewidth and splitting is an
// angular frequency (rad/s). The pulse bandwidth B (Hz) is the single
// ordinary-frequency quantity in the library.
struct AtomSpecies {
    double mass = 0;       // kg
    TransitionLine d1;
    TransitionLine d2;
    double gamma_eg = 0;   // optical-coherence decay rate, rad/s
    double Gamma_eg = 0;   // natural linewidth = 2 gamma_eg, rad/s
    double delta_gs = 0;   // ground hyperfine splitting, rad/s
    double zeta = 0;       // control-to-probe Rabi-frequency ratio
    double a_sc = 0;       // s-wave scattering length, m
    std::optional<double> im_a_sc;  // Im(a_sc) for two-component loss, m; no default
    double g_f1 = 0;       // ground-level Lande factor, F=1
    double g_f2 = 0;       // ground-level Lande factor, F=2

    const TransitionLine& line(Line l) const { return l == Line::d1 ? d1 : d2; }
    double lambda_probe(Line l) const { return line(l).lambda; }

    // Optical coherence lifetime 1/(2 pi (gamma_eg/2pi)) = 1/gamma_eg, s.
    double tau_eg() const { return 1.0 / gamma_eg; }

    // Throws std::domain_error on an inconsistent or incomplete bundle.
    void validate() const;
};

// 87Rb preset (D1 and D2 lines). Printed values follow the experimental
// conventions this library models; mass, D1 wavelength and scattering length
// are standard reference data. All fields may be overridden via config.
AtomSpecies rb87();

}  // namespace atsmem

#endif  // ATSMEM_SPECIES_HPP
