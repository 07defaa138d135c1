#include "atsmem/species.hpp"

#include <cmath>
#include <stdexcept>

namespace atsmem {

void AtomSpecies::validate() const {
    if (!(mass > 0)) throw std::domain_error("species: mass must be positive");
    if (!(gamma_eg > 0)) throw std::domain_error("species: gamma_eg must be positive");
    if (std::abs(Gamma_eg - 2.0 * gamma_eg) > 1e-9 * Gamma_eg)
        throw std::domain_error("species: Gamma_eg must equal 2*gamma_eg");
    if (!(delta_gs > 0)) throw std::domain_error("species: delta_gs must be positive");
    for (const TransitionLine* l : {&d1, &d2}) {
        if (!(l->lambda > 0)) throw std::domain_error("species: line wavelength must be positive");
        if (!(l->alpha_sq > 0) || !(l->degeneracy > 0))
            throw std::domain_error("species: line strength factors must be positive");
    }
    if (im_a_sc && !(*im_a_sc > 0))
        throw std::domain_error("species: im_a_sc must be positive when given");
}

AtomSpecies rb87() {
    AtomSpecies s;
    s.mass = 86.909180527 * kAtomicMassUnit;

    // D1: J = J' = 1/2, strongest transition |1,1> -> |2',2> has alpha^2 = 1/2.
    s.d1 = TransitionLine{794.98e-9, 0.5, 1.0};
    // D2: J = 1/2, J' = 3/2.
    s.d2 = TransitionLine{780.24e-9, 0.5, 2.0};

    // Optical coherence lifetime 54 ns: gamma_eg = 2 pi * 2.947 MHz.
    s.gamma_eg = 1.0 / 54e-9;
    s.Gamma_eg = 2.0 * s.gamma_eg;

    s.delta_gs = kTwoPi * 6.83e9;
    s.zeta = 1.33;

    s.a_sc = 100.4 * kBohrRadius;
    // im_a_sc is left unset: no published value, must come from config.

    s.g_f1 = -0.5;
    s.g_f2 = 0.5;
    return s;
}

}  // namespace atsmem
