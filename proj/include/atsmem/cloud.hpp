#ifndef ATSMEM_CLOUD_HPP
#define ATSMEM_CLOUD_HPP

#include <array>

#include "atsmem/species.hpp"

namespace atsmem {

using Vec3 = std::array<double, 3>;

struct TrapConfig {
    double omega_x = 0;  // rad/s
    double omega_y = 0;
    double omega_z = 0;

    double omega(int axis) const { return axis == 0 ? omega_x : axis == 1 ? omega_y : omega_z; }
    double omega_ho() const;  // geometric mean
    bool symmetric_xy() const;
    void validate() const;
};

// Chemical potential (J) of a Thomas-Fermi condensate of n_bec atoms, fixed by
// requiring the profile to integrate to n_bec: N = (8 pi/15)(mu/g) Rx Ry Rz.
double chemical_potential(double n_bec, const TrapConfig& trap, const AtomSpecies& species);

// Thomas-Fermi radii R_i = sqrt(2 mu / (m omega_i^2)), m.
std::array<double, 3> thomas_fermi_radii(double mu, const TrapConfig& trap,
                                         const AtomSpecies& species);

// Interaction parameter g = 4 pi hbar^2 a / m, J m^3.
double interaction_parameter(const AtomSpecies& species);

// Castin-Dum scaling factors b_i(t) for free expansion from a harmonic trap:
// b_i'' = omega_i^2 / (b_i * b_x b_y b_z), b_i(0) = 1, b_i'(0) = 0.
std::array<double, 3> castin_dum_factors(const TrapConfig& trap, double t);

// Ideal-gas harmonic-trap condensate fraction max(0, 1 - (T/T_c)^3), clamped
// to [0,1]. Convenience only: an explicit f_bec input always takes precedence.
double condensate_fraction_from_temperature(double temperature, double t_c);

// Bimodal trapped/expanded ensemble: Maxwell-Boltzmann thermal component plus
// Thomas-Fermi condensate. Immutable once constructed; expand() returns a new
// state and is only valid on an in-trap cloud (tof == 0).
class CloudState {
public:
    CloudState(double n_total, double temperature, double f_bec, const TrapConfig& trap,
               const AtomSpecies& species);

    // Free expansion for t seconds: ballistic growth of the thermal widths,
    // Castin-Dum scaling of the condensate. Throws std::logic_error if this
    // cloud was already expanded (widths do not compose across releases).
    CloudState expand(double t) const;

    // Volume densities, m^-3.
    double thermal_density(const Vec3& r) const;
    double condensate_density(const Vec3& r) const;
    double total_density(const Vec3& r) const;

    // Line-integrated (along z) areal densities, m^-2. column_density() uses
    // the closed forms when the trap is x-y symmetric and falls back to
    // numeric line integration otherwise; the forced-numeric path is exposed
    // for cross-checks.
    double column_density(double x, double y) const;
    double column_density_numeric(double x, double y) const;
    double thermal_column(double x, double y) const;
    double condensate_column(double x, double y) const;

    double n_total() const { return n_total_; }
    double n_thermal() const { return n_thermal_; }
    double n_bec() const { return n_bec_; }
    double f_bec() const { return f_bec_; }
    double temperature() const { return temperature_; }
    double tof() const { return tof_; }
    double chemical_potential() const { return mu_; }          // in-trap value, J
    double peak_condensate_density() const { return peak_bec_; }  // current, m^-3
    double tf_radius(int axis) const { return r_tf_[axis]; }
    double sigma_thermal(int axis) const { return sigma_[axis]; }
    const TrapConfig& trap() const { return trap_; }
    const AtomSpecies& species() const { return species_; }

    // Half-width of the support needed to integrate either component along
    // one axis (TF radius, 8 thermal sigma, whichever is larger).
    double extent(int axis) const;

private:
    double n_total_, temperature_, f_bec_;
    double n_thermal_, n_bec_;
    TrapConfig trap_;
    AtomSpecies species_;
    double tof_ = 0;
    double mu_ = 0;        // J, in-trap
    double peak_bec_ = 0;  // m^-3, scaled by expansion
    std::array<double, 3> sigma_{};  // thermal Gaussian widths, m
    std::array<double, 3> r_tf_{};   // TF radii, m
    bool symmetric_xy_ = false;
};

}  // namespace atsmem

#endif  // ATSMEM_CLOUD_HPP
