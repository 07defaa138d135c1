#include "atsmem/cloud.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "atsmem/quadrature.hpp"

namespace atsmem {

double TrapConfig::omega_ho() const { return std::cbrt(omega_x * omega_y * omega_z); }

bool TrapConfig::symmetric_xy() const {
    return std::abs(omega_x - omega_y) <= 1e-12 * std::max(omega_x, omega_y);
}

void TrapConfig::validate() const {
    if (!(omega_x > 0 && omega_y > 0 && omega_z > 0))
        throw std::domain_error("trap: all frequencies must be strictly positive");
}

double interaction_parameter(const AtomSpecies& species) {
    return 4.0 * kPi * kConst.hbar * kConst.hbar * species.a_sc / species.mass;
}

double chemical_potential(double n_bec, const TrapConfig& trap, const AtomSpecies& species) {
    if (!(n_bec > 0)) throw std::domain_error("chemical_potential: n_bec must be positive");
    trap.validate();
    const double g = interaction_parameter(species);
    const double wbar3 = trap.omega_x * trap.omega_y * trap.omega_z;
    const double m = species.mass;
    // N = (8 pi / 15) (mu/g) (2 mu / m)^{3/2} / (wx wy wz)  =>  mu^{5/2}
    const double mu52 = 15.0 * n_bec * g * wbar3 * std::pow(m / 2.0, 1.5) / (8.0 * kPi);
    return std::pow(mu52, 0.4);
}

std::array<double, 3> thomas_fermi_radii(double mu, const TrapConfig& trap,
                                         const AtomSpecies& species) {
    std::array<double, 3> r{};
    for (int i = 0; i < 3; ++i) r[i] = std::sqrt(2.0 * mu / species.mass) / trap.omega(i);
    return r;
}

std::array<double, 3> castin_dum_factors(const TrapConfig& trap, double t) {
    trap.validate();
    if (t < 0) throw std::domain_error("castin_dum_factors: t must be non-negative");
    if (t == 0) return {1.0, 1.0, 1.0};

    const std::array<double, 3> w2 = {trap.omega_x * trap.omega_x, trap.omega_y * trap.omega_y,
                                      trap.omega_z * trap.omega_z};
    // y = (b, b') with b_i'' = w_i^2 / (b_i * bx by bz); RK4, ~300 steps per
    // radian of the fastest trap phase (the dynamics freeze once w t >> 1).
    const double wmax = std::max({trap.omega_x, trap.omega_y, trap.omega_z});
    const double steps = std::clamp(std::ceil(300.0 * (wmax * t + 1.0)), 1000.0, 5e6);
    const int n = static_cast<int>(steps);
    const double h = t / n;

    std::array<double, 6> y = {1, 1, 1, 0, 0, 0};
    auto deriv = [&w2](const std::array<double, 6>& s) {
        const double vol = s[0] * s[1] * s[2];
        std::array<double, 6> d;
        for (int i = 0; i < 3; ++i) {
            d[i] = s[3 + i];
            d[3 + i] = w2[i] / (s[i] * vol);
        }
        return d;
    };
    for (int k = 0; k < n; ++k) {
        const auto k1 = deriv(y);
        std::array<double, 6> tmp;
        for (int i = 0; i < 6; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        const auto k2 = deriv(tmp);
        for (int i = 0; i < 6; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        const auto k3 = deriv(tmp);
        for (int i = 0; i < 6; ++i) tmp[i] = y[i] + h * k3[i];
        const auto k4 = deriv(tmp);
        for (int i = 0; i < 6; ++i) y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    return {y[0], y[1], y[2]};
}

double condensate_fraction_from_temperature(double temperature, double t_c) {
    if (!(temperature > 0 && t_c > 0))
        throw std::domain_error("condensate_fraction_from_temperature: T and T_c must be positive");
    const double ratio = temperature / t_c;
    return std::clamp(1.0 - ratio * ratio * ratio, 0.0, 1.0);
}

CloudState::CloudState(double n_total, double temperature, double f_bec, const TrapConfig& trap,
                       const AtomSpecies& species)
    : n_total_(n_total),
      temperature_(temperature),
      f_bec_(f_bec),
      trap_(trap),
      species_(species) {
    trap_.validate();
    species_.validate();
    if (!(n_total >= 0)) throw std::domain_error("cloud: n_total must be non-negative");
    if (!(f_bec >= 0 && f_bec <= 1)) throw std::domain_error("cloud: f_bec must be in [0,1]");
    n_bec_ = n_total * f_bec;
    n_thermal_ = n_total - n_bec_;
    if (n_thermal_ > 0 && !(temperature > 0))
        throw std::domain_error("cloud: temperature must be positive when thermal atoms present");
    if (temperature < 0) throw std::domain_error("cloud: temperature must be non-negative");

    const double m = species_.mass;
    if (temperature > 0)
        for (int i = 0; i < 3; ++i)
            sigma_[i] = std::sqrt(kConst.k_B * temperature / m) / trap_.omega(i);
    if (n_bec_ > 0) {
        mu_ = atsmem::chemical_potential(n_bec_, trap_, species_);
        peak_bec_ = mu_ / interaction_parameter(species_);
        r_tf_ = thomas_fermi_radii(mu_, trap_, species_);
    }
    symmetric_xy_ = trap_.symmetric_xy();
}

CloudState CloudState::expand(double t) const {
    if (t < 0) throw std::domain_error("expand: t must be non-negative");
    if (tof_ != 0)
        throw std::logic_error("expand: cloud already expanded; widths do not compose across releases");
    CloudState out = *this;
    if (t == 0) return out;
    out.tof_ = t;
    const double m = species_.mass;
    if (temperature_ > 0) {
        const double vth2 = kConst.k_B * temperature_ / m;
        for (int i = 0; i < 3; ++i)
            out.sigma_[i] = std::sqrt(sigma_[i] * sigma_[i] + vth2 * t * t);
    }
    if (n_bec_ > 0) {
        const auto b = castin_dum_factors(trap_, t);
        for (int i = 0; i < 3; ++i) out.r_tf_[i] = r_tf_[i] * b[i];
        out.peak_bec_ = peak_bec_ / (b[0] * b[1] * b[2]);
    }
    return out;
}

double CloudState::thermal_density(const Vec3& r) const {
    if (n_thermal_ <= 0) return 0.0;
    double exponent = 0, norm = n_thermal_;
    for (int i = 0; i < 3; ++i) {
        exponent += r[i] * r[i] / (2.0 * sigma_[i] * sigma_[i]);
        norm /= std::sqrt(kTwoPi) * sigma_[i];
    }
    return norm * std::exp(-exponent);
}

double CloudState::condensate_density(const Vec3& r) const {
    if (n_bec_ <= 0) return 0.0;
    double u = 1.0;
    for (int i = 0; i < 3; ++i) u -= r[i] * r[i] / (r_tf_[i] * r_tf_[i]);
    return u > 0 ? peak_bec_ * u : 0.0;
}

double CloudState::total_density(const Vec3& r) const {
    return thermal_density(r) + condensate_density(r);
}

double CloudState::thermal_column(double x, double y) const {
    if (n_thermal_ <= 0) return 0.0;
    const double ex = x * x / (2.0 * sigma_[0] * sigma_[0]) + y * y / (2.0 * sigma_[1] * sigma_[1]);
    return n_thermal_ / (kTwoPi * sigma_[0] * sigma_[1]) * std::exp(-ex);
}

double CloudState::condensate_column(double x, double y) const {
    if (n_bec_ <= 0) return 0.0;
    const double u = 1.0 - x * x / (r_tf_[0] * r_tf_[0]) - y * y / (r_tf_[1] * r_tf_[1]);
    if (u <= 0) return 0.0;
    return peak_bec_ * (4.0 * r_tf_[2] / 3.0) * u * std::sqrt(u);
}

double CloudState::column_density(double x, double y) const {
    if (symmetric_xy_) return thermal_column(x, y) + condensate_column(x, y);
    return column_density_numeric(x, y);
}

double CloudState::column_density_numeric(double x, double y) const {
    const double hz = extent(2);
    if (hz <= 0) return 0.0;
    return integrate_1d([&](double z) { return total_density({x, y, z}); }, -hz, hz, 1e-9);
}

double CloudState::extent(int axis) const {
    return std::max(r_tf_[axis], 8.0 * sigma_[axis]);
}

}  // namespace atsmem
