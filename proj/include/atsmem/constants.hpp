#ifndef ATSMEM_CONSTANTS_HPP
#define ATSMEM_CONSTANTS_HPP

namespace atsmem {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// CODATA 2018. Bundled in a struct so every formula in the library pulls its
// constants from one place; hbar is derived from h by construction.
struct PhysicalConstants {
    double h = 6.62607015e-34;              // Planck constant, J s
    double hbar = 6.62607015e-34 / kTwoPi;  // reduced Planck constant, J s
    double k_B = 1.380649e-23;              // Boltzmann constant, J/K
    double mu_B = 9.2740100783e-24;         // Bohr magneton, J/T
};

inline constexpr PhysicalConstants kConst{};

inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
inline constexpr double kBohrRadius = 5.29177210903e-11;      // m

}  // namespace atsmem

#endif  // ATSMEM_CONSTANTS_HPP
