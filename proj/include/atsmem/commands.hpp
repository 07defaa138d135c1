#ifndef ATSMEM_COMMANDS_HPP
#define ATSMEM_COMMANDS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "atsmem/fwm.hpp"
#include "atsmem/sweep.hpp"

namespace atsmem {

// Command implementations behind the CLI. Each validates the sections it
// needs, evaluates its grid (in parallel, rows ordered by grid index) and
// returns a Table ready for CSV/JSON emission.

// Optical depth and ATS efficiency over a (temperature, beam-diameter) grid.
Table cmd_predict_od(const Config& config);

// Memory lifetime and component decay times over (temperature, angle).
Table cmd_lifetime(const Config& config);

// FWM noise-strength comparison of optimal ATS vs EIT over bandwidth.
Table cmd_fwm_compare(const Config& config, GammaConvention convention);

// Zeeman interference summary vs magnetic field, or the retrieved-intensity
// trace vs storage time.
Table cmd_zeeman(const Config& config);

// Photon-counting forward simulation: histogram for a single plan, or
// estimator summaries over an n_bar_in sweep (per-point RNG substreams).
Table cmd_simulate_counts(const Config& config, std::uint64_t seed);

// Magnetic-dephasing fit on (t_s, eta) data with fixed (f_bec, tau_th, t_s0).
Table cmd_fit(const Config& config, std::span<const std::pair<double, double>> data);

// Data-file reader for cmd_fit: CSV with a header row and two numeric
// columns (t_s, eta); '#' comment lines are skipped.
std::vector<std::pair<double, double>> load_fit_data(const std::string& path);

}  // namespace atsmem

#endif  // ATSMEM_COMMANDS_HPP
