#ifndef ATSMEM_COUNTING_HPP
#define ATSMEM_COUNTING_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "atsmem/rng.hpp"

namespace atsmem {

struct TimeWindow {
    double start = 0;  // s
    double end = 0;
    double length() const { return end - start; }
};

// Photon-counting measurement plan. The histogram spans [0, start + end] so
// the signal window sits centered in it; p_n is the per-event noise detection
// probability within the window (the quantity the no-probe runs measure).
struct MeasurementPlan {
    double n_bar_in = 1.0;            // mean input photon number
    std::uint64_t n_r = 1000;         // storage-recall repetitions per cycle
    std::uint64_t n_cyc = 10;         // cycles
    double bin_width = 1e-9;          // s
    TimeWindow window{100e-9, 150e-9};  // 50 ns signal window by default
    double p_n = 6.6e-5;              // in-window noise probability per event
    double det_eff = 1.0;             // end-to-end probe-chain detection efficiency

    std::uint64_t n_events() const { return n_r * n_cyc; }
    double span() const { return window.start + window.end; }
    void validate() const;
};

// Binned detection record of n_events storage-and-recall trials; bin i covers
// [i*bin_width, (i+1)*bin_width). Records the seed that produced it.
struct CountHistogram {
    double bin_width = 0;
    double span = 0;
    std::vector<std::uint64_t> counts;
    std::uint64_t n_events = 0;
    std::uint64_t seed = 0;

    double bin_start(std::size_t i) const { return static_cast<double>(i) * bin_width; }
    // Counts in bins fully contained in the window.
    std::uint64_t counts_in(const TimeWindow& w) const;
    double probability_in(const TimeWindow& w) const;
};

// Forward model of the measurement chain: per event the windowed signal
// detection probability is eta_m * n_bar_in * det_eff (arrival times Gaussian
// with the recall-pulse shape, centered in the window) on top of noise
// arrivals uniform over the span. Deterministic under a fixed seed.
CountHistogram simulate_histogram(double eta_m, const MeasurementPlan& plan, double tau_p,
                                  std::uint64_t seed);

// eta_m = (p_s - p_n) / p_in. The raw value may be slightly negative under
// noise; both the raw and the [0,1]-clamped value are reported.
struct EfficiencyEstimate {
    double raw;
    double clamped;
};
EfficiencyEstimate estimate_efficiency(double p_s, double p_n, double p_in);

// SNR = (p_s - p_n) / p_n and error probability E = 1/SNR. p_n = 0 yields the
// infinite-SNR sentinel (snr = +inf, error_probability = 0).
struct SnrEstimate {
    double snr;
    double error_probability;
};
SnrEstimate estimate_snr(double p_s, double p_n);

// Single-parameter least-squares fit of the observed-decay form over tau_mag
// (bounded golden-section search on log tau in [10 ns, 10 s]); the overall
// amplitude is profiled out analytically. residual is the sum of squared
// residuals at the optimum.
struct FitFixedParams {
    double f_bec;
    double tau_th;  // s
    double t_s0;    // s
};
struct TauMagFit {
    double tau_mag;       // s
    double residual;      // sum of squared residuals
    double eta0;          // fitted amplitude at t_s0
    bool flat_objective;  // degenerate data warning
};
TauMagFit fit_tau_mag(std::span<const std::pair<double, double>> data,
                      const FitFixedParams& fixed);

}  // namespace atsmem

#endif  // ATSMEM_COUNTING_HPP
