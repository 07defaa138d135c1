#include "atsmem/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "atsmem/decoherence.hpp"
#include "atsmem/errors.hpp"
#include "atsmem/optim.hpp"

namespace atsmem {

void MeasurementPlan::validate() const {
    if (!(n_bar_in >= 0)) throw std::domain_error("plan: n_bar_in must be non-negative");
    if (n_r == 0 || n_cyc == 0) throw std::domain_error("plan: n_r and n_cyc must be positive");
    if (!(bin_width > 0)) throw std::domain_error("plan: bin_width must be positive");
    if (!(window.start >= 0 && window.end > window.start))
        throw std::domain_error("plan: window must satisfy 0 <= start < end");
    if (!(p_n >= 0 && p_n <= 1)) throw std::domain_error("plan: p_n must be in [0,1]");
    if (!(det_eff > 0 && det_eff <= 1)) throw std::domain_error("plan: det_eff must be in (0,1]");
}

std::uint64_t CountHistogram::counts_in(const TimeWindow& w) const {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double lo = bin_start(i);
        if (lo >= w.start && lo + bin_width <= w.end + 1e-15 * span) total += counts[i];
    }
    return total;
}

double CountHistogram::probability_in(const TimeWindow& w) const {
    return static_cast<double>(counts_in(w)) / static_cast<double>(n_events);
}

CountHistogram simulate_histogram(double eta_m, const MeasurementPlan& plan, double tau_p,
                                  std::uint64_t seed) {
    plan.validate();
    if (!(eta_m >= 0 && eta_m <= 1))
        throw std::domain_error("simulate_histogram: eta_m must be in [0,1]");
    if (!(tau_p > 0)) throw std::domain_error("simulate_histogram: tau_p must be positive");

    const double span = plan.span();
    const double p_signal = eta_m * plan.n_bar_in * plan.det_eff;
    // noise is uniform over the span; scale so the in-window probability is p_n
    const double p_noise_total = plan.p_n * span / plan.window.length();
    if (p_signal + p_noise_total > 1.0)
        throw std::domain_error("simulate_histogram: per-event detection probability exceeds 1");

    const double center = 0.5 * span;
    const double sigma_t = tau_p / (2.0 * std::sqrt(2.0 * std::log(2.0)));  // FWHM -> sigma

    CountHistogram hist;
    hist.bin_width = plan.bin_width;
    hist.span = span;
    hist.counts.assign(static_cast<std::size_t>(std::ceil(span / plan.bin_width)), 0);
    hist.n_events = plan.n_events();
    hist.seed = seed;

    SplitMix64 rng(seed);
    for (std::uint64_t e = 0; e < hist.n_events; ++e) {
        const double u = rng.uniform();
        double t;
        if (u < p_signal) {
            t = center + sigma_t * rng.gaussian();
            if (t < 0 || t >= span) continue;  // arrival outside the recorded span
        } else if (u < p_signal + p_noise_total) {
            t = rng.uniform(0.0, span);
        } else {
            continue;
        }
        const auto bin = static_cast<std::size_t>(t / plan.bin_width);
        if (bin < hist.counts.size()) ++hist.counts[bin];
    }
    return hist;
}

EfficiencyEstimate estimate_efficiency(double p_s, double p_n, double p_in) {
    if (!(p_in > 0)) throw std::domain_error("estimate_efficiency: p_in must be positive");
    const double raw = (p_s - p_n) / p_in;
    return {raw, std::clamp(raw, 0.0, 1.0)};
}

SnrEstimate estimate_snr(double p_s, double p_n) {
    if (p_n < 0) throw std::domain_error("estimate_snr: p_n must be non-negative");
    if (p_n == 0) return {std::numeric_limits<double>::infinity(), 0.0};
    const double snr = (p_s - p_n) / p_n;
    return {snr, 1.0 / snr};
}

TauMagFit fit_tau_mag(std::span<const std::pair<double, double>> data,
                      const FitFixedParams& fixed) {
    if (data.size() < 3) throw ConfigError("fit_tau_mag: need at least 3 data points");
    if (!(fixed.tau_th > 0)) throw std::domain_error("fit_tau_mag: tau_th must be positive");
    if (!(fixed.f_bec >= 0 && fixed.f_bec <= 1))
        throw std::domain_error("fit_tau_mag: f_bec must be in [0,1]");
    for (const auto& [t, eta] : data) {
        if (t < fixed.t_s0) throw std::domain_error("fit_tau_mag: data point before t_s0");
        (void)eta;
    }

    // Separable least squares: for a trial tau the amplitude eta0 minimizing
    // sum (y_k - eta0 m_k)^2 is sum(y m)/sum(m^2), leaving a 1D objective.
    auto sse = [&](double log_tau) {
        const double tau = std::exp(log_tau);
        double sym = 0, smm = 0;
        for (const auto& [t, y] : data) {
            const double m = fit_decay_shape(t - fixed.t_s0, fixed.f_bec, tau, fixed.tau_th);
            sym += y * m;
            smm += m * m;
        }
        const double a = smm > 0 ? sym / smm : 0.0;
        double r2 = 0;
        for (const auto& [t, y] : data) {
            const double m = fit_decay_shape(t - fixed.t_s0, fixed.f_bec, tau, fixed.tau_th);
            const double r = y - a * m;
            r2 += r * r;
        }
        return r2;
    };

    // Coarse scan locates the global basin on the log bracket before the
    // golden-section refinement (the objective is unimodal for clean data but
    // the scan makes no assumption about it).
    const double lo = std::log(10e-9), hi = std::log(10.0);
    constexpr int kScan = 96;
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    double min_val = best_val, max_val = -best_val;
    std::vector<double> grid(kScan), vals(kScan);
    for (int i = 0; i < kScan; ++i) {
        grid[i] = lo + (hi - lo) * i / (kScan - 1);
        vals[i] = sse(grid[i]);
        if (vals[i] < best_val) {
            best_val = vals[i];
            best = i;
        }
        min_val = std::min(min_val, vals[i]);
        max_val = std::max(max_val, vals[i]);
    }
    const bool flat = (max_val - min_val) <= 1e-14 * std::max(max_val, 1e-300);

    const double a = grid[std::max(best - 1, 0)];
    const double b = grid[std::min(best + 1, kScan - 1)];
    const MinResult m = golden_section_min(sse, a, b, 1e-12);

    const double tau = std::exp(m.x);
    double sym = 0, smm = 0;
    for (const auto& [t, y] : data) {
        const double mk = fit_decay_shape(t - fixed.t_s0, fixed.f_bec, tau, fixed.tau_th);
        sym += y * mk;
        smm += mk * mk;
    }
    return {tau, m.fx, smm > 0 ? sym / smm : 0.0, flat};
}

}  // namespace atsmem
