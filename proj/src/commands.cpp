#include "atsmem/commands.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "atsmem/errors.hpp"

namespace atsmem {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const CloudSection& need_cloud(const Config& c, const char* cmd) {
    if (!c.cloud) throw ConfigError(std::string(cmd) + ": config section 'cloud' required");
    return *c.cloud;
}

const TrapConfig& need_trap(const Config& c, const char* cmd) {
    if (!c.trap) throw ConfigError(std::string(cmd) + ": config section 'trap' required");
    return *c.trap;
}

const MemorySection& need_memory(const Config& c, const char* cmd) {
    if (!c.memory) throw ConfigError(std::string(cmd) + ": config section 'memory' required");
    return *c.memory;
}

const DecoherenceSection& need_decoherence(const Config& c, const char* cmd) {
    if (!c.decoherence)
        throw ConfigError(std::string(cmd) + ": config section 'decoherence' required");
    return *c.decoherence;
}

const SweepSection& need_sweep(const Config& c, const char* cmd) {
    if (!c.sweep) throw ConfigError(std::string(cmd) + ": config section 'sweep' required");
    return *c.sweep;
}

// Condensate fraction at temperature T: the explicit config value when T is
// not swept, otherwise the 1-(T/T_c)^3 helper (requires cloud.t_c_k).
double resolve_f_bec(const CloudSection& cloud, double temperature, bool temperature_swept,
                     const char* cmd) {
    if (!temperature_swept) {
        if (!cloud.f_bec) throw ConfigError(std::string(cmd) + ": cloud.f_bec required");
        return *cloud.f_bec;
    }
    if (!cloud.t_c)
        throw ConfigError(std::string(cmd) + ": cloud.t_c_k required when sweeping temperature");
    return condensate_fraction_from_temperature(temperature, *cloud.t_c);
}

CloudState make_cloud(const Config& config, double temperature, double f_bec, const char* cmd) {
    CloudState cloud(need_cloud(config, cmd).n_total, temperature, f_bec,
                     need_trap(config, cmd), config.species);
    const double tof = config.cloud->tof;
    return tof > 0 ? cloud.expand(tof) : cloud;
}

// Probe diameter for the decoherence formulas: explicit override first, then
// a circular beam section.
double resolve_r_p(const Config& config, const char* cmd) {
    if (config.decoherence && config.decoherence->r_p) return *config.decoherence->r_p;
    if (config.beam) {
        if (std::abs(config.beam->r_px - config.beam->r_py) >
            1e-12 * std::max(config.beam->r_px, config.beam->r_py))
            throw ConfigError(std::string(cmd) +
                              ": elliptic beam; set decoherence.r_p_m explicitly");
        return config.beam->r_px;
    }
    throw ConfigError(std::string(cmd) + ": need beam section or decoherence.r_p_m");
}

struct Grid {
    std::vector<double> first;   // values of axes[0]
    std::vector<double> second;  // values of axes[1], or {nan} when absent
    std::size_t size() const { return first.size() * second.size(); }
};

Grid make_grid(const SweepSection& sweep) {
    Grid g;
    g.first = axis_values(sweep.axes[0]);
    g.second = sweep.axes.size() > 1 ? axis_values(sweep.axes[1])
                                     : std::vector<double>{std::numeric_limits<double>::quiet_NaN()};
    return g;
}

void check_axes(const SweepSection& sweep, std::initializer_list<const char*> allowed,
                const char* cmd) {
    for (const auto& axis : sweep.axes) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || axis.variable == a;
        if (!ok)
            throw ConfigError(std::string(cmd) + ": sweep variable '" + axis.variable +
                              "' not supported by this command");
    }
    if (sweep.axes.size() == 2 && sweep.axes[0].variable == sweep.axes[1].variable)
        throw ConfigError(std::string(cmd) + ": duplicate sweep variable");
}

bool has_axis(const SweepSection& sweep, const char* name) {
    for (const auto& axis : sweep.axes)
        if (axis.variable == name) return true;
    return false;
}

// Value of `name` at grid point (i,j): the swept value if an axis carries it,
// otherwise `fallback` from the config.
double grid_value(const SweepSection& sweep, const Grid& g, std::size_t i, std::size_t j,
                  const char* name, double fallback) {
    if (sweep.axes[0].variable == name) return g.first[i];
    if (sweep.axes.size() > 1 && sweep.axes[1].variable == name) return g.second[j];
    return fallback;
}

}  // namespace

Table cmd_predict_od(const Config& config) {
    const char* cmd = "predict-od";
    const CloudSection& cloud_cfg = need_cloud(config, cmd);
    need_trap(config, cmd);
    const MemorySection& memory_cfg = need_memory(config, cmd);
    const SweepSection& sweep = need_sweep(config, cmd);
    check_axes(sweep, {"temperature", "beam_diameter"}, cmd);
    const bool sweeps_t = has_axis(sweep, "temperature");
    if (!has_axis(sweep, "beam_diameter") && !config.beam)
        throw ConfigError(std::string(cmd) + ": beam section required unless beam_diameter swept");

    const Grid grid = make_grid(sweep);
    const double f_ats = ats_factor(memory_cfg.bandwidth, config.species);

    Table table;
    table.columns = {"temperature_k", "f_bec",      "r_px_m",      "r_py_m",      "peak_od",
                     "effective_od",  "ats_factor", "eta_forward", "eta_backward"};
    table.rows.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t idx) {
        const std::size_t i = idx / grid.second.size();
        const std::size_t j = idx % grid.second.size();
        const double temperature =
            grid_value(sweep, grid, i, j, "temperature", cloud_cfg.temperature);
        const double f_bec = resolve_f_bec(cloud_cfg, temperature, sweeps_t, cmd);
        BeamProfile beam = config.beam ? *config.beam : BeamProfile{};
        const double diameter = grid_value(sweep, grid, i, j, "beam_diameter", 0.0);
        if (diameter > 0) beam = BeamProfile{diameter, diameter};

        const CloudState cloud = make_cloud(config, temperature, f_bec, cmd);
        const double d0 = peak_od(cloud, memory_cfg.line);
        const double d = effective_od(beam, cloud, memory_cfg.line);
        table.rows[idx] = {temperature,
                           f_bec,
                           beam.r_px,
                           beam.r_py,
                           d0,
                           d,
                           f_ats,
                           eta_forward(d, f_ats),
                           eta_backward(d, f_ats)};
    });
    table.select_columns(sweep.outputs);
    return table;
}

Table cmd_lifetime(const Config& config) {
    const char* cmd = "lifetime";
    const CloudSection& cloud_cfg = need_cloud(config, cmd);
    const MemorySection& memory_cfg = need_memory(config, cmd);
    const DecoherenceSection& dec_cfg = need_decoherence(config, cmd);
    const SweepSection& sweep = need_sweep(config, cmd);
    check_axes(sweep, {"temperature", "angle"}, cmd);
    const bool sweeps_t = has_axis(sweep, "temperature");

    const Grid grid = make_grid(sweep);
    const double lambda = config.species.lambda_probe(memory_cfg.line);

    Table table;
    table.columns = {"temperature_k", "theta_rad", "f_bec",     "tau_th_s",
                     "tau_rec_s",     "tau_col_s", "lifetime_s"};
    table.rows.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t idx) {
        const std::size_t i = idx / grid.second.size();
        const std::size_t j = idx % grid.second.size();
        const double temperature =
            grid_value(sweep, grid, i, j, "temperature", cloud_cfg.temperature);
        const double theta = grid_value(sweep, grid, i, j, "angle", dec_cfg.theta);
        const double f_bec = resolve_f_bec(cloud_cfg, temperature, sweeps_t, cmd);

        DecoherenceParams p;
        p.theta = theta;
        p.lambda = lambda;
        p.temperature = temperature;
        p.f_bec = f_bec;
        p.tau_mag = dec_cfg.tau_mag;
        p.mass = config.species.mass;
        p.im_a_sc = config.species.im_a_sc;
        p.t_s0 = dec_cfg.t_s0.value_or(0.0);
        if (f_bec > 0) {
            p.r_p = resolve_r_p(config, cmd);
            p.rho_b = make_cloud(config, temperature, f_bec, cmd).peak_condensate_density();
        }

        const double tau_th = (f_bec < 1.0 && temperature > 0) ? tau_thermal(p) : kInf;
        const double tau_rec = p.r_p > 0 ? tau_recoil(p) : kInf;
        const double tau_col = (f_bec > 0 && p.im_a_sc && p.rho_b > 0) ? tau_collision(p) : kInf;
        table.rows[idx] = {temperature,          theta,   f_bec, tau_th, tau_rec, tau_col,
                           memory_lifetime(p, dec_cfg.model)};
    });
    table.select_columns(sweep.outputs);
    return table;
}

Table cmd_fwm_compare(const Config& config, GammaConvention convention) {
    const char* cmd = "fwm-compare";
    const SweepSection& sweep = need_sweep(config, cmd);
    check_axes(sweep, {"bandwidth"}, cmd);
    if (sweep.axes.size() != 1)
        throw ConfigError(std::string(cmd) + ": exactly one bandwidth axis required");

    const std::vector<double> bandwidths = axis_values(sweep.axes[0]);
    const auto rows = protocol_noise_curve(bandwidths, config.species, convention);

    Table table;
    table.columns = {"B_Hz",      "B_over_linewidth", "d_ats",      "d_eit",      "omega_ats",
                     "omega_eit", "s_ats_norm",       "s_eit_norm", "ratio"};
    table.metadata.emplace_back("command", cmd);
    table.metadata.emplace_back("gamma_convention",
                                convention == GammaConvention::half ? "half" : "full");
    bool out_of_range = false;
    for (const auto& r : rows) {
        out_of_range = out_of_range || !r.in_range;
        table.rows.push_back({r.bandwidth_hz, r.ats_factor, r.d_ats, r.d_eit, r.omega_ats,
                              r.omega_eit, r.s_ats_norm, r.s_eit_norm, r.ratio});
    }
    if (out_of_range)
        table.metadata.emplace_back("warning", "bandwidth outside [10,40] Gamma_eg/2pi");
    table.select_columns(sweep.outputs);
    return table;
}

Table cmd_zeeman(const Config& config) {
    const char* cmd = "zeeman";
    if (!config.zeeman) throw ConfigError(std::string(cmd) + ": config section 'zeeman' required");
    const ZeemanSection& z = *config.zeeman;

    Table table;
    json resolved;
    resolved["b_field_t"] = z.b_field;
    resolved["g_f"] = z.g_f;
    resolved["q0"] = z.q.q0;
    resolved["q1"] = z.q.q1;
    resolved["q2"] = z.q.q2;
    table.metadata.emplace_back("command", cmd);
    table.metadata.emplace_back("config", resolved.dump());

    const bool trace = config.sweep && has_axis(*config.sweep, "storage_time");
    if (trace) {
        check_axes(*config.sweep, {"storage_time"}, cmd);
        const std::vector<double> times = axis_values(config.sweep->axes[0]);
        const double omega = zeeman_splitting(z.g_f, z.b_field);
        DecoherenceParams decay;
        if (z.apply_decay) {
            const DecoherenceSection& dec_cfg = need_decoherence(config, cmd);
            const CloudSection& cloud_cfg = need_cloud(config, cmd);
            decay.theta = dec_cfg.theta;
            decay.lambda = config.species.lambda_probe(need_memory(config, cmd).line);
            decay.temperature = cloud_cfg.temperature;
            if (!cloud_cfg.f_bec) throw ConfigError(std::string(cmd) + ": cloud.f_bec required");
            decay.f_bec = *cloud_cfg.f_bec;
            decay.tau_mag = dec_cfg.tau_mag;
            decay.mass = config.species.mass;
        }
        table.columns = {"storage_time_s", "intensity"};
        table.rows.resize(times.size());
        parallel_for(times.size(), [&](std::size_t i) {
            const double intensity = z.apply_decay
                                         ? retrieved_intensity(times[i], z.q, omega, decay)
                                         : retrieved_intensity(times[i], z.q, omega);
            table.rows[i] = {times[i], intensity};
        });
    } else {
        std::vector<double> fields = {z.b_field};
        if (config.sweep) {
            check_axes(*config.sweep, {"b_field"}, cmd);
            fields = axis_values(config.sweep->axes[0]);
        }
        table.columns = {"b_field_t", "splitting_rad_s", "period_s", "i_max", "i_min",
                         "visibility"};
        table.rows.resize(fields.size());
        parallel_for(fields.size(), [&](std::size_t i) {
            const IntensityExtrema ext = intensity_extrema(z.q);
            table.rows[i] = {fields[i],
                             zeeman_splitting(z.g_f, fields[i]),
                             oscillation_period(fields[i]),
                             ext.i_max,
                             ext.i_min,
                             visibility(ext.i_max, ext.i_min)};
        });
    }
    if (config.sweep) table.select_columns(config.sweep->outputs);
    return table;
}

Table cmd_simulate_counts(const Config& config, std::uint64_t seed) {
    const char* cmd = "simulate-counts";
    if (!config.measurement)
        throw ConfigError(std::string(cmd) + ": config section 'measurement' required");
    const MeasurementSection& m = *config.measurement;

    json resolved;
    resolved["eta_m"] = m.eta_m;
    resolved["tau_p_s"] = m.tau_p;
    resolved["n_bar_in"] = m.plan.n_bar_in;
    resolved["n_r"] = m.plan.n_r;
    resolved["n_cyc"] = m.plan.n_cyc;
    resolved["bin_width_s"] = m.plan.bin_width;
    resolved["window_start_s"] = m.plan.window.start;
    resolved["window_end_s"] = m.plan.window.end;
    resolved["p_n"] = m.plan.p_n;
    resolved["det_eff"] = m.plan.det_eff;

    Table table;
    table.metadata.emplace_back("command", cmd);
    table.metadata.emplace_back("seed", std::to_string(seed));
    table.metadata.emplace_back("config", resolved.dump());

    if (config.sweep && has_axis(*config.sweep, "n_bar_in")) {
        check_axes(*config.sweep, {"n_bar_in"}, cmd);
        const std::vector<double> photons = axis_values(config.sweep->axes[0]);
        table.columns = {"n_bar_in",      "p_s_hat",  "eta_hat_raw",
                         "eta_hat_clamped", "snr_hat", "error_probability"};
        table.rows.resize(photons.size());
        parallel_for(photons.size(), [&](std::size_t i) {
            MeasurementPlan plan = m.plan;
            plan.n_bar_in = photons[i];
            const CountHistogram hist =
                simulate_histogram(m.eta_m, plan, m.tau_p, SplitMix64::substream_seed(seed, i));
            const double p_s = hist.probability_in(plan.window);
            const double p_in = plan.n_bar_in * plan.det_eff;
            const EfficiencyEstimate eta = estimate_efficiency(p_s, plan.p_n, p_in);
            const SnrEstimate snr = estimate_snr(p_s, plan.p_n);
            table.rows[i] = {plan.n_bar_in, p_s, eta.raw, eta.clamped, snr.snr,
                             snr.error_probability};
        });
        if (config.sweep) table.select_columns(config.sweep->outputs);
        return table;
    }
    if (config.sweep)
        throw ConfigError(std::string(cmd) + ": only an n_bar_in sweep is supported");

    const CountHistogram hist = simulate_histogram(m.eta_m, m.plan, m.tau_p, seed);
    const double p_s = hist.probability_in(m.plan.window);
    const double p_in = m.plan.n_bar_in * m.plan.det_eff;
    table.metadata.emplace_back("n_events", std::to_string(hist.n_events));
    table.metadata.emplace_back("p_s_hat", format_full(p_s));
    if (p_in > 0) {
        const EfficiencyEstimate eta = estimate_efficiency(p_s, m.plan.p_n, p_in);
        table.metadata.emplace_back("eta_hat_raw", format_full(eta.raw));
        table.metadata.emplace_back("eta_hat_clamped", format_full(eta.clamped));
    }
    const SnrEstimate snr = estimate_snr(p_s, m.plan.p_n);
    table.metadata.emplace_back("snr_hat", format_full(snr.snr));
    table.columns = {"bin_start_s", "count"};
    for (std::size_t i = 0; i < hist.counts.size(); ++i)
        table.rows.push_back({hist.bin_start(i), static_cast<double>(hist.counts[i])});
    return table;
}

Table cmd_fit(const Config& config, std::span<const std::pair<double, double>> data) {
    const char* cmd = "fit";
    const CloudSection& cloud_cfg = need_cloud(config, cmd);
    const MemorySection& memory_cfg = need_memory(config, cmd);
    const DecoherenceSection& dec_cfg = need_decoherence(config, cmd);
    if (!cloud_cfg.f_bec) throw ConfigError(std::string(cmd) + ": cloud.f_bec required");
    if (data.empty()) throw ConfigError(std::string(cmd) + ": no data points");

    DecoherenceParams p;
    p.theta = dec_cfg.theta;
    p.lambda = config.species.lambda_probe(memory_cfg.line);
    p.temperature = cloud_cfg.temperature;
    p.f_bec = *cloud_cfg.f_bec;
    p.mass = config.species.mass;

    double t_min = data.front().first;
    for (const auto& [t, eta] : data) {
        t_min = std::min(t_min, t);
        (void)eta;
    }
    FitFixedParams fixed;
    fixed.f_bec = *cloud_cfg.f_bec;
    fixed.tau_th = tau_thermal(p);
    fixed.t_s0 = dec_cfg.t_s0.value_or(t_min);

    const TauMagFit fit = fit_tau_mag(data, fixed);

    json resolved;
    resolved["f_bec"] = fixed.f_bec;
    resolved["tau_th_s"] = fixed.tau_th;
    resolved["t_s0_s"] = fixed.t_s0;
    Table table;
    table.metadata.emplace_back("command", cmd);
    table.metadata.emplace_back("config", resolved.dump());
    if (fit.flat_objective) table.metadata.emplace_back("warning", "flat objective");
    table.columns = {"tau_mag_s", "residual", "eta0", "n_points"};
    table.rows.push_back(
        {fit.tau_mag, fit.residual, fit.eta0, static_cast<double>(data.size())});
    return table;
}

std::vector<std::pair<double, double>> load_fit_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("fit: cannot open data file '" + path + "'");
    std::vector<std::pair<double, double>> data;
    std::string line;
    bool first_content = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        for (auto& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream row(line);
        double t = 0, eta = 0;
        if (!(row >> t >> eta)) {
            if (first_content) {  // header row
                first_content = false;
                continue;
            }
            throw ConfigError("fit: malformed data line '" + line + "'");
        }
        first_content = false;
        data.emplace_back(t, eta);
    }
    if (data.size() < 3) throw ConfigError("fit: need at least 3 data points");
    return data;
}

}  // namespace atsmem
