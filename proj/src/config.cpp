#include "atsmem/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "atsmem/errors.hpp"

namespace atsmem {

namespace {

// Strict object reader: typed getters record which keys were consumed and
// done() rejects anything left over, so typos never pass silently.
class ObjectReader {
public:
    ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
        if (!obj_.is_object()) throw ConfigError(path_ + ": expected an object");
    }

    bool has(const char* key) const { return obj_.contains(key); }

    double number(const char* key) {
        const json& v = child(key);
        if (!v.is_number()) throw ConfigError(at(key) + ": expected a number");
        return v.get<double>();
    }

    std::optional<double> opt_number(const char* key) {
        if (!has(key)) return std::nullopt;
        return number(key);
    }

    double number_or(const char* key, double fallback) {
        return has(key) ? number(key) : fallback;
    }

    std::uint64_t uinteger(const char* key) {
        const json& v = child(key);
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            throw ConfigError(at(key) + ": expected a non-negative integer");
        return v.get<std::uint64_t>();
    }

    std::uint64_t uinteger_or(const char* key, std::uint64_t fallback) {
        return has(key) ? uinteger(key) : fallback;
    }

    std::string str(const char* key) {
        const json& v = child(key);
        if (!v.is_string()) throw ConfigError(at(key) + ": expected a string");
        return v.get<std::string>();
    }

    std::string str_or(const char* key, const std::string& fallback) {
        return has(key) ? str(key) : fallback;
    }

    bool boolean_or(const char* key, bool fallback) {
        if (!has(key)) return fallback;
        const json& v = child(key);
        if (!v.is_boolean()) throw ConfigError(at(key) + ": expected a boolean");
        return v.get<bool>();
    }

    const json& child(const char* key) {
        if (!has(key)) throw ConfigError(at(key) + ": missing required key");
        seen_.insert(key);
        return obj_.at(key);
    }

    std::string at(const char* key) const { return path_ + "." + key; }
    const std::string& path() const { return path_; }

    void done() const {
        for (auto it = obj_.begin(); it != obj_.end(); ++it) {
            if (!seen_.count(it.key()))
                throw ConfigError(path_ + ": unknown key '" + it.key() + "'");
        }
    }

private:
    const json& obj_;
    std::string path_;
    std::set<std::string> seen_;
};

AtomSpecies parse_species(const json& j) {
    ObjectReader r(j, "species");
    const std::string preset = r.str_or("preset", "rb87");
    if (preset != "rb87") throw ConfigError("species.preset: unknown preset '" + preset + "'");
    AtomSpecies s = rb87();

    // user-supplied values always win over the preset
    if (auto v = r.opt_number("mass_kg")) s.mass = *v;
    if (auto v = r.opt_number("lambda_d1_m")) s.d1.lambda = *v;
    if (auto v = r.opt_number("lambda_d2_m")) s.d2.lambda = *v;
    if (auto v = r.opt_number("alpha_sq_d1")) s.d1.alpha_sq = *v;
    if (auto v = r.opt_number("alpha_sq_d2")) s.d2.alpha_sq = *v;
    if (auto v = r.opt_number("degeneracy_d1")) s.d1.degeneracy = *v;
    if (auto v = r.opt_number("degeneracy_d2")) s.d2.degeneracy = *v;
    if (auto v = r.opt_number("gamma_eg_rad_s")) {
        s.gamma_eg = *v;
        s.Gamma_eg = 2.0 * *v;
    }
    if (auto v = r.opt_number("delta_gs_rad_s")) s.delta_gs = *v;
    if (auto v = r.opt_number("zeta")) s.zeta = *v;
    if (auto v = r.opt_number("a_sc_m")) s.a_sc = *v;
    if (auto v = r.opt_number("im_a_sc_m")) s.im_a_sc = *v;
    if (auto v = r.opt_number("g_f1")) s.g_f1 = *v;
    if (auto v = r.opt_number("g_f2")) s.g_f2 = *v;
    r.done();
    try {
        s.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("species: ") + e.what());
    }
    return s;
}

TrapConfig parse_trap(const json& j) {
    ObjectReader r(j, "trap");
    TrapConfig t{r.number("omega_x_rad_s"), r.number("omega_y_rad_s"), r.number("omega_z_rad_s")};
    r.done();
    try {
        t.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("trap: ") + e.what());
    }
    return t;
}

CloudSection parse_cloud(const json& j) {
    ObjectReader r(j, "cloud");
    CloudSection c;
    c.n_total = r.number("n_total");
    c.temperature = r.number("temperature_k");
    c.f_bec = r.opt_number("f_bec");
    c.t_c = r.opt_number("t_c_k");
    c.tof = r.number_or("tof_s", 0.0);
    r.done();
    if (c.n_total < 0) throw ConfigError("cloud.n_total: must be non-negative");
    if (c.temperature < 0) throw ConfigError("cloud.temperature_k: must be non-negative");
    if (c.f_bec && !(*c.f_bec >= 0 && *c.f_bec <= 1))
        throw ConfigError("cloud.f_bec: must be in [0,1]");
    if (c.t_c && !(*c.t_c > 0)) throw ConfigError("cloud.t_c_k: must be positive");
    if (c.tof < 0) throw ConfigError("cloud.tof_s: must be non-negative");
    return c;
}

BeamProfile parse_beam(const json& j) {
    ObjectReader r(j, "beam");
    BeamProfile b;
    if (r.has("r_p_m")) {
        b.r_px = b.r_py = r.number("r_p_m");
    } else {
        b.r_px = r.number("r_px_m");
        b.r_py = r.number("r_py_m");
    }
    r.done();
    try {
        b.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("beam: ") + e.what());
    }
    return b;
}

MemorySection parse_memory(const json& j) {
    ObjectReader r(j, "memory");
    MemorySection m;
    const std::string protocol = r.str_or("protocol", "ats");
    if (protocol == "ats")
        m.protocol = Protocol::ats;
    else if (protocol == "eit")
        m.protocol = Protocol::eit;
    else
        throw ConfigError("memory.protocol: expected 'ats' or 'eit'");
    const std::string recall = r.str_or("recall", "forward");
    if (recall == "forward")
        m.recall = Recall::forward;
    else if (recall == "backward")
        m.recall = Recall::backward;
    else
        throw ConfigError("memory.recall: expected 'forward' or 'backward'");
    const std::string line = r.str_or("line", "d2");
    if (line == "d1")
        m.line = Line::d1;
    else if (line == "d2")
        m.line = Line::d2;
    else
        throw ConfigError("memory.line: expected 'd1' or 'd2'");

    const auto tau_p = r.opt_number("tau_p_s");
    const auto bandwidth = r.opt_number("bandwidth_hz");
    if (tau_p.has_value() == bandwidth.has_value())
        throw ConfigError("memory: exactly one of tau_p_s and bandwidth_hz must be given");
    r.done();
    if (tau_p) {
        if (!(*tau_p > 0)) throw ConfigError("memory.tau_p_s: must be positive");
        m.bandwidth = bandwidth_from_duration(*tau_p);
    } else {
        if (!(*bandwidth > 0)) throw ConfigError("memory.bandwidth_hz: must be positive");
        m.bandwidth = *bandwidth;
    }
    return m;
}

DecoherenceSection parse_decoherence(const json& j) {
    ObjectReader r(j, "decoherence");
    DecoherenceSection d;
    d.theta = r.number("theta_rad");
    d.tau_mag = r.opt_number("tau_mag_s");
    d.t_s0 = r.opt_number("t_s0_s");
    d.r_p = r.opt_number("r_p_m");
    const std::string model = r.str_or("model", "predict");
    if (model == "fit")
        d.model = DecayModel::fit;
    else if (model == "predict")
        d.model = DecayModel::predict;
    else
        throw ConfigError("decoherence.model: expected 'fit' or 'predict'");
    r.done();
    if (!(d.theta > 0 && d.theta <= kPi))
        throw ConfigError("decoherence.theta_rad: must be in (0, pi]");
    if (d.tau_mag && !(*d.tau_mag > 0)) throw ConfigError("decoherence.tau_mag_s: must be positive");
    if (d.t_s0 && *d.t_s0 < 0) throw ConfigError("decoherence.t_s0_s: must be non-negative");
    if (d.r_p && !(*d.r_p > 0)) throw ConfigError("decoherence.r_p_m: must be positive");
    return d;
}

MeasurementSection parse_measurement(const json& j) {
    ObjectReader r(j, "measurement");
    MeasurementSection m;
    m.plan.n_bar_in = r.number_or("n_bar_in", 1.0);
    m.plan.n_r = r.uinteger_or("n_r", 1000);
    m.plan.n_cyc = r.uinteger_or("n_cyc", 10);
    m.plan.bin_width = r.number_or("bin_width_s", 1e-9);
    m.plan.window.start = r.number_or("window_start_s", 100e-9);
    m.plan.window.end = r.number_or("window_end_s", 150e-9);
    m.plan.p_n = r.number_or("p_n", 6.6e-5);
    m.plan.det_eff = r.number_or("det_eff", 1.0);
    m.eta_m = r.number_or("eta_m", 0.0);
    m.tau_p = r.number_or("tau_p_s", 20e-9);
    r.done();
    try {
        m.plan.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("measurement: ") + e.what());
    }
    if (!(m.eta_m >= 0 && m.eta_m <= 1)) throw ConfigError("measurement.eta_m: must be in [0,1]");
    if (!(m.tau_p > 0)) throw ConfigError("measurement.tau_p_s: must be positive");
    return m;
}

ZeemanSection parse_zeeman(const json& j) {
    ObjectReader r(j, "zeeman");
    ZeemanSection z;
    z.b_field = r.number("b_field_t");
    z.g_f = r.number_or("g_f", 0.5);
    z.q.q0 = r.number_or("q0", 0.0);
    z.q.q1 = r.number_or("q1", 1.0);
    z.q.q2 = r.number_or("q2", 0.0);
    z.apply_decay = r.boolean_or("apply_decay", false);
    r.done();
    if (z.b_field < 0) throw ConfigError("zeeman.b_field_t: must be non-negative");
    try {
        z.q.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("zeeman: ") + e.what());
    }
    return z;
}

const std::set<std::string> kSweepVariables = {"temperature", "beam_diameter", "bandwidth",
                                               "angle",       "storage_time",  "b_field",
                                               "n_bar_in"};

SweepSection parse_sweep(const json& j) {
    ObjectReader r(j, "sweep");
    SweepSection s;
    const json& axes = r.child("axes");
    if (!axes.is_array() || axes.empty()) throw ConfigError("sweep.axes: expected a non-empty array");
    for (std::size_t i = 0; i < axes.size(); ++i) {
        ObjectReader ar(axes[i], "sweep.axes[" + std::to_string(i) + "]");
        SweepAxis a;
        a.variable = ar.str("variable");
        a.min = ar.number("min");
        a.max = ar.number("max");
        a.steps = static_cast<int>(ar.uinteger("steps"));
        a.log_spacing = ar.boolean_or("log", false);
        ar.done();
        if (!kSweepVariables.count(a.variable))
            throw ConfigError(ar.path() + ".variable: unknown variable '" + a.variable + "'");
        if (!(a.min < a.max)) throw ConfigError(ar.path() + ": min must be < max");
        if (a.steps < 2) throw ConfigError(ar.path() + ".steps: must be >= 2");
        if (a.log_spacing && !(a.min > 0))
            throw ConfigError(ar.path() + ": log spacing requires min > 0");
        s.axes.push_back(a);
    }
    if (s.axes.size() > 2) throw ConfigError("sweep.axes: at most 2 axes supported");
    if (r.has("outputs")) {
        const json& outputs = r.child("outputs");
        if (!outputs.is_array()) throw ConfigError("sweep.outputs: expected an array of strings");
        for (const auto& o : outputs) {
            if (!o.is_string()) throw ConfigError("sweep.outputs: expected an array of strings");
            s.outputs.push_back(o.get<std::string>());
        }
    }
    r.done();
    return s;
}

}  // namespace

Config parse_config(const json& doc) {
    ObjectReader r(doc, "config");
    Config c;
    c.species = r.has("species") ? parse_species(r.child("species")) : rb87();
    if (r.has("trap")) c.trap = parse_trap(r.child("trap"));
    if (r.has("cloud")) c.cloud = parse_cloud(r.child("cloud"));
    if (r.has("beam")) c.beam = parse_beam(r.child("beam"));
    if (r.has("memory")) c.memory = parse_memory(r.child("memory"));
    if (r.has("decoherence")) c.decoherence = parse_decoherence(r.child("decoherence"));
    if (r.has("measurement")) c.measurement = parse_measurement(r.child("measurement"));
    if (r.has("zeeman")) c.zeeman = parse_zeeman(r.child("zeeman"));
    if (r.has("sweep")) c.sweep = parse_sweep(r.child("sweep"));
    r.done();
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config: " + std::string(e.what()));
    }
    return parse_config(doc);
}

json species_to_json(const AtomSpecies& s) {
    json j;
    j["mass_kg"] = s.mass;
    j["lambda_d1_m"] = s.d1.lambda;
    j["lambda_d2_m"] = s.d2.lambda;
    j["alpha_sq_d1"] = s.d1.alpha_sq;
    j["alpha_sq_d2"] = s.d2.alpha_sq;
    j["degeneracy_d1"] = s.d1.degeneracy;
    j["degeneracy_d2"] = s.d2.degeneracy;
    j["gamma_eg_rad_s"] = s.gamma_eg;
    j["delta_gs_rad_s"] = s.delta_gs;
    j["zeta"] = s.zeta;
    j["a_sc_m"] = s.a_sc;
    if (s.im_a_sc) j["im_a_sc_m"] = *s.im_a_sc;
    j["g_f1"] = s.g_f1;
    j["g_f2"] = s.g_f2;
    return j;
}

}  // namespace atsmem
