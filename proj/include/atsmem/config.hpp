#ifndef ATSMEM_CONFIG_HPP
#define ATSMEM_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "atsmem/cloud.hpp"
#include "atsmem/counting.hpp"
#include "atsmem/decoherence.hpp"
#include "atsmem/memory.hpp"
#include "atsmem/optics.hpp"
#include "atsmem/species.hpp"
#include "atsmem/zeeman.hpp"

namespace atsmem {

using json = nlohmann::ordered_json;

struct CloudSection {
    double n_total = 0;
    double temperature = 0;          // K
    std::optional<double> f_bec;     // explicit condensate fraction
    std::optional<double> t_c;       // K; enables f_bec(T) when sweeping temperature
    double tof = 0;                  // s
};

struct MemorySection {
    Protocol protocol = Protocol::ats;
    Recall recall = Recall::forward;
    Line line = Line::d2;
    double bandwidth = 0;            // Hz; resolved from tau_p_s or bandwidth_hz
};

struct DecoherenceSection {
    double theta = 0;                // rad
    std::optional<double> tau_mag;   // s
    std::optional<double> t_s0;      // s
    std::optional<double> r_p;       // m; defaults to a circular beam diameter
    DecayModel model = DecayModel::predict;
};

struct MeasurementSection {
    MeasurementPlan plan;
    double eta_m = 0;                // injected efficiency for simulations
    double tau_p = 20e-9;            // recall-pulse FWHM, s
};

struct ZeemanSection {
    double b_field = 0;              // T
    double g_f = 0.5;
    SpinWaveAmplitudes q{0, 1, 0};
    bool apply_decay = false;
};

struct SweepAxis {
    std::string variable;            // temperature | beam_diameter | bandwidth | angle
                                     // | storage_time | b_field | n_bar_in
    double min = 0;
    double max = 0;
    int steps = 0;
    bool log_spacing = false;
};

struct SweepSection {
    std::vector<SweepAxis> axes;
    std::vector<std::string> outputs;  // optional column filter
};

struct Config {
    AtomSpecies species;
    std::optional<TrapConfig> trap;
    std::optional<CloudSection> cloud;
    std::optional<BeamProfile> beam;
    std::optional<MemorySection> memory;
    std::optional<DecoherenceSection> decoherence;
    std::optional<MeasurementSection> measurement;
    std::optional<ZeemanSection> zeeman;
    std::optional<SweepSection> sweep;
};

// Parse and validate a config document. Unknown keys anywhere are errors;
// out-of-domain physics (negative temperatures, fractions outside [0,1], bad
// sweep ranges) is rejected here, before any computation.
Config parse_config(const json& doc);
Config load_config(const std::string& path);

// Species serialization for config echo and round-trips.
json species_to_json(const AtomSpecies& s);

}  // namespace atsmem

#endif  // ATSMEM_CONFIG_HPP
