#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "atsmem/commands.hpp"
#include "atsmem/errors.hpp"

namespace {

// Exit codes: 0 success, 2 config error, 3 numerical-convergence failure.
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

void emit(const atsmem::Table& table, const std::string& out_path, bool as_json) {
    if (out_path.empty() || out_path == "-") {
        if (as_json)
            atsmem::write_json(table, std::cout);
        else
            atsmem::write_csv(table, std::cout);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw atsmem::ConfigError("cannot open output file '" + out_path + "'");
    if (as_json)
        atsmem::write_json(table, out);
    else
        atsmem::write_csv(table, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ATS spin-wave memory performance model"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path = "-";
    std::string data_path;
    std::uint64_t seed = 0;
    bool as_json = false;
    atsmem::GammaConvention gamma = atsmem::GammaConvention::half;
    const std::map<std::string, atsmem::GammaConvention> gamma_map{
        {"half", atsmem::GammaConvention::half}, {"full", atsmem::GammaConvention::full}};

    app.add_option("--config", config_path, "JSON config file")->required();
    app.add_option("--seed", seed, "master RNG seed");
    app.add_option("--out", out_path, "output path ('-' for stdout)");
    app.add_flag("--json", as_json, "emit JSON instead of CSV");
    app.add_option("--gamma-convention", gamma,
                   "rate multiplying d in the FWM noise strength: half (=gamma_eg) or full "
                   "(=Gamma_eg)")
        ->transform(CLI::CheckedTransformer(gamma_map, CLI::ignore_case));

    CLI::App* predict_od = app.add_subcommand("predict-od", "optical depth and efficiency grid");
    CLI::App* lifetime = app.add_subcommand("lifetime", "memory lifetime grid");
    CLI::App* fwm_compare = app.add_subcommand("fwm-compare", "ATS vs EIT noise-strength curves");
    CLI::App* zeeman = app.add_subcommand("zeeman", "Zeeman interference tables");
    CLI::App* simulate = app.add_subcommand("simulate-counts", "photon-counting simulation");
    CLI::App* fit = app.add_subcommand("fit", "fit tau_mag to storage-time data");
    fit->add_option("--data", data_path, "CSV file with columns t_s, eta")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const atsmem::Config config = atsmem::load_config(config_path);
        atsmem::Table table;
        if (predict_od->parsed()) {
            table = atsmem::cmd_predict_od(config);
        } else if (lifetime->parsed()) {
            table = atsmem::cmd_lifetime(config);
        } else if (fwm_compare->parsed()) {
            table = atsmem::cmd_fwm_compare(config, gamma);
        } else if (zeeman->parsed()) {
            table = atsmem::cmd_zeeman(config);
        } else if (simulate->parsed()) {
            table = atsmem::cmd_simulate_counts(config, seed);
        } else if (fit->parsed()) {
            const auto data = atsmem::load_fit_data(data_path);
            table = atsmem::cmd_fit(config, data);
        }
        emit(table, out_path, as_json);
        return 0;
    } catch (const atsmem::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::logic_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const atsmem::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
