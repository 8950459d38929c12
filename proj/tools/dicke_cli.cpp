// dicke_cli.cpp — scenario runner for the M=1 inhomogeneous Dicke simulator.
//
// Subcommands: spectrum, evolve, compare, sweep, preset. Exit codes:
// 0 success, 2 config error, 3 numerical failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dicke/csv.hpp"
#include "dicke/errors.hpp"
#include "dicke/presets.hpp"
#include "dicke/scenario.hpp"
#include "dicke/version.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool oracle = false;
    bool asymptotic = false;
    bool gnuplot = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dicke::ConfigError("cannot read config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

dicke::scenario::ScenarioConfig load_config(const CommonOpts& opts) {
    auto cfg = dicke::scenario::parse_config(slurp(opts.config_path));
    if (opts.seed_set) cfg.seed = opts.seed;
    if (opts.oracle) cfg.comparison.oracle = true;
    if (opts.asymptotic) cfg.comparison.asymptotic = true;
    return cfg;
}

void write_outputs(const CommonOpts& opts, const std::string& stem,
                   const std::vector<dicke::scenario::EvolutionOutput>& outputs) {
    fs::create_directories(opts.out_dir);
    std::vector<std::string> files;
    for (const auto& out : outputs) {
        const auto path = fs::path(opts.out_dir) / (stem + out.name + ".csv");
        dicke::io::write_atomic(path, out.csv);
        std::cout << "wrote " << path.string() << "\n";
        files.push_back(path.filename().string());
    }
    if (opts.gnuplot) {
        std::ostringstream gp;
        gp << "# gnuplot companion script\n";
        gp << "set xlabel 't (1/omega)'\n";
        gp << "set ylabel '|amplitude|'\n";
        gp << "set datafile separator ','\n";
        gp << "set key autotitle columnhead\n";
        for (const auto& f : files) {
            gp << "plot '" << f << "' using 1:4 with lines title '" << f << "'\n";
            gp << "pause -1\n";
        }
        const auto path = fs::path(opts.out_dir) / (stem + "plot.gp");
        dicke::io::write_atomic(path, gp.str());
        std::cout << "wrote " << path.string() << "\n";
    }
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_config) {
    auto* c = cmd->add_option("--config", opts.config_path, "scenario config file (JSON)");
    if (needs_config) c->required();
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--seed", opts.seed, "override the disorder seed")
        ->each([&opts](const std::string&) { opts.seed_set = true; });
    cmd->add_flag("--oracle", opts.oracle, "add dense-diagonalization columns");
    cmd->add_flag("--asymptotic", opts.asymptotic, "add closed-form columns");
    cmd->add_flag("--gnuplot", opts.gnuplot, "emit a companion gnuplot script");
}

void print_warnings(const dicke::scenario::ScenarioConfig& cfg) {
    const auto p = dicke::scenario::resolve_params(cfg);
    for (const auto& w : dicke::model::validate(p)) {
        std::cerr << "warning: " << w << "\n";
    }
}

int dispatch(const std::string& cmd, const CommonOpts& opts, bool with_states,
             const std::string& preset_name) {
    using namespace dicke;

    if (cmd == "preset") {
        if (preset_name == "list") {
            for (const auto& n : presets::names()) std::cout << n << "\n";
            return 0;
        }
        CommonOpts run = opts;
        const auto& text = presets::get(preset_name);
        auto cfg = scenario::parse_config(text);
        if (run.seed_set) cfg.seed = run.seed;
        if (run.oracle) cfg.comparison.oracle = true;
        if (run.asymptotic) cfg.comparison.asymptotic = true;
        print_warnings(cfg);
        fs::create_directories(run.out_dir);
        const auto cfg_path = fs::path(run.out_dir) / (preset_name + ".json");
        io::write_atomic(cfg_path, text);
        std::cout << "wrote " << cfg_path.string() << "\n";
        if (cfg.sweep) {
            const auto path = fs::path(run.out_dir) / (preset_name + "_sweep.csv");
            io::write_atomic(path, scenario::sweep_csv(cfg));
            std::cout << "wrote " << path.string() << "\n";
        } else {
            write_outputs(run, preset_name + "_", scenario::run_evolution(cfg));
        }
        return 0;
    }

    auto cfg = load_config(opts);
    print_warnings(cfg);

    if (cmd == "spectrum") {
        const auto p = scenario::resolve_params(cfg);
        const auto csv = scenario::spectrum_csv(p, with_states, cfg.comparison.oracle);
        fs::create_directories(opts.out_dir);
        const auto path = fs::path(opts.out_dir) / "spectrum.csv";
        io::write_atomic(path, csv);
        std::cout << "wrote " << path.string() << "\n";
        return 0;
    }
    if (cmd == "evolve") {
        write_outputs(opts, "", scenario::run_evolution(cfg));
        return 0;
    }
    if (cmd == "compare") {
        cfg.comparison.asymptotic = true;
        write_outputs(opts, "", scenario::run_compare(cfg));
        return 0;
    }
    if (cmd == "sweep") {
        const auto csv = scenario::sweep_csv(cfg);
        fs::create_directories(opts.out_dir);
        const auto path = fs::path(opts.out_dir) / "sweep.csv";
        io::write_atomic(path, csv);
        std::cout << "wrote " << path.string() << "\n";
        return 0;
    }
    throw dicke::ConfigError("unknown subcommand: " + cmd);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact M=1 dynamics of the inhomogeneous Dicke model"};
    app.set_version_flag("--version", std::string("dicke-bethe ") + dicke::kVersion);
    app.require_subcommand(1);

    CommonOpts opts;
    bool with_states = false;
    std::string preset_name;

    auto* spectrum = app.add_subcommand("spectrum", "solve and dump all L+1 roots");
    add_common(spectrum, opts, true);
    spectrum->add_flag("--states", with_states, "append per-root darkness");

    auto* evolve = app.add_subcommand("evolve", "evolve an initial state and dump traces");
    add_common(evolve, opts, true);

    auto* compare = app.add_subcommand("compare", "exact vs asymptotic trace columns");
    add_common(compare, opts, true);

    auto* sweep = app.add_subcommand("sweep", "seeded disorder ensemble summary");
    add_common(sweep, opts, true);

    auto* preset = app.add_subcommand("preset", "run a bundled figure scenario (or 'list')");
    preset->add_option("name", preset_name, "preset name")->required();
    add_common(preset, opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        return dispatch(cmd, opts, with_states, preset_name);
    } catch (const dicke::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const dicke::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
