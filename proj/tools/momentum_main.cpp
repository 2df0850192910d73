#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "momentum/engine.hpp"
#include "momentum/pdf_writer.hpp"
#include "momentum/reporter.hpp"
#include "momentum/runner.hpp"
#include "momentum/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;   // usage / config problems
constexpr int kExitInput = 3;   // malformed input data
constexpr int kExitVerify = 4;  // structural verification failure

std::string default_out_dir() {
    if (const char* env = std::getenv("MOMENTUM_OUT")) {
        return env;
    }
    return "out";
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(std::stod(item));
        }
    }
    return out;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(std::stoull(item));
        }
    }
    return out;
}

struct RunFlags {
    std::string config_path;
    std::string out_dir;
    std::string fixed_timestamp;
    std::string catalog_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool auto_remove = false;
    bool measure_frames = false;
};

momentum::RunConfig load_with_overrides(const RunFlags& flags) {
    momentum::RunConfig cfg = momentum::load_config(flags.config_path);
    if (flags.seed_set) {
        cfg.seed = flags.seed;
    }
    if (flags.auto_remove) {
        cfg.auto_remove = true;
    }
    if (flags.measure_frames) {
        cfg.measure_frame_times = true;
    }
    if (!flags.fixed_timestamp.empty()) {
        cfg.fixed_timestamp = flags.fixed_timestamp;
    }
    if (!flags.catalog_path.empty()) {
        cfg.catalog_path = flags.catalog_path;
    }
    cfg.validate();
    return cfg;
}

int cmd_run(const RunFlags& flags) {
    const momentum::RunConfig cfg = load_with_overrides(flags);
    const auto summary = momentum::sim::write_run_outputs(cfg, flags.out_dir);
    std::cout << "run complete: distance " << summary["run"]["distance"] << " m, "
              << summary["rq1_playability"]["s_total"] << " segments scanned, "
              << summary["rq1_playability"]["s_blocked"] << " blocked, outputs in '"
              << flags.out_dir << "'\n";
    return kExitOk;
}

int cmd_sweep(const RunFlags& flags, const std::string& param, const std::string& values_csv,
              const std::string& seeds_csv) {
    if (param != "p_spawn") {
        std::cerr << "sweep: only --param p_spawn is supported\n";
        return kExitUsage;
    }
    const auto values = parse_double_list(values_csv);
    const auto seeds = parse_seed_list(seeds_csv);
    if (values.empty() || seeds.empty()) {
        std::cerr << "sweep: --values and --seeds must be non-empty\n";
        return kExitUsage;
    }
    momentum::RunConfig base = load_with_overrides(flags);

    std::ostringstream csv;
    csv << "param,value,seed,tiles,mean_realized_per_tile,rho_spawn,r_block,s_total,"
           "encounters,b_detected,b_removed,distance\n";
    for (double value : values) {
        for (std::uint64_t seed : seeds) {
            momentum::RunConfig cfg = base;
            cfg.p_spawn = value;
            cfg.seed = seed;
            momentum::sim::WorldState world = momentum::sim::new_run(cfg);
            const auto result = momentum::sim::run_to_completion(world);
            const auto& acc = world.metrics;
            double realized = 0.0;
            for (const auto& t : acc.tiles) {
                realized += t.realized;
            }
            const double mean_realized =
                acc.tiles.empty() ? 0.0 : realized / static_cast<double>(acc.tiles.size());
            const auto r = momentum::metrics::rates(acc);
            char line[512];
            std::snprintf(line, sizeof(line),
                          "%s,%.6g,%llu,%zu,%.6f,%s,%s,%lld,%lld,%zu,%zu,%.3f\n",
                          param.c_str(), value, static_cast<unsigned long long>(seed),
                          acc.tiles.size(), mean_realized,
                          r.rho_spawn ? std::to_string(*r.rho_spawn).c_str() : "na",
                          r.r_block ? std::to_string(*r.r_block).c_str() : "na",
                          static_cast<long long>(acc.s_total),
                          static_cast<long long>(acc.encounters), acc.b_detected.size(),
                          acc.b_removed.size(), acc.distance);
            csv << line;
        }
    }
    std::cout << csv.str();
    std::filesystem::create_directories(flags.out_dir);
    std::ofstream out(std::filesystem::path(flags.out_dir) / "sweep.csv", std::ios::binary);
    out << csv.str();
    return kExitOk;
}

int cmd_verify(const std::string& config_path) {
    momentum::RunConfig cfg;
    if (!config_path.empty()) {
        cfg = momentum::load_config(config_path);
    }
    const auto report = momentum::verify::verify_structure(cfg);
    std::cout << momentum::verify::render(report);
    return report.all_pass ? kExitOk : kExitVerify;
}

int cmd_report(const std::string& input, const std::string& text_out, const std::string& pdf_out) {
    momentum::report::ReportCache cache;
    try {
        cache = momentum::report::load_reports(input);
    } catch (const std::exception& e) {
        std::cerr << "report: " << e.what() << "\n";
        return kExitInput;
    }
    const std::string text = momentum::report::render_text(cache);
    if (!text_out.empty()) {
        std::ofstream out(text_out, std::ios::binary);
        if (!out) {
            std::cerr << "report: cannot write '" << text_out << "'\n";
            return kExitInput;
        }
        out << text;
    }
    if (!pdf_out.empty()) {
        momentum::report::export_pdf(text, pdf_out);
    }
    if (text_out.empty() && pdf_out.empty()) {
        std::cout << text;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"momentum - deterministic endless-runner world simulator and evaluator"};
    app.require_subcommand(1);

    RunFlags flags;
    flags.out_dir = default_out_dir();

    auto add_shared = [&](CLI::App* cmd, bool need_config) {
        auto* opt = cmd->add_option("--config", flags.config_path, "run config JSON document");
        if (need_config) {
            opt->required();
        }
        cmd->add_option("--seed", flags.seed, "override the config seed")
            ->each([&](const std::string&) { flags.seed_set = true; });
        cmd->add_flag("--auto-remove", flags.auto_remove,
                      "enable aerial auto-removal of detected blockers");
        cmd->add_option("--out", flags.out_dir, "output directory (env MOMENTUM_OUT)");
        cmd->add_option("--fixed-timestamp", flags.fixed_timestamp,
                        "ISO-8601 string stamped into reports for reproducible bytes");
        cmd->add_option("--catalog", flags.catalog_path, "prefab catalog JSON file");
        cmd->add_flag("--measure-frames", flags.measure_frames,
                      "record wall-clock per-tick frame times (non-reproducible)");
    };

    CLI::App* run_cmd = app.add_subcommand("run", "simulate one run and write artifacts");
    add_shared(run_cmd, true);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "parameter sweep over seeds");
    std::string sweep_param = "p_spawn";
    std::string sweep_values;
    std::string sweep_seeds;
    add_shared(sweep_cmd, true);
    sweep_cmd->add_option("--param", sweep_param, "swept parameter (p_spawn)");
    sweep_cmd->add_option("--values", sweep_values, "comma-separated values")->required();
    sweep_cmd->add_option("--seeds", sweep_seeds, "comma-separated seeds")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "recompute structural bounds");
    std::string verify_config;
    verify_cmd->add_option("--config", verify_config, "config to verify (default: built-ins)");

    CLI::App* report_cmd = app.add_subcommand("report", "render a reports.json file");
    std::string report_input;
    std::string report_text;
    std::string report_pdf;
    report_cmd->add_option("--input", report_input, "reports.json path")->required();
    report_cmd->add_option("--text", report_text, "write the text rendering here");
    report_cmd->add_option("--pdf", report_pdf, "write the PDF export here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run_cmd->parsed()) {
            return cmd_run(flags);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(flags, sweep_param, sweep_values, sweep_seeds);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify_config);
        }
        if (report_cmd->parsed()) {
            return cmd_report(report_input, report_text, report_pdf);
        }
    } catch (const momentum::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
