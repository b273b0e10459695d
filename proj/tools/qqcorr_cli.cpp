// qqcorr: thermal correlation measures of the axially symmetric qubit-qutrit model.
//
//   qqcorr point     [--config PATH] [--set KEY=VALUE ...] [--measures LIST] [--out PATH]
//   qqcorr sweep     --config PATH [--steps N] [--jobs N] [--measures LIST] [--out PATH]
//   qqcorr threshold --config PATH [--measure NAME] [--level X] [--out PATH]
//   qqcorr preset    fig1..fig6 [--steps N] [--jobs N] [--summary] [--out PATH]
//
// Exit codes: 0 success, 2 config error, 3 no bracket, 4 numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "qqcorr/qqcorr.hpp"

namespace {

enum ExitCode { kOk = 0, kConfig = 2, kNoBracket = 3, kNumerical = 4 };

struct Common {
    std::string config_path;
    std::string out_path;
    std::string measures;
    std::vector<std::string> settings;
    int steps = 0;
    int jobs = 1;
};

qqcorr::RunConfig load(const Common& c, qqcorr::RunConfig cfg = {}) {
    if (!c.config_path.empty()) {
        std::ifstream in(c.config_path);
        if (!in) throw qqcorr::ConfigError("cannot open '" + c.config_path + "'");
        qqcorr::parse_config(in, cfg);
    }
    for (const auto& kv : c.settings) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw qqcorr::ConfigError("--set expects KEY=VALUE, got '" + kv + "'");
        qqcorr::apply_setting(cfg, qqcorr::trim(std::string_view(kv).substr(0, eq)),
                              qqcorr::trim(std::string_view(kv).substr(eq + 1)));
    }
    if (!c.measures.empty()) cfg.spec.measures = qqcorr::parse_measures(c.measures);
    if (c.steps != 0) cfg.spec.steps = c.steps;
    if (c.jobs < 1) throw qqcorr::ConfigError("--jobs must be at least 1");
    return cfg;
}

// Writes to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw qqcorr::ConfigError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void add_common(CLI::App* cmd, Common& c, bool sweep_flags) {
    cmd->add_option("--config", c.config_path, "key = value configuration file");
    cmd->add_option("--out", c.out_path, "output CSV path (default stdout)");
    cmd->add_option("--set", c.settings, "override a config key, KEY=VALUE (repeatable)");
    if (sweep_flags) {
        cmd->add_option("--measures", c.measures, "comma-separated subset of negativity,min,uin,chsh");
        cmd->add_option("--steps", c.steps, "grid points along the axis");
        cmd->add_option("--jobs", c.jobs, "worker threads (output order is unaffected)");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermal quantum correlations of the axially symmetric qubit-qutrit model"};
    app.require_subcommand(1);

    Common point_opts, sweep_opts, thr_opts, preset_opts;
    auto* point = app.add_subcommand("point", "evaluate all measures at one (parameters, T)");
    add_common(point, point_opts, false);
    point->add_option("--measures", point_opts.measures, "comma-separated subset of negativity,min,uin,chsh");

    auto* sweep = app.add_subcommand("sweep", "sweep one axis, optionally over a series");
    add_common(sweep, sweep_opts, true);

    auto* thr = app.add_subcommand("threshold", "find where a measure crosses a level");
    add_common(thr, thr_opts, false);
    std::string thr_measure;
    double thr_level = 0.0;
    auto* level_opt = thr->add_option("--level", thr_level, "crossing level (default 0, or 2 for chsh)");
    thr->add_option("--measure", thr_measure, "negativity, min, uin or chsh");

    auto* preset = app.add_subcommand("preset", "run one of the figure presets");
    add_common(preset, preset_opts, true);
    std::string preset_name;
    bool summary = false;
    preset->add_option("name", preset_name, "fig1..fig6")->required();
    preset->add_flag("--summary", summary, "emit per-series maxima and crossings instead of the full table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (point->parsed()) {
            qqcorr::RunConfig cfg = load(point_opts);
            if (!(cfg.spec.temperature > 0.0)) throw qqcorr::ConfigError("temperature must be positive");
            qqcorr::SweepRow row;
            row.point.params = cfg.spec.base;
            row.point.T = cfg.spec.temperature;
            row.report = qqcorr::run_point(cfg.spec.base, cfg.spec.temperature, cfg.spec.measures);
            Output out(point_opts.out_path);
            out.stream() << qqcorr::kCsvHeader << '\n' << qqcorr::csv_row("point", "", row) << '\n';
        } else if (sweep->parsed()) {
            const qqcorr::RunConfig cfg = load(sweep_opts);
            qqcorr::validate(cfg.spec);
            const auto rows = qqcorr::run_sweep(cfg.spec, sweep_opts.jobs);
            Output out(sweep_opts.out_path);
            qqcorr::write_sweep_csv(out.stream(), cfg.spec, rows);
        } else if (thr->parsed()) {
            qqcorr::RunConfig cfg = load(thr_opts);
            if (!thr_measure.empty()) qqcorr::apply_setting(cfg, "measure", thr_measure);
            if (level_opt->count() > 0) cfg.threshold_level = thr_level;
            qqcorr::ThresholdQuery q{cfg.spec, cfg.threshold_measure, cfg.level()};
            const auto r = qqcorr::find_threshold(q);
            Output out(thr_opts.out_path);
            out.stream() << "axis,measure,level,crossing,bracket_lo,bracket_hi,direction\n"
                         << cfg.spec.axis << ',' << qqcorr::measure_name(q.measure) << ','
                         << qqcorr::format_double(q.level) << ',' << qqcorr::format_double(r.crossing) << ','
                         << qqcorr::format_double(r.bracket_lo) << ',' << qqcorr::format_double(r.bracket_hi) << ','
                         << (r.falling ? "falling" : "rising") << '\n';
        } else if (preset->parsed()) {
            qqcorr::RunConfig cfg;
            cfg.spec = qqcorr::figure_preset(preset_name);
            cfg = load(preset_opts, cfg);
            const auto rows = qqcorr::run_sweep(cfg.spec, preset_opts.jobs);
            Output out(preset_opts.out_path);
            if (summary)
                qqcorr::write_summary_csv(out.stream(), preset_name, cfg.spec, qqcorr::summarize(cfg.spec, rows));
            else
                qqcorr::write_sweep_csv(out.stream(), cfg.spec, rows);
        }
    } catch (const qqcorr::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    } catch (const qqcorr::UnknownPreset& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    } catch (const qqcorr::InvalidTemperature& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    } catch (const qqcorr::NoBracket& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNoBracket;
    } catch (const qqcorr::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
    return kOk;
}
