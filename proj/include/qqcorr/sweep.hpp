#pragma once
//
// Point evaluation, parameter sweeps, threshold search and figure presets.
//

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "chsh.hpp"
#include "gibbs.hpp"
#include "measures.hpp"

namespace qqcorr {

enum class Measure { negativity, min, uin, chsh };

inline constexpr Measure kAllMeasures[4] = {Measure::negativity, Measure::min, Measure::uin, Measure::chsh};

inline std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::negativity: return "negativity";
        case Measure::min: return "min";
        case Measure::uin: return "uin";
        case Measure::chsh: return "chsh";
    }
    return "";
}

inline std::optional<Measure> parse_measure(std::string_view s) {
    for (Measure m : kAllMeasures)
        if (s == measure_name(m)) return m;
    if (s == "chsh_max") return Measure::chsh;
    return std::nullopt;
}

/// Subset of the four measures.
class MeasureSet {
public:
    MeasureSet() = default;
    static MeasureSet all() {
        MeasureSet s;
        for (Measure m : kAllMeasures) s.add(m);
        return s;
    }
    void add(Measure m) { bits_ |= 1u << static_cast<unsigned>(m); }
    bool contains(Measure m) const { return (bits_ >> static_cast<unsigned>(m)) & 1u; }
    bool empty() const { return bits_ == 0; }
    bool operator==(const MeasureSet&) const = default;

private:
    unsigned bits_ = 0;
};

/// Measure values of one state; unrequested measures stay empty.
struct CorrelationReport {
    std::optional<double> negativity;
    std::optional<double> min_value;
    std::optional<double> uin_value;
    std::optional<double> chsh_max;
    Rotation chsh_rotation = Rotation::Identity();
    int chsh_restarts_agreeing = 0;

    std::optional<double> get(Measure m) const {
        switch (m) {
            case Measure::negativity: return negativity;
            case Measure::min: return min_value;
            case Measure::uin: return uin_value;
            case Measure::chsh: return chsh_max;
        }
        return std::nullopt;
    }
};

inline CorrelationReport evaluate_state(const DensityMatrix& rho, MeasureSet measures = MeasureSet::all()) {
    CorrelationReport r;
    if (measures.contains(Measure::negativity)) r.negativity = negativity(rho);
    if (measures.contains(Measure::min)) r.min_value = min_measure(rho);
    if (measures.contains(Measure::uin)) r.uin_value = uin(rho);
    if (measures.contains(Measure::chsh)) {
        const ChshResult c = chsh_max(rho);
        r.chsh_max = c.value;
        r.chsh_rotation = c.rotation;
        r.chsh_restarts_agreeing = c.restarts_agreeing;
    }
    return r;
}

inline CorrelationReport run_point(const ModelParams& p, double T, MeasureSet measures = MeasureSet::all()) {
    return evaluate_state(gibbs_analytic(p, T), measures);
}

/// A sweep over one named axis ("T" or a coupling), optionally repeated for
/// each value of a second named quantity (the series).
struct SweepSpec {
    ModelParams base;
    double temperature = 1.0;  // ignored when axis == "T"
    std::string axis = "T";
    double start = 0.05;
    double stop = 3.0;
    int steps = 60;
    std::string series_name;  // empty: single curve
    std::vector<double> series_values;
    MeasureSet measures = MeasureSet::all();
};

inline bool is_sweepable(std::string_view name) {
    if (name == "T") return true;
    return std::find(kParamNames.begin(), kParamNames.end(), name) != kParamNames.end();
}

/// Throws ConfigError when the spec violates its invariants.
inline void validate(const SweepSpec& s) {
    if (!is_sweepable(s.axis)) throw ConfigError("unknown axis '" + s.axis + "'");
    if (!(s.start < s.stop)) throw ConfigError("range start must be below stop");
    if (s.steps < 2) throw ConfigError("steps must be at least 2");
    if (!s.series_name.empty()) {
        if (!is_sweepable(s.series_name)) throw ConfigError("unknown series '" + s.series_name + "'");
        if (s.series_name == s.axis) throw ConfigError("series and axis must differ");
        if (s.series_values.empty()) throw ConfigError("series has no values");
    }
    if (s.measures.empty()) throw ConfigError("no measures requested");
    if (!s.base.finite()) throw ConfigError("non-finite coupling");
    const bool t_swept = s.axis == "T" || s.series_name == "T";
    if (!t_swept && !(s.temperature > 0.0 && std::isfinite(s.temperature)))
        throw ConfigError("temperature must be positive");
    if (s.axis == "T" && !(s.start > 0.0)) throw ConfigError("temperature range must be positive");
    if (s.series_name == "T")
        for (double v : s.series_values)
            if (!(v > 0.0)) throw ConfigError("temperature series values must be positive");
}

/// Coordinates of one grid point.
struct GridPoint {
    ModelParams params;
    double T = 1.0;
    double axis_value = 0.0;
    std::optional<double> series_value;
};

/// Sets a sweepable quantity on a (params, T) pair.
inline void assign(ModelParams& p, double& T, std::string_view name, double value) {
    if (name == "T") {
        T = value;
        return;
    }
    double* slot = param_ref(p, name);
    if (!slot) throw ConfigError("unknown quantity '" + std::string(name) + "'");
    *slot = value;
}

inline double axis_coordinate(const SweepSpec& s, int i) {
    if (i == s.steps - 1) return s.stop;
    return s.start + (s.stop - s.start) * static_cast<double>(i) / static_cast<double>(s.steps - 1);
}

/// Grid points ordered by (series index, axis index).
inline std::vector<GridPoint> sweep_grid(const SweepSpec& s) {
    validate(s);
    std::vector<std::optional<double>> series;
    if (s.series_name.empty())
        series.push_back(std::nullopt);
    else
        for (double v : s.series_values) series.emplace_back(v);

    std::vector<GridPoint> grid;
    for (const auto& sv : series) {
        for (int i = 0; i < s.steps; ++i) {
            GridPoint g;
            g.params = s.base;
            g.T = s.temperature;
            if (sv) assign(g.params, g.T, s.series_name, *sv);
            g.axis_value = axis_coordinate(s, i);
            assign(g.params, g.T, s.axis, g.axis_value);
            g.series_value = sv;
            grid.push_back(g);
        }
    }
    return grid;
}

struct SweepRow {
    GridPoint point;
    CorrelationReport report;
};

/// Raised when a grid point fails; carries the coordinates in its message.
class GridPointError : public NumericalError {
public:
    GridPointError(const GridPoint& g, const std::string& cause)
        : NumericalError("grid point T=" + std::to_string(g.T) + " axis=" + std::to_string(g.axis_value) +
                         (g.series_value ? " series=" + std::to_string(*g.series_value) : std::string()) + ": " +
                         cause) {}
};

/// Evaluates every grid point; `jobs` worker threads share the grid, the
/// row order is fixed by the grid regardless.
inline std::vector<SweepRow> run_sweep(const SweepSpec& s, int jobs = 1) {
    const std::vector<GridPoint> grid = sweep_grid(s);
    std::vector<SweepRow> rows(grid.size());
    std::vector<std::exception_ptr> failures(grid.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            rows[i].point = grid[i];
            try {
                rows[i].report = run_point(grid[i].params, grid[i].T, s.measures);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(grid.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    }

    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!failures[i]) continue;
        try {
            std::rethrow_exception(failures[i]);
        } catch (const std::exception& e) {
            throw GridPointError(grid[i], e.what());
        }
    }
    return rows;
}

// ---------------------------------------------------------------- thresholds

struct ThresholdResult {
    double crossing = 0.0;  // on the at-or-below-level side, within tolerance of the true crossing
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    bool falling = true;  // above the level at lower axis values
};

inline constexpr int kPrescanPoints = 64;

/// Locates where f crosses `level` on [start, stop].
///
/// A point counts as above the level when f > level (f > 1e-12 for level
/// 0). A 64-point pre-scan picks the first sign-change bracket; bisection
/// then narrows it to `tol`. Throws NoBracket when the pre-scan sees no
/// change.
inline ThresholdResult find_threshold(const std::function<double(double)>& f, double start, double stop, double level,
                                      double tol = 1e-6) {
    if (!(start < stop)) throw ConfigError("threshold range start must be below stop");
    const double cut = level == 0.0 ? 1e-12 : level;
    auto above = [&](double x) { return f(x) > cut; };

    double prev_x = start;
    bool prev_above = above(start);
    for (int k = 1; k < kPrescanPoints; ++k) {
        const double x = k == kPrescanPoints - 1
                             ? stop
                             : start + (stop - start) * static_cast<double>(k) / (kPrescanPoints - 1);
        const bool a = above(x);
        if (a != prev_above) {
            double lo = prev_x, hi = x;
            const bool falling = prev_above;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                if (above(mid) == prev_above)
                    lo = mid;
                else
                    hi = mid;
            }
            return {falling ? hi : lo, lo, hi, falling};
        }
        prev_x = x;
        prev_above = a;
    }
    throw NoBracket("level " + std::to_string(level) + " not crossed on [" + std::to_string(start) + ", " +
                    std::to_string(stop) + "]");
}

struct ThresholdQuery {
    SweepSpec spec;  // the axis and range to search; at most one series value
    Measure measure = Measure::negativity;
    double level = 0.0;
};

inline double measure_at(const ModelParams& p, double T, Measure m) {
    MeasureSet s;
    s.add(m);
    return *run_point(p, T, s).get(m);
}

inline ThresholdResult find_threshold(const ThresholdQuery& q) {
    SweepSpec s = q.spec;
    s.measures = MeasureSet{};
    s.measures.add(q.measure);
    validate(s);
    if (s.series_values.size() > 1) throw ConfigError("threshold query takes a single series value");
    ModelParams base = s.base;
    double base_t = s.temperature;
    if (!s.series_name.empty()) assign(base, base_t, s.series_name, s.series_values.front());
    auto f = [&](double x) {
        ModelParams p = base;
        double T = base_t;
        assign(p, T, s.axis, x);
        return measure_at(p, T, q.measure);
    };
    return find_threshold(f, s.start, s.stop, q.level);
}

/// Conventional crossing level: 2 for CHSH (classical bound), 0 otherwise.
inline double default_level(Measure m) { return m == Measure::chsh ? 2.0 : 0.0; }

// ------------------------------------------------------------------- presets

inline constexpr std::string_view kPresetNames[6] = {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"};

/// Parameter sets of the six published scans. Axis ranges (T in [0.05, 3],
/// couplings in [-3, 3]) and the fig2 J series are conventions of this tool.
inline SweepSpec figure_preset(std::string_view name) {
    ModelParams common;
    common.K = 0.2;
    common.K1 = -0.1;
    common.K2 = 0.22;
    common.Dz = 0.32;
    common.Gamma = -0.87;
    common.Lambda = 0.31;

    SweepSpec s;
    s.base = common;
    if (name == "fig1" || name == "fig2") {
        s.base.B1 = 0.3;
        s.base.B2 = -0.7;
        s.axis = "T";
        s.start = 0.05;
        s.stop = 3.0;
        s.steps = 60;
        if (name == "fig1") {
            s.base.J = 0.0;
            s.series_name = "Jz";
            s.series_values = {1.0, 2.0, 3.0};
        } else {
            s.base.Jz = 1.0;
            s.series_name = "J";
            s.series_values = {0.0, -0.7, -1.4, -2.1};
        }
        return s;
    }
    s.start = -3.0;
    s.stop = 3.0;
    s.steps = 120;
    s.series_name = "T";
    s.series_values = {0.5, 1.0, 1.5};
    if (name == "fig3" || name == "fig4") {
        s.base.J = -2.5;
        s.base.Jz = -1.0;
        s.axis = name == "fig3" ? "B1" : "B2";
        return s;
    }
    if (name == "fig5" || name == "fig6") {
        s.base.B1 = 0.3;
        s.base.B2 = -0.7;
        s.base.J = -1.4;
        s.base.Jz = 1.0;
        s.axis = name == "fig5" ? "K1" : "K2";
        return s;
    }
    throw UnknownPreset(std::string(name));
}

// ------------------------------------------------------------------ summary

/// Per-series, per-measure summary of a sweep: the maximum value and the
/// first bracketed crossing of the conventional level (if any).
struct SummaryEntry {
    std::optional<double> series_value;
    Measure measure = Measure::negativity;
    double max_value = 0.0;
    std::optional<double> crossing;
};

inline std::vector<SummaryEntry> summarize(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    std::vector<SummaryEntry> out;
    std::vector<std::optional<double>> series;
    if (spec.series_name.empty())
        series.push_back(std::nullopt);
    else
        for (double v : spec.series_values) series.emplace_back(v);

    for (std::size_t si = 0; si < series.size(); ++si) {
        for (Measure m : kAllMeasures) {
            if (!spec.measures.contains(m)) continue;
            SummaryEntry e;
            e.series_value = series[si];
            e.measure = m;
            e.max_value = -1.0;
            for (int i = 0; i < spec.steps; ++i) {
                const auto& row = rows[si * static_cast<std::size_t>(spec.steps) + static_cast<std::size_t>(i)];
                e.max_value = std::max(e.max_value, *row.report.get(m));
            }
            ThresholdQuery q;
            q.spec = spec;
            q.spec.series_values.clear();
            if (series[si]) q.spec.series_values.push_back(*series[si]);
            q.measure = m;
            q.level = default_level(m);
            try {
                e.crossing = find_threshold(q).crossing;
            } catch (const NoBracket&) {
            }
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace qqcorr
