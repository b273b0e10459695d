#pragma once
//
// Text formats: the sweep CSV, the summary CSV and `key = value` config files.
//

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sweep.hpp"

namespace qqcorr {

inline constexpr std::string_view kCsvHeader =
    "axis,series_name,series_value,T,B1,B2,J,Jz,K,K1,K2,Dz,Gamma,Lambda,negativity,min,uin,chsh_max";

inline constexpr std::string_view kSummaryHeader = "preset,series_name,series_value,measure,max_value,crossing";

/// 12 significant digits, '.' separator, independent of the global locale.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

inline std::string format_optional(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

inline std::string csv_row(std::string_view axis, std::string_view series_name, const SweepRow& row) {
    std::string out;
    out.append(axis).append(",").append(series_name).append(",");
    out += format_optional(row.point.series_value);
    out += "," + format_double(row.point.T);
    for (double v : param_values(row.point.params)) out += "," + format_double(v);
    for (Measure m : kAllMeasures) out += "," + format_optional(row.report.get(m));
    return out;
}

inline void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    os << kCsvHeader << '\n';
    for (const auto& r : rows) os << csv_row(spec.axis, spec.series_name, r) << '\n';
}

inline void write_summary_csv(std::ostream& os, std::string_view preset, const SweepSpec& spec,
                              const std::vector<SummaryEntry>& entries) {
    os << kSummaryHeader << '\n';
    for (const auto& e : entries) {
        os << preset << ',' << spec.series_name << ',' << format_optional(e.series_value) << ','
           << measure_name(e.measure) << ',' << format_double(e.max_value) << ',' << format_optional(e.crossing)
           << '\n';
    }
}

// ------------------------------------------------------------------- parsing

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        parts.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

inline double parse_double(std::string_view s) {
    s = trim(s);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
        throw ConfigError("not a number: '" + std::string(s) + "'");
    return v;
}

inline int parse_int(std::string_view s) {
    s = trim(s);
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError("not an integer: '" + std::string(s) + "'");
    return v;
}

inline MeasureSet parse_measures(std::string_view list) {
    MeasureSet set;
    for (auto item : split(list, ',')) {
        if (item.empty()) continue;
        const auto m = parse_measure(item);
        if (!m) throw ConfigError("unknown measure '" + std::string(item) + "'");
        set.add(*m);
    }
    if (set.empty()) throw ConfigError("empty measure list");
    return set;
}

/// Everything a config file can set: a sweep plus the threshold target.
struct RunConfig {
    SweepSpec spec;
    Measure threshold_measure = Measure::negativity;
    std::optional<double> threshold_level;  // defaults to default_level(measure)

    double level() const { return threshold_level ? *threshold_level : default_level(threshold_measure); }
};

/// Applies one `key = value` setting.
inline void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
    SweepSpec& s = cfg.spec;
    if (double* slot = param_ref(s.base, key)) {
        *slot = parse_double(value);
    } else if (key == "temperature" || key == "T") {
        s.temperature = parse_double(value);
    } else if (key == "axis") {
        s.axis = std::string(value);
    } else if (key == "range") {
        const auto parts = split(value, ',');
        if (parts.size() != 2) throw ConfigError("range takes 'start, stop'");
        s.start = parse_double(parts[0]);
        s.stop = parse_double(parts[1]);
    } else if (key == "start") {
        s.start = parse_double(value);
    } else if (key == "stop") {
        s.stop = parse_double(value);
    } else if (key == "steps") {
        s.steps = parse_int(value);
    } else if (key == "series") {
        const auto colon = value.find(':');
        if (colon == std::string_view::npos) throw ConfigError("series takes 'name: v1, v2, ...'");
        s.series_name = std::string(trim(value.substr(0, colon)));
        s.series_values.clear();
        for (auto v : split(value.substr(colon + 1), ','))
            if (!v.empty()) s.series_values.push_back(parse_double(v));
    } else if (key == "measures") {
        s.measures = parse_measures(value);
    } else if (key == "measure") {
        const auto m = parse_measure(trim(value));
        if (!m) throw ConfigError("unknown measure '" + std::string(value) + "'");
        cfg.threshold_measure = *m;
    } else if (key == "level") {
        cfg.threshold_level = parse_double(value);
    } else {
        throw ConfigError("unknown key '" + std::string(key) + "'");
    }
}

/// Parses `key = value` lines; '#' starts a comment.
inline void parse_config(std::istream& in, RunConfig& cfg) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view v = line;
        if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
        v = trim(v);
        if (v.empty()) continue;
        const auto eq = v.find('=');
        if (eq == std::string_view::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        try {
            apply_setting(cfg, trim(v.substr(0, eq)), trim(v.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
}

inline RunConfig parse_config_string(const std::string& text, RunConfig cfg = {}) {
    std::istringstream in(text);
    parse_config(in, cfg);
    return cfg;
}

// ---------------------------------------------------------- reading back

/// A parsed CSV table (no quoting; the formats here never need it).
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(std::string_view name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        return -1;
    }
};

inline CsvTable read_csv(std::istream& in) {
    CsvTable t;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        for (auto c : split(line, ',')) cells.emplace_back(c);
        if (first) {
            t.header = std::move(cells);
            first = false;
        } else {
            t.rows.push_back(std::move(cells));
        }
    }
    return t;
}

}  // namespace qqcorr
