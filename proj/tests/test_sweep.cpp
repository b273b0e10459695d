#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

using namespace qqcorr;

namespace {

SweepSpec small_spec() {
    SweepSpec s = figure_preset("fig1");
    s.steps = 4;
    s.start = 0.2;
    s.stop = 1.4;
    s.series_values = {1.0, 2.0};
    s.measures = MeasureSet{};
    s.measures.add(Measure::negativity);
    s.measures.add(Measure::uin);
    return s;
}

std::string to_csv(const SweepSpec& s, const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    write_sweep_csv(os, s, rows);
    return os.str();
}

}  // namespace

TEST(Presets, Fig1MatchesCaption) {
    const SweepSpec s = figure_preset("fig1");
    const ModelParams& b = s.base;
    EXPECT_EQ(b.B1, 0.3);
    EXPECT_EQ(b.B2, -0.7);
    EXPECT_EQ(b.J, 0.0);
    EXPECT_EQ(b.K, 0.2);
    EXPECT_EQ(b.K1, -0.1);
    EXPECT_EQ(b.K2, 0.22);
    EXPECT_EQ(b.Dz, 0.32);
    EXPECT_EQ(b.Gamma, -0.87);
    EXPECT_EQ(b.Lambda, 0.31);
    EXPECT_EQ(s.axis, "T");
    EXPECT_EQ(s.series_name, "Jz");
    EXPECT_EQ(s.series_values, (std::vector<double>{1, 2, 3}));
}

TEST(Presets, FieldAndAnisotropyScans) {
    const SweepSpec f2 = figure_preset("fig2");
    EXPECT_EQ(f2.base.Jz, 1.0);
    EXPECT_EQ(f2.series_name, "J");

    for (auto name : {"fig3", "fig4"}) {
        const SweepSpec s = figure_preset(name);
        EXPECT_EQ(s.base.J, -2.5);
        EXPECT_EQ(s.base.Jz, -1.0);
        EXPECT_EQ(s.series_name, "T");
        EXPECT_EQ(s.series_values, (std::vector<double>{0.5, 1.0, 1.5}));
    }
    EXPECT_EQ(figure_preset("fig3").axis, "B1");
    EXPECT_EQ(figure_preset("fig3").base.B2, 0.0);
    EXPECT_EQ(figure_preset("fig4").axis, "B2");
    EXPECT_EQ(figure_preset("fig4").base.B1, 0.0);

    const SweepSpec f5 = figure_preset("fig5"), f6 = figure_preset("fig6");
    EXPECT_EQ(f5.axis, "K1");
    EXPECT_EQ(f5.base.J, -1.4);
    EXPECT_EQ(f5.base.K2, 0.22);
    EXPECT_EQ(f6.axis, "K2");
    EXPECT_EQ(f6.base.K1, -0.1);
    EXPECT_EQ(f6.base.K, 0.2);
    EXPECT_EQ(f6.base.Jz, 1.0);

    EXPECT_THROW(figure_preset("fig7"), UnknownPreset);
}

TEST(Sweep, GridOrderingAndPointEquivalence) {
    const SweepSpec s = small_spec();
    const auto rows = run_sweep(s);
    ASSERT_EQ(rows.size(), 8u);
    EXPECT_EQ(*rows[0].point.series_value, 1.0);
    EXPECT_EQ(*rows[4].point.series_value, 2.0);
    EXPECT_EQ(rows[0].point.T, 0.2);
    EXPECT_EQ(rows[3].point.T, 1.4);
    EXPECT_EQ(rows[5].point.params.Jz, 2.0);
    for (const auto& r : rows) {
        const auto direct = run_point(r.point.params, r.point.T, s.measures);
        EXPECT_EQ(r.report.negativity, direct.negativity);
        EXPECT_EQ(r.report.uin_value, direct.uin_value);
        EXPECT_FALSE(r.report.min_value.has_value());
        EXPECT_FALSE(r.report.chsh_max.has_value());
    }
}

TEST(Sweep, OutputIndependentOfJobs) {
    SweepSpec s = small_spec();
    s.measures = MeasureSet::all();
    EXPECT_EQ(to_csv(s, run_sweep(s, 1)), to_csv(s, run_sweep(s, 3)));
}

TEST(Sweep, TwoPointDegenerateSweep) {
    SweepSpec s;
    s.base = figure_preset("fig1").base;
    s.axis = "B1";
    s.temperature = 0.5;
    s.start = 0.3;
    s.stop = 0.3 + 1e-9;
    s.steps = 2;
    EXPECT_EQ(run_sweep(s).size(), 2u);
}

TEST(Sweep, ValidationErrors) {
    SweepSpec s = small_spec();
    s.start = 2.0;
    s.stop = 1.0;
    EXPECT_THROW(validate(s), ConfigError);
    s = small_spec();
    s.series_name = "T";
    EXPECT_THROW(validate(s), ConfigError);
    s = small_spec();
    s.axis = "Q";
    EXPECT_THROW(validate(s), ConfigError);
    s = small_spec();
    s.steps = 1;
    EXPECT_THROW(validate(s), ConfigError);
    s = small_spec();
    s.start = -1.0;
    EXPECT_THROW(validate(s), ConfigError);
}

TEST(Threshold, LinearStubRecoversCrossing) {
    const double root = 0.73125;
    const auto r = find_threshold([&](double x) { return root - x; }, 0.0, 2.0, 0.0);
    EXPECT_NEAR(r.crossing, root, 1e-6);
    EXPECT_TRUE(r.falling);
    const auto up = find_threshold([&](double x) { return 3.0 * (x - 1.2); }, -1.0, 2.0, 2.0);
    EXPECT_NEAR(up.crossing, 1.2 + 2.0 / 3.0, 1e-6);
    EXPECT_FALSE(up.falling);
}

TEST(Threshold, ConstantMeasureHasNoBracket) {
    EXPECT_THROW(find_threshold([](double) { return 0.4; }, 0.0, 1.0, 0.0), NoBracket);
}

TEST(Threshold, DeathPointIsAtOrBelowLevel) {
    // Clamped function: exactly zero past 0.5.
    auto f = [](double x) { return std::max(0.0, 0.5 - x); };
    const auto r = find_threshold(f, 0.0, 1.0, 0.0);
    EXPECT_LE(f(r.crossing), 1e-12);
    EXPECT_NEAR(r.crossing, 0.5, 1e-6);
}

TEST(Threshold, Fig1FragilityOrdering) {
    SweepSpec s = figure_preset("fig1");
    s.series_values = {1.0};
    const double t_chsh = find_threshold(ThresholdQuery{s, Measure::chsh, 2.0}).crossing;
    const double t_neg = find_threshold(ThresholdQuery{s, Measure::negativity, 0.0}).crossing;
    SweepSpec wide = s;
    wide.stop = 20.0;
    const double t_uin = find_threshold(ThresholdQuery{wide, Measure::uin, 0.01}).crossing;
    EXPECT_LT(t_chsh, t_neg);
    EXPECT_LT(t_neg, t_uin);
}

TEST(Io, FormatDouble) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(2.0), "2");
    EXPECT_EQ(format_double(-0.87), "-0.87");
    EXPECT_EQ(format_double(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_double(1e-20), "1e-20");
}

TEST(Io, CsvHeaderAndRows) {
    const SweepSpec s = small_spec();
    const auto rows = run_sweep(s);
    std::istringstream in(to_csv(s, rows));
    const CsvTable t = read_csv(in);
    EXPECT_EQ(t.header.size(), 18u);
    std::string joined;
    for (const auto& h : t.header) joined += (joined.empty() ? "" : ",") + h;
    EXPECT_EQ(joined, "axis,series_name,series_value,T,B1,B2,J,Jz,K,K1,K2,Dz,Gamma,Lambda,negativity,min,uin,chsh_max");
    ASSERT_EQ(t.rows.size(), rows.size());
    EXPECT_EQ(t.rows[0][0], "T");
    EXPECT_EQ(t.rows[0][1], "Jz");
    EXPECT_EQ(t.rows[0][2], "1");
    EXPECT_EQ(t.rows[0][t.column("min")], "");
    EXPECT_EQ(std::stod(t.rows[1][t.column("negativity")]), std::stod(format_double(*rows[1].report.negativity)));
}

TEST(Io, ConfigParsing) {
    const RunConfig cfg = parse_config_string(R"(
# fig3-like scan
B1 = 0.1
J = -2.5   # ferro
Jz=-1
temperature = 0.5
axis = B1
range = -3, 3
steps = 11
series = T: 0.5, 1, 1.5
measures = negativity, chsh
measure = chsh
)");
    EXPECT_EQ(cfg.spec.base.B1, 0.1);
    EXPECT_EQ(cfg.spec.base.J, -2.5);
    EXPECT_EQ(cfg.spec.base.Jz, -1.0);
    EXPECT_EQ(cfg.spec.temperature, 0.5);
    EXPECT_EQ(cfg.spec.axis, "B1");
    EXPECT_EQ(cfg.spec.start, -3.0);
    EXPECT_EQ(cfg.spec.stop, 3.0);
    EXPECT_EQ(cfg.spec.steps, 11);
    EXPECT_EQ(cfg.spec.series_name, "T");
    EXPECT_EQ(cfg.spec.series_values, (std::vector<double>{0.5, 1.0, 1.5}));
    EXPECT_TRUE(cfg.spec.measures.contains(Measure::chsh));
    EXPECT_FALSE(cfg.spec.measures.contains(Measure::min));
    EXPECT_EQ(cfg.threshold_measure, Measure::chsh);
    EXPECT_EQ(cfg.level(), 2.0);
}

TEST(Io, ConfigErrors) {
    EXPECT_THROW(parse_config_string("B1 0.3\n"), ConfigError);
    EXPECT_THROW(parse_config_string("B7 = 0.3\n"), ConfigError);
    EXPECT_THROW(parse_config_string("B1 = abc\n"), ConfigError);
    EXPECT_THROW(parse_config_string("measures = negativity, bogus\n"), ConfigError);
    EXPECT_THROW(parse_config_string("range = 1\n"), ConfigError);
}

TEST(Io, SummaryRoundTrip) {
    SweepSpec s = small_spec();
    s.series_values = {1.0};
    const auto rows = run_sweep(s);
    const auto entries = summarize(s, rows);
    ASSERT_EQ(entries.size(), 2u);
    std::ostringstream os;
    write_summary_csv(os, "fig1", s, entries);
    std::istringstream in(os.str());
    const CsvTable t = read_csv(in);
    EXPECT_EQ(t.column("crossing"), 5);
    EXPECT_EQ(t.rows.size(), 2u);
    EXPECT_EQ(t.rows[0][3], "negativity");
}
