#include "fhjam/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fhjam/jammer.hpp"
#include "fhjam/propagation.hpp"

namespace fhjam {

namespace {

std::string describe(ScenarioParseError::Kind kind, int line, const std::string& message) {
    std::ostringstream out;
    switch (kind) {
        case ScenarioParseError::Kind::Syntax: out << "syntax error"; break;
        case ScenarioParseError::Kind::UnknownKey: out << "unknown key"; break;
        case ScenarioParseError::Kind::InvalidValue: out << "invalid value"; break;
        case ScenarioParseError::Kind::Validation: out << "validation failed"; break;
    }
    if (line > 0) {
        out << " at line " << line;
    }
    out << ": " << message;
    return out.str();
}

}  // namespace

ScenarioParseError::ScenarioParseError(Kind kind, int line, const std::string& message)
    : std::runtime_error(describe(kind, line, message)), kind_(kind), line_(line) {}

IoError::IoError(const std::filesystem::path& path, const std::string& message)
    : std::runtime_error(path.string() + ": " + message), path_(path) {}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(std::string_view v, int line) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ScenarioParseError(ScenarioParseError::Kind::InvalidValue, line,
                                 "expected a number, got '" + std::string(v) + "'");
    }
    return out;
}

template <typename Int>
Int parse_integer(std::string_view v, int line) {
    Int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ScenarioParseError(ScenarioParseError::Kind::InvalidValue, line,
                                 "expected an integer, got '" + std::string(v) + "'");
    }
    return out;
}

JammerKind parse_kind(std::string_view v, int line) {
    if (v == "barrage") return JammerKind::BarrageFull;
    if (v == "subband") return JammerKind::SubBandBarrage;
    if (v == "sweep") return JammerKind::Sweep;
    throw ScenarioParseError(ScenarioParseError::Kind::InvalidValue, line,
                             "jammer.kind must be barrage, subband or sweep");
}

PropagationMode parse_mode(std::string_view v, int line) {
    if (v == "paper") return PropagationMode::PaperLiteral;
    if (v == "physical") return PropagationMode::PhysicalFspl;
    throw ScenarioParseError(ScenarioParseError::Kind::InvalidValue, line,
                             "propagation.mode must be paper or physical");
}

PgMode parse_pg_mode(std::string_view v, int line) {
    if (v == "dynamic") return PgMode::Dynamic;
    if (v == "static19") return PgMode::Static19dB;
    throw ScenarioParseError(ScenarioParseError::Kind::InvalidValue, line,
                             "afh.pg_mode must be dynamic or static19");
}

const char* kind_token(JammerKind k) {
    switch (k) {
        case JammerKind::BarrageFull: return "barrage";
        case JammerKind::SubBandBarrage: return "subband";
        case JammerKind::Sweep: return "sweep";
    }
    return "barrage";
}

// Shortest decimal form that parses back to the same double.
std::string fmt_shortest(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

Scenario parse_scenario_file(const std::string& text) {
    Scenario s;
    bool bandwidth_given = false;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ScenarioParseError(ScenarioParseError::Kind::Syntax, line_no,
                                     "expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ScenarioParseError(ScenarioParseError::Kind::Syntax, line_no,
                                     "expected 'key = value'");
        }

        if (key == "link.tx_dbm") {
            s.link.tx_power = {parse_double(value, line_no)};
        } else if (key == "link.sensitivity_dbm") {
            s.link.sensitivity = {parse_double(value, line_no)};
        } else if (key == "link.channels") {
            s.link.num_channels = parse_integer<int>(value, line_no);
        } else if (key == "link.slot_us") {
            s.link.slot_duration_s = us_to_s(parse_double(value, line_no));
        } else if (key == "link.equipment_distance_m") {
            s.link.equipment_distance_m = parse_double(value, line_no);
        } else if (key == "jammer.kind") {
            s.jammer.kind = parse_kind(value, line_no);
        } else if (key == "jammer.power_w") {
            s.jammer.total_power_w = parse_double(value, line_no);
        } else if (key == "jammer.bandwidth_mhz") {
            s.jammer.bandwidth_mhz = parse_double(value, line_no);
            bandwidth_given = true;
        } else if (key == "jammer.distance_m") {
            s.jammer.distance_m = parse_double(value, line_no);
        } else if (key == "jammer.sweep_dwell_ms") {
            s.jammer.sweep_dwell_s = ms_to_s(parse_double(value, line_no));
        } else if (key == "jammer.anchor") {
            if (value == "centered") {
                s.jammer.anchor.reset();
            } else {
                s.jammer.anchor = parse_integer<int>(value, line_no);
            }
        } else if (key == "propagation.mode") {
            s.propagation = parse_mode(value, line_no);
        } else if (key == "afh.window") {
            s.afh.ber_window = parse_integer<int>(value, line_no);
        } else if (key == "afh.threshold") {
            s.afh.bad_threshold = parse_double(value, line_no);
        } else if (key == "afh.min_active") {
            s.afh.min_active = parse_integer<int>(value, line_no);
        } else if (key == "afh.timeout_slots") {
            if (value == "never") {
                s.afh.blacklist_timeout_slots.reset();
            } else {
                s.afh.blacklist_timeout_slots = parse_integer<std::uint64_t>(value, line_no);
            }
        } else if (key == "afh.pg_mode") {
            s.afh.pg_mode = parse_pg_mode(value, line_no);
        } else if (key == "run.slots") {
            s.duration_slots = parse_integer<std::uint64_t>(value, line_no);
        } else if (key == "run.seed") {
            s.seed = parse_integer<std::uint64_t>(value, line_no);
        } else if (key == "run.window_slots") {
            s.window_slots = parse_integer<std::uint64_t>(value, line_no);
        } else if (key == "margin_db") {
            s.margin_db = {parse_double(value, line_no)};
        } else {
            throw ScenarioParseError(ScenarioParseError::Kind::UnknownKey, line_no,
                                     "'" + std::string(key) + "'");
        }
    }

    if (!bandwidth_given) {
        s.jammer.bandwidth_mhz = default_bandwidth_mhz(s.jammer.kind);
    }

    const ValidationReport report = validate_scenario(s);
    if (!report.ok()) {
        throw ScenarioParseError(ScenarioParseError::Kind::Validation, 0,
                                 report.to_string());
    }
    return s;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(path, "cannot open scenario file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError(path, "read failed");
    }
    return parse_scenario_file(buf.str());
}

std::string print_scenario(const Scenario& s) {
    std::ostringstream out;
    out << "link.tx_dbm = " << fmt_shortest(s.link.tx_power.value) << "\n";
    out << "link.sensitivity_dbm = " << fmt_shortest(s.link.sensitivity.value) << "\n";
    out << "link.channels = " << s.link.num_channels << "\n";
    out << "link.slot_us = " << fmt_shortest(s_to_us(s.link.slot_duration_s)) << "\n";
    out << "link.equipment_distance_m = " << fmt_shortest(s.link.equipment_distance_m)
        << "\n";
    out << "jammer.kind = " << kind_token(s.jammer.kind) << "\n";
    out << "jammer.power_w = " << fmt_shortest(s.jammer.total_power_w) << "\n";
    out << "jammer.bandwidth_mhz = " << fmt_shortest(s.jammer.bandwidth_mhz) << "\n";
    out << "jammer.distance_m = " << fmt_shortest(s.jammer.distance_m) << "\n";
    out << "jammer.sweep_dwell_ms = " << fmt_shortest(s_to_ms(s.jammer.sweep_dwell_s))
        << "\n";
    if (s.jammer.anchor.has_value()) {
        out << "jammer.anchor = " << *s.jammer.anchor << "\n";
    } else {
        out << "jammer.anchor = centered\n";
    }
    out << "propagation.mode = "
        << (s.propagation == PropagationMode::PaperLiteral ? "paper" : "physical")
        << "\n";
    out << "afh.window = " << s.afh.ber_window << "\n";
    out << "afh.threshold = " << fmt_shortest(s.afh.bad_threshold) << "\n";
    out << "afh.min_active = " << s.afh.min_active << "\n";
    if (s.afh.blacklist_timeout_slots.has_value()) {
        out << "afh.timeout_slots = " << *s.afh.blacklist_timeout_slots << "\n";
    } else {
        out << "afh.timeout_slots = never\n";
    }
    out << "afh.pg_mode = "
        << (s.afh.pg_mode == PgMode::Dynamic ? "dynamic" : "static19") << "\n";
    out << "run.slots = " << s.duration_slots << "\n";
    out << "run.seed = " << s.seed << "\n";
    out << "run.window_slots = " << s.window_slots << "\n";
    out << "margin_db = " << fmt_shortest(s.margin_db.value) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

Scenario preset(PresetId id, double power_w) {
    if (power_w != 1.0 && power_w != 2.0 && power_w != 5.0) {
        throw std::invalid_argument("preset: power must be 1, 2 or 5 W");
    }
    Scenario s;
    s.jammer.total_power_w = power_w;
    s.jammer.distance_m = 10.0;
    switch (id) {
        case PresetId::Scenario1:
            s.jammer.kind = JammerKind::BarrageFull;
            break;
        case PresetId::Scenario2:
            s.jammer.kind = JammerKind::SubBandBarrage;
            break;
        case PresetId::Scenario3:
            s.jammer.kind = JammerKind::Sweep;
            break;
    }
    s.jammer.bandwidth_mhz = default_bandwidth_mhz(s.jammer.kind);
    return s;
}

Scenario preset_from_string(const std::string& name) {
    // scenario{1,2,3}:{1,2,5}w
    const auto colon = name.find(':');
    if (name.rfind("scenario", 0) != 0 || colon != 9 || name.size() < 12 ||
        name.back() != 'w') {
        throw std::invalid_argument("unknown preset '" + name +
                                    "' (expected scenario{1,2,3}:{1,2,5}w)");
    }
    const char sc = name[8];
    const std::string power = name.substr(10, name.size() - 11);
    PresetId id;
    if (sc == '1') id = PresetId::Scenario1;
    else if (sc == '2') id = PresetId::Scenario2;
    else if (sc == '3') id = PresetId::Scenario3;
    else throw std::invalid_argument("unknown preset '" + name + "'");
    double power_w = 0.0;
    if (power == "1") power_w = 1.0;
    else if (power == "2") power_w = 2.0;
    else if (power == "5") power_w = 5.0;
    else throw std::invalid_argument("unknown preset power in '" + name + "'");
    return preset(id, power_w);
}

// ---------------------------------------------------------------------------
// Figure series
// ---------------------------------------------------------------------------

namespace {

constexpr int kDistanceSteps = 40;  // 0.5 .. 20.0 m in 0.5 m steps

std::vector<double> distance_grid() {
    std::vector<double> d(kDistanceSteps);
    for (int i = 0; i < kDistanceSteps; ++i) {
        d[i] = 0.5 * (i + 1);
    }
    return d;
}

const char* mode_token(PropagationMode mode) {
    return mode == PropagationMode::PaperLiteral ? "paper" : "physical";
}

}  // namespace

FigureSeries make_fig2(const Scenario& s) {
    FigureSeries fs;
    fs.id = FigureId::Fig2;
    fs.column_names = {"distance_m", "pl_db"};
    fs.meta = std::string("path loss at 2440 MHz, mode=") + mode_token(s.propagation);
    auto d = distance_grid();
    std::vector<double> pl(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        pl[i] = path_loss_db(d[i], kRepresentativeFreqMhz, s.propagation).value;
    }
    fs.columns = {std::move(d), std::move(pl)};
    return fs;
}

FigureSeries make_fig3(const Scenario& s) {
    FigureSeries fs;
    fs.id = FigureId::Fig3;
    fs.column_names = {"distance_m", "j_rx_1w_dbm", "j_rx_2w_dbm", "j_rx_5w_dbm",
                       "threshold_dbm"};
    fs.meta = std::string("received jamming level, bw=") +
              fmt_shortest(s.jammer.bandwidth_mhz) + " MHz, mode=" +
              mode_token(s.propagation);
    const auto d = distance_grid();

    const double powers[3] = {1.0, 2.0, 5.0};
    std::vector<std::vector<double>> cols(5, std::vector<double>(d.size()));
    cols[0] = d;
    // The reference threshold line uses the nominal 19 dB processing gain.
    const PowerDbm threshold =
        jamming_threshold_dbm(s.link.sensitivity, DecibelGain{19.0}, s.margin_db);
    for (int p = 0; p < 3; ++p) {
        JammerSpec j = s.jammer;
        j.total_power_w = powers[p];
        const PowerDbm density = per_channel_density_dbm(j, s.link.channel_bw_mhz);
        for (std::size_t i = 0; i < d.size(); ++i) {
            cols[p + 1][i] =
                (density - path_loss_db(d[i], kRepresentativeFreqMhz, s.propagation))
                    .value;
        }
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        cols[4][i] = threshold.value;
    }
    fs.columns = std::move(cols);
    return fs;
}

FigureSeries make_fig4(const TimeSeries& ts) {
    FigureSeries fs;
    fs.id = FigureId::Fig4;
    fs.column_names = {"time_s", "pg_db"};
    fs.meta = "processing gain over time";
    std::vector<double> t(ts.outcomes.size());
    std::vector<double> pg(ts.outcomes.size());
    for (std::size_t i = 0; i < ts.outcomes.size(); ++i) {
        t[i] = ts.outcomes[i].time_s;
        pg[i] = ts.outcomes[i].pg.value;
    }
    fs.columns = {std::move(t), std::move(pg)};
    return fs;
}

FigureSeries make_fig5_7(const TimeSeries& ts) {
    FigureSeries fs;
    fs.id = FigureId::Fig5_7;
    fs.column_names = {"time_s", "threshold_dbm", "windowed_jammed_fraction",
                       "j_rx_on_hit_dbm"};
    fs.meta = "jamming level and threshold over time";
    const std::size_t n = ts.windows.size();
    std::vector<std::vector<double>> cols(4, std::vector<double>(n));
    for (std::size_t w = 0; w < n; ++w) {
        const auto& win = ts.windows[w];
        cols[0][w] = win.end_time_s;
        cols[1][w] = ts.outcomes[win.last_slot].threshold.value;
        cols[2][w] = win.jammed_fraction;
        double hit_sum = 0.0;
        std::uint64_t hits = 0;
        for (std::uint64_t i = win.first_slot; i <= win.last_slot; ++i) {
            if (ts.outcomes[i].j_rx.has_value()) {
                hit_sum += ts.outcomes[i].j_rx->value;
                ++hits;
            }
        }
        cols[3][w] = hits > 0 ? hit_sum / static_cast<double>(hits)
                              : std::numeric_limits<double>::quiet_NaN();
    }
    fs.columns = std::move(cols);
    return fs;
}

// ---------------------------------------------------------------------------
// CSV emission. Fixed-point formatting via snprintf; dB columns carry four
// decimals, times six. NaN cells become empty fields.
// ---------------------------------------------------------------------------

namespace {

void append_fixed(std::string& out, double v, int decimals) {
    if (std::isnan(v)) {
        return;  // empty field
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    out += buf;
}

int column_decimals(const std::string& name) {
    if (name == "time_s") return 6;
    if (name == "distance_m") return 1;
    if (name == "windowed_jammed_fraction") return 6;
    return 4;  // dB / dBm columns
}

}  // namespace

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError(path, "cannot open for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out.good()) {
        throw IoError(path, "write failed");
    }
}

void write_figure_csv(const FigureSeries& fs, const std::filesystem::path& path) {
    std::string out;
    for (std::size_t c = 0; c < fs.column_names.size(); ++c) {
        if (c) out += ',';
        out += fs.column_names[c];
    }
    out += '\n';
    const std::size_t rows = fs.columns.empty() ? 0 : fs.columns[0].size();
    std::vector<int> decimals;
    decimals.reserve(fs.column_names.size());
    for (const auto& name : fs.column_names) {
        decimals.push_back(column_decimals(name));
    }
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < fs.columns.size(); ++c) {
            if (c) out += ',';
            append_fixed(out, fs.columns[c][r], decimals[c]);
        }
        out += '\n';
    }
    write_text_file(path, out);
}

std::string timeseries_csv(const TimeSeries& ts) {
    std::string out =
        "slot,time_s,channel,occupied,j_rx_dbm,threshold_dbm,jammed,n_active,pg_db\n";
    char buf[160];
    for (const auto& o : ts.outcomes) {
        std::snprintf(buf, sizeof(buf), "%llu,%.6f,%d,%d,",
                      static_cast<unsigned long long>(o.slot), o.time_s, o.channel,
                      o.occupied ? 1 : 0);
        out += buf;
        if (o.j_rx.has_value()) {
            append_fixed(out, o.j_rx->value, 4);
        }
        std::snprintf(buf, sizeof(buf), ",%.4f,%d,%d,%.4f\n", o.threshold.value,
                      o.jammed ? 1 : 0, o.n_active, o.pg.value);
        out += buf;
    }
    return out;
}

std::string windows_csv(const TimeSeries& ts) {
    std::string out =
        "window,first_slot,last_slot,end_time_s,jammed_fraction,mean_pg_db,"
        "n_active_end\n";
    char buf[200];
    for (std::size_t w = 0; w < ts.windows.size(); ++w) {
        const auto& win = ts.windows[w];
        std::snprintf(buf, sizeof(buf), "%zu,%llu,%llu,%.6f,%.6f,%.4f,%d\n", w,
                      static_cast<unsigned long long>(win.first_slot),
                      static_cast<unsigned long long>(win.last_slot), win.end_time_s,
                      win.jammed_fraction, win.mean_pg_db, win.n_active_end);
        out += buf;
    }
    return out;
}

void emit_timeseries_csv(const TimeSeries& ts, const std::filesystem::path& path) {
    write_text_file(path, timeseries_csv(ts));
}

void emit_windows_csv(const TimeSeries& ts, const std::filesystem::path& path) {
    write_text_file(path, windows_csv(ts));
}

// ---------------------------------------------------------------------------
// Summaries
// ---------------------------------------------------------------------------

SummaryRow summarize(const std::string& label, const TimeSeries& ts) {
    SummaryRow row;
    row.label = label;
    row.mode = mode_token(ts.scenario.propagation);

    double max_rx = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t jammed = 0;
    for (const auto& o : ts.outcomes) {
        if (o.jammed) {
            ++jammed;
        }
        if (o.j_rx.has_value() && !(max_rx >= o.j_rx->value)) {
            max_rx = o.j_rx->value;
        }
    }
    row.max_j_rx_dbm = max_rx;
    row.threshold_end_dbm = ts.outcomes.back().threshold.value;
    row.jammed_fraction =
        static_cast<double>(jammed) / static_cast<double>(ts.outcomes.size());
    row.final_n_active = ts.outcomes.back().n_active;

    if (jammed == 0) {
        row.verdict = "no-effect";
    } else if (row.final_n_active == ts.scenario.afh.min_active) {
        row.verdict = "floored";
    } else {
        row.verdict = "degraded";
    }
    return row;
}

SummaryTable emit_summary(const std::vector<std::pair<std::string, TimeSeries>>& runs) {
    SummaryTable table;
    table.rows.reserve(runs.size());
    for (const auto& [label, ts] : runs) {
        table.rows.push_back(summarize(label, ts));
    }
    return table;
}

std::string summary_csv(const SummaryTable& table) {
    std::string out =
        "label,mode,max_j_rx_dbm,threshold_end_dbm,jammed_fraction,final_n_active,"
        "verdict\n";
    char buf[120];
    for (const auto& row : table.rows) {
        out += row.label;
        out += ',';
        out += row.mode;
        out += ',';
        append_fixed(out, row.max_j_rx_dbm, 4);
        std::snprintf(buf, sizeof(buf), ",%.4f,%.6f,%d,", row.threshold_end_dbm,
                      row.jammed_fraction, row.final_n_active);
        out += buf;
        out += row.verdict;
        out += '\n';
    }
    return out;
}

void write_summary_csv(const SummaryTable& table, const std::filesystem::path& path) {
    write_text_file(path, summary_csv(table));
}

}  // namespace fhjam
