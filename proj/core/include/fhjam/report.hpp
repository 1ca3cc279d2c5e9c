#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fhjam/engine.hpp"
#include "fhjam/scenario.hpp"

namespace fhjam {

// ---------------------------------------------------------------------------
// Scenario files: flat `key = value`, UTF-8, '#' comments, unknown keys
// rejected, missing keys filled from defaults. See README for the key list.
// ---------------------------------------------------------------------------

class ScenarioParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, UnknownKey, InvalidValue, Validation };

    ScenarioParseError(Kind kind, int line, const std::string& message);

    Kind kind() const { return kind_; }
    /// 1-based line number; 0 for whole-file (validation) errors.
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

class IoError : public std::runtime_error {
public:
    IoError(const std::filesystem::path& path, const std::string& message);
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

/// Parses scenario text; the result always passes validate_scenario.
Scenario parse_scenario_file(const std::string& text);

/// Reads and parses a scenario file. Throws IoError when unreadable.
Scenario load_scenario_file(const std::filesystem::path& path);

/// Writes a scenario in the same key = value format the parser reads;
/// parse_scenario_file(print_scenario(s)) == s.
std::string print_scenario(const Scenario& s);

// ---------------------------------------------------------------------------
// Built-in jammer presets: 79 MHz barrage / 20 MHz barrage / 5 MHz sweep,
// each at 10 m with a 3 dB margin and an output power of 1, 2 or 5 W.
// ---------------------------------------------------------------------------

enum class PresetId { Scenario1, Scenario2, Scenario3 };

Scenario preset(PresetId id, double power_w);

/// Parses "scenario{1,2,3}:{1,2,5}w". Throws std::invalid_argument otherwise.
Scenario preset_from_string(const std::string& name);

// ---------------------------------------------------------------------------
// Figure series and CSV emission
// ---------------------------------------------------------------------------

enum class FigureId { Fig2, Fig3, Fig4, Fig5_7 };

/// Named numeric columns, all equal length. NaN cells serialize as empty
/// CSV fields.
struct FigureSeries {
    FigureId id;
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> columns;
    std::string meta;  // short scenario descriptor, used in chart titles
};

/// Path loss vs distance (0.5..20 m, step 0.5) at 2440 MHz.
FigureSeries make_fig2(const Scenario& s);

/// Received per-channel jamming level vs distance for 1/2/5 W at the
/// scenario's jammer bandwidth, with the constant -48 dBm threshold line.
FigureSeries make_fig3(const Scenario& s);

/// Processing gain vs time, one row per slot.
FigureSeries make_fig4(const TimeSeries& ts);

/// Threshold, windowed jammed-slot fraction, and on-hit received level vs
/// time, one row per aggregation window.
FigureSeries make_fig5_7(const TimeSeries& ts);

void write_figure_csv(const FigureSeries& fs, const std::filesystem::path& path);

std::string timeseries_csv(const TimeSeries& ts);
std::string windows_csv(const TimeSeries& ts);
void emit_timeseries_csv(const TimeSeries& ts, const std::filesystem::path& path);
void emit_windows_csv(const TimeSeries& ts, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Run summaries
// ---------------------------------------------------------------------------

struct SummaryRow {
    std::string label;
    std::string mode;            // "paper" | "physical"
    double max_j_rx_dbm;         // NaN when no slot was occupied
    double threshold_end_dbm;
    double jammed_fraction;
    int final_n_active;
    std::string verdict;         // "no-effect" | "degraded" | "floored"
};

struct SummaryTable {
    std::vector<SummaryRow> rows;
};

/// no-effect: zero jammed slots; floored: final n_active == min_active;
/// degraded: anything else.
SummaryRow summarize(const std::string& label, const TimeSeries& ts);

SummaryTable emit_summary(const std::vector<std::pair<std::string, TimeSeries>>& runs);

std::string summary_csv(const SummaryTable& table);
void write_summary_csv(const SummaryTable& table, const std::filesystem::path& path);

/// Shared low-level writer; throws IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace fhjam
