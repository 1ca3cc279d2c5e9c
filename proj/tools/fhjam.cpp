// fhjam: runs jamming scenarios against a frequency-hopping PAN link and
// writes the resulting series as CSV (optionally SVG).

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fhjam/engine.hpp"
#include "fhjam/report.hpp"
#include "fhjam/svg.hpp"

namespace fs = std::filesystem;

namespace {

struct ScenarioFlags {
    std::string scenario_path;
    std::string preset_name;
    std::optional<std::uint64_t> slots;
    std::optional<std::uint64_t> seed;
    std::string mode;  // "", "paper" or "physical"
};

void add_scenario_flags(CLI::App* cmd, ScenarioFlags& flags) {
    cmd->add_option("--scenario", flags.scenario_path, "Scenario file (key = value)");
    cmd->add_option("--preset", flags.preset_name,
                    "Built-in preset, scenario{1,2,3}:{1,2,5}w");
    cmd->add_option("--slots", flags.slots, "Override run.slots");
    cmd->add_option("--seed", flags.seed, "Override run.seed (beats FHJAM_SEED)");
    cmd->add_option("--mode", flags.mode, "Override propagation.mode")
        ->check(CLI::IsMember({"paper", "physical"}));
}

std::optional<std::uint64_t> env_seed() {
    const char* raw = std::getenv("FHJAM_SEED");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    std::uint64_t value = 0;
    const char* end = raw + std::string_view(raw).size();
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument(std::string("FHJAM_SEED is not an integer: '") +
                                    raw + "'");
    }
    return value;
}

// Demo default for the time-series figures: the literal-formula mode shows no
// dynamics at 10 m, so the demo uses the physical propagation model with the
// strongest sweep jammer and no blacklist timeout.
fhjam::Scenario figure_demo_scenario() {
    fhjam::Scenario s = fhjam::preset(fhjam::PresetId::Scenario3, 5.0);
    s.propagation = fhjam::PropagationMode::PhysicalFspl;
    s.afh.blacklist_timeout_slots.reset();
    s.duration_slots = 160000;
    return s;
}

std::string default_label(const ScenarioFlags& flags) {
    if (!flags.preset_name.empty()) {
        return flags.preset_name;
    }
    if (!flags.scenario_path.empty()) {
        return fs::path(flags.scenario_path).stem().string();
    }
    return "default";
}

fhjam::Scenario resolve_scenario(const ScenarioFlags& flags,
                                 const fhjam::Scenario& fallback) {
    fhjam::Scenario s = fallback;
    if (!flags.scenario_path.empty()) {
        s = fhjam::load_scenario_file(flags.scenario_path);
    } else if (!flags.preset_name.empty()) {
        s = fhjam::preset_from_string(flags.preset_name);
    }
    if (flags.slots.has_value()) {
        s.duration_slots = *flags.slots;
    }
    if (flags.seed.has_value()) {
        s.seed = *flags.seed;
    } else if (const auto env = env_seed(); env.has_value()) {
        s.seed = *env;
    }
    if (flags.mode == "paper") {
        s.propagation = fhjam::PropagationMode::PaperLiteral;
    } else if (flags.mode == "physical") {
        s.propagation = fhjam::PropagationMode::PhysicalFspl;
    }
    return s;
}

fs::path prepare_out_dir(const std::string& out) {
    const fs::path dir(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw fhjam::IoError(dir, "cannot create output directory: " + ec.message());
    }
    return dir;
}

void print_result_line(const fhjam::SummaryRow& row, std::uint64_t slots) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", row.jammed_fraction);
    std::cout << row.label << " [" << row.mode << "]: " << slots
              << " slots, jammed fraction " << buf << ", final n_active "
              << row.final_n_active << ", verdict " << row.verdict << "\n";
}

int cmd_run(const ScenarioFlags& flags, const std::string& out, bool svg) {
    const fhjam::Scenario s = resolve_scenario(flags, fhjam::Scenario{});
    const fhjam::TimeSeries ts = fhjam::run(s);
    const fs::path dir = prepare_out_dir(out);

    fhjam::emit_timeseries_csv(ts, dir / "timeseries.csv");
    fhjam::emit_windows_csv(ts, dir / "windows.csv");
    // The dwell actually simulated (quantized to whole slots), not the input.
    fhjam::write_text_file(dir / "scenario.cfg", fhjam::print_scenario(ts.scenario));
    if (svg) {
        fhjam::write_figure_svg(fhjam::make_fig4(ts), dir / "pg.svg");
        fhjam::write_figure_svg(fhjam::make_fig5_7(ts), dir / "levels.svg");
    }

    print_result_line(fhjam::summarize(default_label(flags), ts), s.duration_slots);
    return 0;
}

int cmd_figure(int figure_id, const ScenarioFlags& flags, const std::string& out,
               bool svg) {
    const bool needs_run = figure_id >= 4;
    const fhjam::Scenario fallback =
        needs_run ? figure_demo_scenario() : fhjam::Scenario{};
    const fhjam::Scenario s = resolve_scenario(flags, fallback);

    fhjam::FigureSeries series;
    switch (figure_id) {
        case 2: series = fhjam::make_fig2(s); break;
        case 3: series = fhjam::make_fig3(s); break;
        case 4: series = fhjam::make_fig4(fhjam::run(s)); break;
        case 5: series = fhjam::make_fig5_7(fhjam::run(s)); break;
        default:
            throw std::invalid_argument("figure id must be 2, 3, 4 or 5");
    }

    const fs::path dir = prepare_out_dir(out);
    const std::string stem = "fig" + std::to_string(figure_id);
    fhjam::write_figure_csv(series, dir / (stem + ".csv"));
    if (svg) {
        fhjam::write_figure_svg(series, dir / (stem + ".svg"));
    }
    std::cout << stem << ".csv: " << series.columns.at(0).size() << " rows ("
              << series.meta << ")\n";
    return 0;
}

int cmd_summary(const std::string& out, const std::string& mode) {
    const fhjam::PresetId ids[] = {fhjam::PresetId::Scenario1,
                                   fhjam::PresetId::Scenario2,
                                   fhjam::PresetId::Scenario3};
    const double powers[] = {1.0, 2.0, 5.0};

    struct GridCell {
        std::string label;
        fhjam::Scenario scenario;
    };
    std::vector<GridCell> grid;
    for (int i = 0; i < 3; ++i) {
        for (int p = 0; p < 3; ++p) {
            GridCell cell;
            cell.label = "scenario" + std::to_string(i + 1) + ":" +
                         std::to_string(static_cast<int>(powers[p])) + "w";
            cell.scenario = fhjam::preset(ids[i], powers[p]);
            if (mode == "physical") {
                cell.scenario.propagation = fhjam::PropagationMode::PhysicalFspl;
            }
            grid.push_back(std::move(cell));
        }
    }

    std::vector<std::future<fhjam::TimeSeries>> futures;
    futures.reserve(grid.size());
    for (const auto& cell : grid) {
        futures.push_back(std::async(std::launch::async,
                                     [sc = cell.scenario] { return fhjam::run(sc); }));
    }

    const fs::path dir = prepare_out_dir(out);
    std::vector<std::pair<std::string, fhjam::TimeSeries>> runs;
    runs.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        runs.emplace_back(grid[i].label, futures[i].get());
    }
    for (const auto& [label, ts] : runs) {
        std::string stem = label;
        std::replace(stem.begin(), stem.end(), ':', '_');
        fhjam::emit_timeseries_csv(ts, dir / (stem + "_timeseries.csv"));
    }
    const fhjam::SummaryTable table = fhjam::emit_summary(runs);
    fhjam::write_summary_csv(table, dir / "summary.csv");

    for (const auto& row : table.rows) {
        print_result_line(row, runs.front().second.outcomes.size());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frequency-hopping PAN link under noise jamming"};
    app.require_subcommand(1);

    ScenarioFlags run_flags;
    std::string run_out = "out";
    bool run_svg = false;
    CLI::App* run_cmd = app.add_subcommand("run", "Simulate one scenario");
    add_scenario_flags(run_cmd, run_flags);
    run_cmd->add_option("--out", run_out, "Output directory")->capture_default_str();
    run_cmd->add_flag("--svg", run_svg, "Also render SVG charts");

    int figure_id = 0;
    ScenarioFlags fig_flags;
    std::string fig_out = "out";
    bool fig_svg = false;
    CLI::App* fig_cmd = app.add_subcommand("figure", "Emit one figure data series");
    fig_cmd->add_option("id", figure_id, "Figure id (2, 3, 4 or 5)")
        ->required()
        ->check(CLI::IsMember({2, 3, 4, 5}));
    add_scenario_flags(fig_cmd, fig_flags);
    fig_cmd->add_option("--out", fig_out, "Output directory")->capture_default_str();
    fig_cmd->add_flag("--svg", fig_svg, "Also render an SVG chart");

    bool grid = false;
    std::string summary_out = "out";
    std::string summary_mode = "paper";
    CLI::App* summary_cmd =
        app.add_subcommand("summary", "Run the 3x3 preset grid and summarize");
    summary_cmd->add_flag("--grid", grid, "Run all presets at 1/2/5 W")->required();
    summary_cmd->add_option("--out", summary_out, "Output directory")
        ->capture_default_str();
    summary_cmd->add_option("--mode", summary_mode, "Propagation mode for the grid")
        ->check(CLI::IsMember({"paper", "physical"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (run_cmd->parsed()) {
            return cmd_run(run_flags, run_out, run_svg);
        }
        if (fig_cmd->parsed()) {
            return cmd_figure(figure_id, fig_flags, fig_out, fig_svg);
        }
        return cmd_summary(summary_out, summary_mode);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const fhjam::IoError& e) {
        std::cerr << "fhjam: " << e.what() << "\n";
        return 2;
    } catch (const fhjam::ScenarioParseError& e) {
        std::cerr << "fhjam: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "fhjam: " << e.what() << "\n";
        return 1;
    }
}
