#include "fhjam/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fhjam {

namespace {

constexpr const char* kPalette[] = {"#1f6fb2", "#d1495b", "#2e933c", "#8d6a9f",
                                    "#c47f17", "#4a4a4a"};
constexpr int kPaletteSize = 6;

constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 42;
constexpr int kMarginBottom = 52;

struct Bounds {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        if (std::isnan(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    bool valid() const { return lo <= hi; }
    void pad() {
        if (!valid()) {
            lo = 0.0;
            hi = 1.0;
        } else if (lo == hi) {
            lo -= 1.0;
            hi += 1.0;
        }
    }
};

std::string fmt(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

// Tick label precision: enough digits to tell neighbouring ticks apart.
int tick_decimals(double step) {
    if (step >= 1.0) return step == std::floor(step) ? 0 : 1;
    int d = 1;
    double s = step;
    while (s < 1.0 && d < 6) {
        s *= 10.0;
        ++d;
    }
    return d;
}

// Round step to 1/2/5 x 10^k so tick labels come out clean.
double nice_step(double span, int target_ticks) {
    const double raw = span / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    double step;
    if (norm <= 1.0) step = 1.0;
    else if (norm <= 2.0) step = 2.0;
    else if (norm <= 5.0) step = 5.0;
    else step = 10.0;
    return step * mag;
}

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_line_chart(const SvgChartSpec& spec) {
    Bounds bx, by;
    for (const auto& s : spec.series) {
        for (double v : s.x) bx.include(v);
        for (double v : s.y) by.include(v);
    }
    bx.pad();
    by.pad();

    const double plot_w = spec.width_px - kMarginLeft - kMarginRight;
    const double plot_h = spec.height_px - kMarginTop - kMarginBottom;
    const auto sx = [&](double v) {
        return kMarginLeft + (v - bx.lo) / (bx.hi - bx.lo) * plot_w;
    };
    const auto sy = [&](double v) {
        return kMarginTop + plot_h - (v - by.lo) / (by.hi - by.lo) * plot_h;
    };

    std::string out;
    out.reserve(1 << 16);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" "
                  "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                  spec.width_px, spec.height_px, spec.width_px, spec.height_px);
    out += buf;
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Title and axis labels.
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"24\" font-family=\"sans-serif\" "
                  "font-size=\"15\" text-anchor=\"middle\">%s</text>\n",
                  spec.width_px / 2, escape(spec.title).c_str());
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" "
                  "font-size=\"12\" text-anchor=\"middle\">%s</text>\n",
                  spec.width_px / 2, spec.height_px - 10,
                  escape(spec.x_label).c_str());
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"16\" y=\"%d\" font-family=\"sans-serif\" "
                  "font-size=\"12\" text-anchor=\"middle\" "
                  "transform=\"rotate(-90 16 %d)\">%s</text>\n",
                  kMarginTop + static_cast<int>(plot_h) / 2,
                  kMarginTop + static_cast<int>(plot_h) / 2,
                  escape(spec.y_label).c_str());
    out += buf;

    // Gridlines and tick labels.
    const double x_step = nice_step(bx.hi - bx.lo, 5);
    const double y_step = nice_step(by.hi - by.lo, 5);
    const int xd = tick_decimals(x_step);
    const int yd = tick_decimals(y_step);
    for (double t = std::ceil(bx.lo / x_step) * x_step; t <= bx.hi + 1e-9 * x_step;
         t += x_step) {
        const double px = sx(t);
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%d\" x2=\"%.1f\" y2=\"%.1f\" "
                      "stroke=\"#dddddd\"/>\n",
                      px, kMarginTop, px, kMarginTop + plot_h);
        out += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                      "font-size=\"11\" text-anchor=\"middle\">%s</text>\n",
                      px, kMarginTop + plot_h + 16, fmt(t, xd).c_str());
        out += buf;
    }
    for (double t = std::ceil(by.lo / y_step) * y_step; t <= by.hi + 1e-9 * y_step;
         t += y_step) {
        const double py = sy(t);
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%d\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                      "stroke=\"#dddddd\"/>\n",
                      kMarginLeft, py, kMarginLeft + plot_w, py);
        out += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%d\" y=\"%.1f\" font-family=\"sans-serif\" "
                      "font-size=\"11\" text-anchor=\"end\">%s</text>\n",
                      kMarginLeft - 6, py + 4, fmt(t, yd).c_str());
        out += buf;
    }

    // Plot frame.
    std::snprintf(buf, sizeof(buf),
                  "<rect x=\"%d\" y=\"%d\" width=\"%.1f\" height=\"%.1f\" "
                  "fill=\"none\" stroke=\"#333333\"/>\n",
                  kMarginLeft, kMarginTop, plot_w, plot_h);
    out += buf;

    // Series polylines; NaN samples break the line into segments.
    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const auto& s = spec.series[si];
        const char* color = kPalette[si % kPaletteSize];
        std::string points;
        const auto flush = [&]() {
            if (!points.empty()) {
                out += "<polyline fill=\"none\" stroke=\"";
                out += color;
                out += "\" stroke-width=\"1.5\" points=\"";
                out += points;
                out += "\"/>\n";
                points.clear();
            }
        };
        const std::size_t n = std::min(s.x.size(), s.y.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (std::isnan(s.x[i]) || std::isnan(s.y[i])) {
                flush();
                continue;
            }
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", sx(s.x[i]), sy(s.y[i]));
            points += buf;
        }
        flush();

        // Legend entry.
        const int ly = kMarginTop + 14 + static_cast<int>(si) * 16;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"%s\" "
                      "stroke-width=\"2\"/>\n",
                      kMarginLeft + 10, ly, kMarginLeft + 34, ly, color);
        out += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" "
                      "font-size=\"11\">%s</text>\n",
                      kMarginLeft + 40, ly + 4, escape(s.name).c_str());
        out += buf;
    }

    out += "</svg>\n";
    return out;
}

namespace {

const char* figure_title(FigureId id) {
    switch (id) {
        case FigureId::Fig2: return "Path loss vs distance";
        case FigureId::Fig3: return "Received jamming level vs distance";
        case FigureId::Fig4: return "Processing gain vs time";
        case FigureId::Fig5_7: return "Jamming level vs threshold over time";
    }
    return "";
}

const char* figure_x_label(FigureId id) {
    switch (id) {
        case FigureId::Fig2:
        case FigureId::Fig3: return "distance (m)";
        case FigureId::Fig4:
        case FigureId::Fig5_7: return "time (s)";
    }
    return "";
}

const char* figure_y_label(FigureId id) {
    switch (id) {
        case FigureId::Fig2: return "path loss (dB)";
        case FigureId::Fig3: return "level (dBm)";
        case FigureId::Fig4: return "processing gain (dB)";
        case FigureId::Fig5_7: return "level (dBm) / fraction";
    }
    return "";
}

// Keep at most ~4000 points per line so per-slot series stay lightweight.
std::vector<double> decimate(const std::vector<double>& v, std::size_t stride) {
    if (stride <= 1) return v;
    std::vector<double> out;
    out.reserve(v.size() / stride + 1);
    for (std::size_t i = 0; i < v.size(); i += stride) {
        out.push_back(v[i]);
    }
    return out;
}

}  // namespace

void write_figure_svg(const FigureSeries& fs, const std::filesystem::path& path) {
    SvgChartSpec spec;
    spec.title = figure_title(fs.id);
    if (!fs.meta.empty()) {
        spec.title += " (" + fs.meta + ")";
    }
    spec.x_label = figure_x_label(fs.id);
    spec.y_label = figure_y_label(fs.id);

    const std::size_t rows = fs.columns.empty() ? 0 : fs.columns[0].size();
    constexpr std::size_t kMaxPoints = 4000;
    const std::size_t stride = rows > kMaxPoints ? (rows + kMaxPoints - 1) / kMaxPoints : 1;
    const std::vector<double> x = decimate(fs.columns.at(0), stride);
    for (std::size_t c = 1; c < fs.columns.size(); ++c) {
        SvgSeries s;
        s.name = fs.column_names.at(c);
        s.x = x;
        s.y = decimate(fs.columns[c], stride);
        spec.series.push_back(std::move(s));
    }
    write_text_file(path, render_line_chart(spec));
}

}  // namespace fhjam
