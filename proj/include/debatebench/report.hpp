#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "debatebench/errors.hpp"

namespace debatebench {

struct TableRow {
    std::string pipeline;
    std::string models;
    double mcr_percent = 0.0;
    double khc = 0.0;
    double grr_percent = 0.0;
};

struct RadarSeries {
    std::string label;
    std::vector<double> values;  // one MCR percent per category, fixed axis order
};

namespace detail {

inline std::string fixed2(double v) {
    if (std::fabs(v) < 0.005) v = 0.0;  // avoid "-0.00"
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << content;
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace detail

inline std::string render_table_csv(const std::vector<TableRow>& rows) {
    if (rows.empty()) throw Error("table: no rows");
    std::string out = "pipeline,models,MCR,KHC,GRR\n";
    for (const auto& r : rows) {
        out += detail::csv_field(r.pipeline) + "," + detail::csv_field(r.models) + "," +
               detail::fixed2(r.mcr_percent) + "," + detail::fixed2(r.khc) + "," +
               detail::fixed2(r.grr_percent) + "\n";
    }
    return out;
}

inline void emit_table(const std::vector<TableRow>& rows, const std::filesystem::path& path) {
    detail::write_text_file(path, render_table_csv(rows));
}

/// Radar chart: k axes from 12 o'clock clockwise, gridlines at 20..100, one
/// closed polygon per series, value v at radius v/100 * R. Pure function of
/// its inputs; fixed 2-decimal coordinates keep the bytes stable.
inline std::string render_radar_svg(const std::vector<RadarSeries>& series,
                                    const std::vector<std::string>& axis_labels) {
    if (series.empty()) throw SeriesMismatchError("radar: no series");
    if (series.size() > 4) throw TooManySeriesError(series.size());
    const std::size_t k = axis_labels.size();
    if (k < 3) throw SeriesMismatchError("radar: need at least 3 axes, got " + std::to_string(k));
    for (const auto& s : series) {
        if (s.values.size() != k)
            throw SeriesMismatchError("radar: series \"" + s.label + "\" has " +
                                      std::to_string(s.values.size()) + " values, expected " + std::to_string(k));
        for (const double v : s.values)
            if (!(v >= 0.0 && v <= 100.0))
                throw SeriesMismatchError("radar: value out of [0,100] in series \"" + s.label + "\"");
    }

    const double cx = 400.0, cy = 300.0, R = 220.0;
    const double pi = 3.14159265358979323846;
    static const char* palette[4] = {"#3366cc", "#33a02c", "#e31a1c", "#ff7f00"};

    auto point = [&](std::size_t axis, double radius, double& x, double& y) {
        const double a = -pi / 2.0 + 2.0 * pi * static_cast<double>(axis) / static_cast<double>(k);
        x = cx + radius * std::cos(a);
        y = cy + radius * std::sin(a);
    };
    auto fmt = [](double v) { return detail::fixed2(v); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"640\" viewBox=\"0 0 800 640\">\n";
    svg += "<rect width=\"800\" height=\"640\" fill=\"#ffffff\"/>\n";

    for (int level = 20; level <= 100; level += 20) {
        std::string pts;
        for (std::size_t i = 0; i < k; ++i) {
            double x, y;
            point(i, R * level / 100.0, x, y);
            if (!pts.empty()) pts += ' ';
            pts += fmt(x) + "," + fmt(y);
        }
        svg += "<polygon points=\"" + pts + "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }

    for (std::size_t i = 0; i < k; ++i) {
        double x, y;
        point(i, R, x, y);
        svg += "<line x1=\"" + fmt(cx) + "\" y1=\"" + fmt(cy) + "\" x2=\"" + fmt(x) + "\" y2=\"" + fmt(y) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

        double lx, ly;
        point(i, R + 16.0, lx, ly);
        const double a = -pi / 2.0 + 2.0 * pi * static_cast<double>(i) / static_cast<double>(k);
        const double c = std::cos(a);
        const char* anchor = std::fabs(c) < 0.3 ? "middle" : (c > 0.0 ? "start" : "end");
        const char* dy = std::sin(a) > 0.3 ? "0.9em" : (std::sin(a) < -0.3 ? "0" : "0.35em");
        svg += "<text x=\"" + fmt(lx) + "\" y=\"" + fmt(ly) + "\" font-family=\"sans-serif\" font-size=\"13\"" +
               " text-anchor=\"" + std::string(anchor) + "\" dy=\"" + dy + "\" fill=\"#333333\">" +
               detail::xml_escape(axis_labels[i]) + "</text>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        std::string pts;
        for (std::size_t i = 0; i < k; ++i) {
            double x, y;
            point(i, R * series[s].values[i] / 100.0, x, y);
            if (!pts.empty()) pts += ' ';
            pts += fmt(x) + "," + fmt(y);
        }
        svg += "<polygon points=\"" + pts + "\" fill=\"" + palette[s] + "\" fill-opacity=\"0.15\" stroke=\"" +
               palette[s] + "\" stroke-width=\"2\"/>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        const double y = 24.0 + 24.0 * static_cast<double>(s);
        svg += "<rect x=\"20\" y=\"" + fmt(y - 11.0) + "\" width=\"14\" height=\"14\" fill=\"" + palette[s] +
               "\"/>\n";
        svg += "<text x=\"40\" y=\"" + fmt(y) + "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#333333\">" +
               detail::xml_escape(series[s].label) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

inline void emit_radar(const std::vector<RadarSeries>& series, const std::vector<std::string>& axis_labels,
                       const std::filesystem::path& path) {
    detail::write_text_file(path, render_radar_svg(series, axis_labels));
}

}  // namespace debatebench
