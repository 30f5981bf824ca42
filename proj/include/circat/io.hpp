#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "circat/dynamics.hpp"
#include "circat/experiments.hpp"
#include "circat/periods.hpp"
#include "circat/spectral.hpp"

namespace circat {

/// Shortest round-trip decimal form of a double. std::to_chars output is fully
/// specified, so files rendered through this are byte-stable across runs and
/// thread counts.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf, res.ptr);
}

inline std::string format_u64(std::uint64_t v) { return std::to_string(v); }

/// Per-mode spectrum rows: mode index, coupling eigenvalue, positive exponent.
inline std::string csv_spectrum(const SpectrumReport& rep) {
    std::string out = "mode,d,lambda\n";
    for (std::size_t j = 0; j < rep.d.size(); ++j)
        out += format_u64(j) + "," + format_double(rep.d[j]) + "," + format_double(rep.lambda[j]) +
               "\n";
    return out;
}

inline std::string csv_entropy(std::span<const EntropyPoint> rows) {
    std::string out = "stride,n,degree,s_ks\n";
    for (const auto& r : rows)
        out += std::to_string(r.stride) + "," + std::to_string(r.n) + "," + std::to_string(r.deg) +
               "," + format_double(r.s_ks) + "\n";
    return out;
}

/// Period sweep rows. The period cell stays empty for censored rows; the
/// censored flag and the cutoff carry the information, and a placeholder
/// number would poison downstream fits.
inline std::string csv_periods(std::span<const PeriodResult> rows) {
    std::string out = "N,n,g,T,censored,cutoff\n";
    for (const auto& r : rows) {
        out += std::to_string(r.modulus) + "," + std::to_string(r.g.size()) + "," +
               to_bit_string(r.g) + ",";
        if (!r.censored) out += format_u64(r.period);
        out += std::string(",") + (r.censored ? "1" : "0") + "," + format_u64(r.cutoff) + "\n";
    }
    return out;
}

inline std::string csv_ensemble(std::span<const EnsembleRecord> rows, std::size_t replications,
                                std::uint64_t seed) {
    std::string out = "n,degree,s_ks_stride,s_ks_stride_prime,s_ks_mean,skipped,seed";
    for (std::size_t i = 1; i <= replications; ++i) out += ",sample_" + std::to_string(i);
    out += "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.deg) + "," +
               format_double(r.deterministic) + "," + format_double(r.deterministic_prime) + ",";
        if (!r.skipped) out += format_double(r.mean);
        out += std::string(",") + (r.skipped ? "1" : "0") + "," + format_u64(seed);
        for (std::size_t i = 0; i < replications; ++i)
            out += "," + (i < r.samples.size() ? format_double(r.samples[i]) : std::string());
        out += "\n";
    }
    return out;
}

/// Trajectory rows: step index, then positions k_0..k_{n-1}, then momenta.
inline std::string csv_trajectory(std::span<const TorusState> steps) {
    if (steps.empty()) throw std::invalid_argument("trajectory must contain at least one state");
    std::size_t n = steps.front().nodes();
    std::string out = "step";
    for (std::size_t i = 0; i < n; ++i) out += ",k_" + std::to_string(i);
    for (std::size_t i = 0; i < n; ++i) out += ",l_" + std::to_string(i);
    out += "\n";
    for (std::size_t t = 0; t < steps.size(); ++t) {
        out += std::to_string(t);
        for (std::size_t i = 0; i < n; ++i) out += "," + std::to_string(steps[t].k[i]);
        for (std::size_t i = 0; i < n; ++i) out += "," + std::to_string(steps[t].l[i]);
        out += "\n";
    }
    return out;
}

/// One named point series for the SVG scatter plot.
struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

namespace detail {

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
}

} // namespace detail

/// Self-contained scatter plot, fixed 720x480 canvas. log_y plots log10 of the
/// values (requires positive data). Meant for quick inspection of sweep
/// output, not publication graphics.
inline std::string svg_scatter(std::span<const PlotSeries> series, const std::string& x_label,
                               const std::string& y_label, bool log_y = false) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    const double width = 720, height = 480, left = 70, right = 20, top = 20, bottom = 50;
    bool any = false;
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    auto y_of = [&](double v) {
        if (!log_y) return v;
        if (v <= 0) throw std::invalid_argument("log scale needs positive values");
        return std::log10(v);
    };
    for (const auto& s : series) {
        if (s.x.size() != s.y.size())
            throw std::invalid_argument("series x and y lengths differ");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            double xv = s.x[i], yv = y_of(s.y[i]);
            if (!any) {
                xmin = xmax = xv;
                ymin = ymax = yv;
                any = true;
            }
            xmin = std::min(xmin, xv);
            xmax = std::max(xmax, xv);
            ymin = std::min(ymin, yv);
            ymax = std::max(ymax, yv);
        }
    }
    if (!any) throw std::invalid_argument("nothing to plot");
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto px = [&](double v) { return left + (v - xmin) / (xmax - xmin) * (width - left - right); };
    auto py = [&](double v) {
        return height - bottom - (v - ymin) / (ymax - ymin) * (height - top - bottom);
    };
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
                      "viewBox=\"0 0 720 480\">\n";
    svg += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
    svg += "<line x1=\"" + detail::svg_num(left) + "\" y1=\"" + detail::svg_num(height - bottom) +
           "\" x2=\"" + detail::svg_num(width - right) + "\" y2=\"" +
           detail::svg_num(height - bottom) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + detail::svg_num(left) + "\" y1=\"" + detail::svg_num(top) + "\" x2=\"" +
           detail::svg_num(left) + "\" y2=\"" + detail::svg_num(height - bottom) +
           "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        double fx = xmin + (xmax - xmin) * t / 4.0;
        double fy = ymin + (ymax - ymin) * t / 4.0;
        svg += "<text x=\"" + detail::svg_num(px(fx)) + "\" y=\"" +
               detail::svg_num(height - bottom + 18) +
               "\" font-size=\"11\" text-anchor=\"middle\">" + detail::svg_num(fx) + "</text>\n";
        std::string ylab = log_y ? "1e" + detail::svg_num(fy) : detail::svg_num(fy);
        svg += "<text x=\"" + detail::svg_num(left - 8) + "\" y=\"" + detail::svg_num(py(fy) + 4) +
               "\" font-size=\"11\" text-anchor=\"end\">" + ylab + "</text>\n";
    }
    svg += "<text x=\"" + detail::svg_num((left + width - right) / 2) + "\" y=\"" +
           detail::svg_num(height - 12) + "\" font-size=\"13\" text-anchor=\"middle\">" + x_label +
           "</text>\n";
    svg += "<text x=\"16\" y=\"" + detail::svg_num((top + height - bottom) / 2) +
           "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           detail::svg_num((top + height - bottom) / 2) + ")\">" + y_label + "</text>\n";
    std::size_t si = 0;
    for (const auto& s : series) {
        const char* color = palette[si % 8];
        for (std::size_t i = 0; i < s.x.size(); ++i)
            svg += "<circle cx=\"" + detail::svg_num(px(s.x[i])) + "\" cy=\"" +
                   detail::svg_num(py(y_of(s.y[i]))) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
        svg += "<text x=\"" + detail::svg_num(width - right - 10) + "\" y=\"" +
               detail::svg_num(top + 16 + 16 * static_cast<double>(si)) +
               "\" font-size=\"12\" text-anchor=\"end\" fill=\"" + std::string(color) + "\">" +
               s.name + "</text>\n";
        ++si;
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace circat
