#include "rsbandit/harness/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace rsb {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_line_chart_svg(std::ostream& out, const std::vector<Series>& series, const std::string& title,
                          const std::string& y_label) {
    const double width = 800, height = 500, left = 70, right = 180, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    std::size_t max_len = 1;
    double max_y = 0.0;
    for (const auto& s : series) {
        max_len = std::max(max_len, s.values.size());
        for (double v : s.values) max_y = std::max(max_y, v);
    }
    if (max_y <= 0.0) max_y = 1.0;
    auto px = [&](std::size_t i) { return left + plot_w * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(max_len - 1, 1)); };
    auto py = [&](double v) { return top + plot_h * (1.0 - v / max_y); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">" << escape(title) << "</text>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\"" << top + plot_h
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
        << "\" stroke=\"black\"/>\n";
    for (int tick = 0; tick <= 4; ++tick) {
        const double v = max_y * tick / 4.0;
        out << "<text x=\"" << left - 8 << "\" y=\"" << num(py(v) + 4) << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << num(v) << "</text>\n";
        const std::size_t i = (max_len - 1) * static_cast<std::size_t>(tick) / 4;
        out << "<text x=\"" << num(px(i)) << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << i + 1 << "</text>\n";
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">step</text>\n";
    out << "<text x=\"16\" y=\"" << top + plot_h / 2 << "\" transform=\"rotate(-90 16 " << top + plot_h / 2
        << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << escape(y_label) << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        const auto& vals = series[s].values;
        // thin long series so the file stays small
        const std::size_t stride = std::max<std::size_t>(1, vals.size() / 1000);
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < vals.size(); i += stride) out << num(px(i)) << ',' << num(py(vals[i])) << ' ';
        if (!vals.empty()) out << num(px(vals.size() - 1)) << ',' << num(py(vals.back()));
        out << "\"/>\n";
        const double ly = top + 16.0 * static_cast<double>(s) + 8.0;
        out << "<line x1=\"" << left + plot_w + 12 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 32 << "\" y2=\"" << ly
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << left + plot_w + 38 << "\" y=\"" << ly + 4 << "\" font-family=\"sans-serif\" font-size=\"11\">"
            << escape(series[s].label) << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace rsb
