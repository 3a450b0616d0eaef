#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rsb {

struct Series {
    std::string label;
    std::vector<double> values;
};

/// Static SVG line chart, x = step index, one polyline per series.
void write_line_chart_svg(std::ostream& out, const std::vector<Series>& series, const std::string& title,
                          const std::string& y_label);

}  // namespace rsb
