#pragma once

// Minimal SVG line-plot writer for the experiment figure outputs.

#include <filesystem>
#include <string>
#include <vector>

namespace mixreg::svg {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f77b4";
    bool dashed = false;
};

void write_plot(const std::filesystem::path& path, const std::string& title,
                const std::vector<Series>& series);

}  // namespace mixreg::svg
