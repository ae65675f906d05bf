#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mixreg/blur_operator.hpp"
#include "mixreg/grid_signals.hpp"
#include "mixreg/penalizers.hpp"

namespace mixreg {

/// All reals are serialized with 17 significant digits ("%.17g"), which
/// round-trips IEEE doubles exactly.
std::string format_real(double x);

/// Header "t,value", one row per node.
void write_signal_csv(const std::filesystem::path& path, const Signal& s);
Signal read_signal_csv(const std::filesystem::path& path);

/// Header "t,theta".
void write_theta_csv(const std::filesystem::path& path, const WeightField& w);
WeightField read_theta_csv(const std::filesystem::path& path);

/// Row-major operator dump, header "i,j,value" (debugging aid).
void write_operator_csv(const std::filesystem::path& path, const BlurOperator& op);

/// Generic small-table helpers used by the experiment harness.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
CsvTable read_csv(const std::filesystem::path& path);
std::vector<double> column_as_doubles(const CsvTable& table, const std::string& name);

}  // namespace mixreg
