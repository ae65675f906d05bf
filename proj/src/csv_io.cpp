#include "mixreg/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mixreg/errors.hpp"

namespace mixreg {

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open for writing: " + path.string());
    }
    return out;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    size_t pos = 0;
    const double x = std::stod(s, &pos);
    if (pos != s.size()) throw Error("malformed numeric field: '" + s + "'");
    return x;
}

// Reconstruct the uniform grid from a t column and validate the values.
Grid grid_from_t_column(const std::vector<double>& t, const std::string& where) {
    const int n = static_cast<int>(t.size()) - 1;
    if (n < 2) throw Error(where + ": need at least 3 rows");
    const Grid grid = make_grid(n);
    for (int j = 0; j <= n; ++j) {
        if (std::abs(t[j] - grid.node(j)) > 1e-9) {
            throw Error(where + ": t column is not the uniform grid j/n");
        }
    }
    return grid;
}

}  // namespace

void write_signal_csv(const std::filesystem::path& path, const Signal& s) {
    auto out = open_out(path);
    out << "t,value\n";
    for (int j = 0; j <= s.grid.n; ++j) {
        out << format_real(s.grid.node(j)) << ',' << format_real(s.values[j]) << '\n';
    }
}

Signal read_signal_csv(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    if (table.header != std::vector<std::string>{"t", "value"}) {
        throw Error("read_signal_csv: expected header 't,value' in " + path.string());
    }
    const auto t = column_as_doubles(table, "t");
    const auto value = column_as_doubles(table, "value");
    const Grid grid = grid_from_t_column(t, "read_signal_csv");
    return Signal{grid, Eigen::Map<const Eigen::VectorXd>(value.data(),
                                                          static_cast<Eigen::Index>(value.size()))};
}

void write_theta_csv(const std::filesystem::path& path, const WeightField& w) {
    auto out = open_out(path);
    out << "t,theta\n";
    for (int j = 0; j <= w.grid.n; ++j) {
        out << format_real(w.grid.node(j)) << ',' << format_real(w.theta[j]) << '\n';
    }
}

WeightField read_theta_csv(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    if (table.header != std::vector<std::string>{"t", "theta"}) {
        throw Error("read_theta_csv: expected header 't,theta' in " + path.string());
    }
    const auto t = column_as_doubles(table, "t");
    const auto theta = column_as_doubles(table, "theta");
    const Grid grid = grid_from_t_column(t, "read_theta_csv");
    return WeightField::from_values(
        grid, Eigen::Map<const Eigen::VectorXd>(theta.data(), static_cast<Eigen::Index>(theta.size())));
}

void write_operator_csv(const std::filesystem::path& path, const BlurOperator& op) {
    auto out = open_out(path);
    out << "i,j,value\n";
    for (int i = 0; i <= op.grid.n; ++i) {
        for (int j = 0; j <= op.grid.n; ++j) {
            out << i << ',' << j << ',' << format_real(op.matrix(i, j)) << '\n';
        }
    }
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open for reading: " + path.string());
    }
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw Error("empty CSV: " + path.string());
    }
    table.header = split_line(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_line(line);
        if (fields.size() != table.header.size()) {
            throw Error("ragged CSV row in " + path.string());
        }
        table.rows.push_back(std::move(fields));
    }
    return table;
}

std::vector<double> column_as_doubles(const CsvTable& table, const std::string& name) {
    size_t col = table.header.size();
    for (size_t c = 0; c < table.header.size(); ++c) {
        if (table.header[c] == name) {
            col = c;
            break;
        }
    }
    if (col == table.header.size()) {
        throw Error("CSV column not found: " + name);
    }
    std::vector<double> out;
    out.reserve(table.rows.size());
    for (const auto& row : table.rows) out.push_back(parse_double(row[col]));
    return out;
}

}  // namespace mixreg
