#include "crsys/cli/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "crsys/core/error.hpp"
#include "crsys/expr/print.hpp"

namespace crsys::cli {

namespace {

using expr::format_double;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    return out;
}

double parse_double(std::string_view s, const std::string& path, std::size_t line) {
    double v = 0.0;
    if (s == "nan") return std::nan("");
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw Error(path + ":" + std::to_string(line) + ": malformed number '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

void write_field_csv(const std::string& path, const core::Field& u) {
    auto out = open_out(path);
    const auto& grid = u.grid();
    out << "node,r,theta,z_re,z_im";
    for (int c = 0; c < u.n_components(); ++c) out << ",u" << c << "_re,u" << c << "_im";
    out << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const core::cplx z = grid.node(i);
        out << i << ',' << format_double(grid.r(i)) << ',' << format_double(i == 0 ? 0.0 : std::arg(z)) << ','
            << format_double(z.real()) << ',' << format_double(z.imag());
        for (int c = 0; c < u.n_components(); ++c) {
            out << ',' << format_double(u(i, c).real()) << ',' << format_double(u(i, c).imag());
        }
        out << '\n';
    }
}

core::Field read_field_csv(const std::string& path, const core::GridPtr& grid) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    std::string line;
    std::getline(in, line);
    std::size_t columns = 1;
    for (char ch : line) columns += ch == ',';
    if (columns < 7 || (columns - 5) % 2 != 0) throw Error(path + ": unexpected header");
    const int n_comp = static_cast<int>((columns - 5) / 2);
    core::Field u(grid, n_comp);
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string_view> cells;
        std::string_view rest(line);
        for (;;) {
            const auto comma = rest.find(',');
            cells.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (cells.size() != columns) throw Error(path + ":" + std::to_string(row + 2) + ": wrong column count");
        if (row >= grid->size()) throw Error(path + ": more rows than grid nodes");
        for (int c = 0; c < n_comp; ++c) {
            u(row, c) = {parse_double(cells[5 + 2 * c], path, row + 2), parse_double(cells[6 + 2 * c], path, row + 2)};
        }
        ++row;
    }
    if (row != grid->size()) throw Error(path + ": expected " + std::to_string(grid->size()) + " rows");
    return u;
}

void write_residuals_csv(const std::string& path, const solver::SolveReport& report) {
    auto out = open_out(path);
    out << "iter,diff_norm,ratio,residual\n";
    for (std::size_t k = 0; k < report.diff_norms.size(); ++k) {
        out << k + 1 << ',' << format_double(report.diff_norms[k]) << ',';
        if (k >= 1 && report.diff_norms[k - 1] > 0.0) out << format_double(report.diff_norms[k] / report.diff_norms[k - 1]);
        out << ',';
        if (k < report.residual_history.size()) out << format_double(report.residual_history[k]);
        out << '\n';
    }
}

void write_manifest(const std::string& path, const nlohmann::json& manifest) {
    auto out = open_out(path);
    out << manifest.dump(2) << '\n';
}

}  // namespace crsys::cli
