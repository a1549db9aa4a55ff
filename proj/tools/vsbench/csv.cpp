#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "varsmooth/errors.hpp"

namespace vsbench {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void write_trace_csv(const std::filesystem::path& path, const varsmooth::Trace& trace,
                     const TraceMeta& meta) {
    std::ofstream out(path, std::ios::binary); // binary: byte-stable newlines
    if (!out) throw varsmooth::format_error("csv: cannot open '" + path.string() + "'", 0);

    for (const auto& [k, v] : meta.comments) out << "# " << k << "=" << v << "\n";
    out << "# f0=" << fmt(meta.f0) << " f_star=" << fmt(meta.f_star) << "\n";
    out << "k,wall_ms,objective,smoothed_objective,rel_objective,dist_to_ref,mu,gamma,t\n";

    const double denom = meta.f0 - meta.f_star;
    for (const auto& r : trace.rows) {
        const double rel = denom > 0 ? (r.objective - meta.f_star) / denom : 0.0;
        out << r.k << "," << fmt(r.wall_ms) << "," << fmt(r.objective) << ","
            << fmt(r.smoothed) << "," << fmt(rel) << ","
            << (r.dist_to_ref ? fmt(*r.dist_to_ref) : std::string()) << "," << fmt(r.mu)
            << "," << fmt(r.gamma) << "," << fmt(r.t) << "\n";
    }
}

void write_gnuplot_script(const std::filesystem::path& csv_path) {
    std::filesystem::path gp = csv_path;
    gp += ".gp";
    std::ofstream out(gp, std::ios::binary);
    if (!out) return;
    out << "set datafile separator ','\n"
        << "set logscale xy\n"
        << "set xlabel 'iteration k'\n"
        << "set ylabel 'relative objective'\n"
        << "plot '" << csv_path.filename().string()
        << "' using 1:5 with lines title 'rel objective'\n";
}

std::vector<CsvRow> read_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw varsmooth::format_error("csv: cannot open '" + path.string() + "'", 0);
    std::vector<CsvRow> rows;
    std::string line;
    int k_col = -1, rel_col = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (k_col < 0) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (cells[i] == "k") k_col = static_cast<int>(i);
                if (cells[i] == "rel_objective") rel_col = static_cast<int>(i);
            }
            if (k_col < 0 || rel_col < 0)
                throw varsmooth::format_error("csv: header lacks k/rel_objective columns", 0);
            continue;
        }
        if (static_cast<int>(cells.size()) <= std::max(k_col, rel_col)) continue;
        CsvRow r;
        r.k = std::stoll(cells[static_cast<std::size_t>(k_col)]);
        r.rel_objective = std::stod(cells[static_cast<std::size_t>(rel_col)]);
        rows.push_back(r);
    }
    return rows;
}

RateFit fit_loglog_slope(const std::vector<CsvRow>& rows, std::int64_t k_min,
                         std::int64_t k_max) {
    RateFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
        if (r.k < k_min || r.k > k_max) continue;
        if (r.k <= 0 || !(r.rel_objective > 0)) {
            ++fit.clipped;
            continue;
        }
        const double x = std::log(static_cast<double>(r.k));
        const double y = std::log(r.rel_objective);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++fit.used;
    }
    if (fit.used >= 2) {
        const double n = static_cast<double>(fit.used);
        fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return fit;
}

} // namespace vsbench
