#include "modwave/diagram.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <thread>

#include "modwave/errors.hpp"

namespace modwave {
namespace {

void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                body(i);
        });
    for (auto& th : pool) th.join();
}

double median_step(const Polyline& line) {
    if (line.size() < 2) return 0.0;
    std::vector<double> d;
    for (size_t i = 1; i < line.size(); ++i)
        d.push_back(std::abs(line[i][0] - line[i - 1][0]));
    std::nth_element(d.begin(), d.begin() + d.size() / 2, d.end());
    return d[d.size() / 2];
}

struct Branch {
    Polyline line;
    bool open = true;
};

void append_roots(std::vector<Branch>& branches,
                  const std::vector<std::array<double, 2>>& points) {
    std::vector<bool> used(points.size(), false);
    for (Branch& br : branches) {
        if (!br.open) continue;
        const double last = br.line.back()[0];
        int best = -1;
        double best_gap = 0.0;
        for (size_t i = 0; i < points.size(); ++i) {
            if (used[i]) continue;
            const double gap = std::abs(points[i][0] - last);
            if (best < 0 || gap < best_gap) {
                best = int(i);
                best_gap = gap;
            }
        }
        const double med = median_step(br.line);
        if (best >= 0 && (br.line.size() < 3 || med == 0.0 ||
                          best_gap <= 10.0 * med)) {
            br.line.push_back(points[best]);
            used[best] = true;
        } else {
            br.open = false;
        }
    }
    for (size_t i = 0; i < points.size(); ++i)
        if (!used[i]) branches.push_back({{points[i]}, true});
}

char classify_cell(const ModelSpec& base, double kappa, double y) {
    ModelSpec s = base;
    s.T = kappa > 0.0 ? (y / kappa) * (y / kappa) : 0.0;
    try {
        switch (delta(s, kappa).classification) {
            case Stability::Stable: return 'S';
            case Stability::Unstable: return 'U';
            case Stability::Indeterminate: return 'I';
        }
    } catch (const UnsupportedParameterError&) {
    } catch (const std::domain_error&) {
    }
    return 'I';
}

}  // namespace

std::vector<double> default_T_grid() {
    std::vector<double> grid(400);
    for (int i = 0; i < 400; ++i)
        grid[i] = 1e-3 * std::pow(1e6, i / 399.0);
    return grid;
}

StabilityDiagram trace_boundaries(const ModelSpec& spec,
                                  const std::vector<double>& T_grid,
                                  const DiagramOptions& opts) {
    if (spec.model == Model::CamassaHolm)
        throw UnsupportedModelError("trace_boundaries: water-wave models only");
    StabilityDiagram diagram;
    diagram.model = spec;
    const std::vector<Factor> all = {Factor::I1, Factor::I2, Factor::I3,
                                     Factor::I4};
    // Per-tension root lists, factor-major.
    std::vector<std::array<std::vector<std::array<double, 2>>, 4>> per_T(
        T_grid.size());
    parallel_for(int(T_grid.size()), opts.jobs, [&](int ti) {
        ModelSpec s = spec;
        s.T = T_grid[ti];
        if (std::abs(s.T - 1.0 / 3.0) < 1e-6) return;
        const std::vector<FactorRoot> roots = critical_wavenumbers(
            s, opts.kappa_min, opts.kappa_max, all, opts.scan_step);
        for (const FactorRoot& r : roots)
            per_T[ti][int(r.factor)].push_back(
                {r.kappa, r.kappa * std::sqrt(s.T)});
    });
    for (int f = 0; f < 4; ++f) {
        std::vector<Branch> branches;
        for (size_t ti = 0; ti < T_grid.size(); ++ti)
            append_roots(branches, per_T[ti][f]);
        std::vector<Polyline> lines;
        for (Branch& br : branches)
            if (!br.line.empty()) lines.push_back(std::move(br.line));
        if (!lines.empty()) diagram.curves[f + 1] = std::move(lines);
    }
    return diagram;
}

std::vector<AsymptoteEntry> verify_asymptotes(const StabilityDiagram& diagram) {
    std::vector<AsymptoteEntry> report;
    for (int curve : {2, 3}) {
        AsymptoteEntry entry{curve, 0.0, false};
        std::vector<std::array<double, 2>> pts;
        auto it = diagram.curves.find(curve);
        if (it != diagram.curves.end())
            for (const Polyline& line : it->second)
                for (const auto& pt : line)
                    if (pt[0] >= 20.0) pts.push_back(pt);
        if (pts.size() >= 10) {
            std::sort(pts.begin(), pts.end(),
                      [](const auto& x, const auto& y) { return x[0] > y[0]; });
            double worst = 0.0;
            for (int i = 0; i < 10; ++i) {
                const double kappa = pts[i][0];
                const double T = (pts[i][1] / kappa) * (pts[i][1] / kappa);
                double res;
                if (curve == 2)
                    res = std::abs(kappa - (2.25 * kappa * kappa * T - 0.75)) /
                          kappa;
                else
                    res = std::abs(kappa * kappa * T - 0.5) / 0.5;
                worst = std::max(worst, res);
            }
            entry.residual = worst;
            entry.conclusive = true;
        }
        report.push_back(entry);
    }
    return report;
}

void classify_grid(StabilityDiagram& diagram, double kappa_min,
                   double kappa_max, double y_min, double y_max, int nx,
                   int ny, int jobs) {
    if (nx <= 0 || ny <= 0 || nx > 2000 || ny > 2000)
        throw std::invalid_argument("classify_grid: resolution out of range");
    diagram.grid.assign(size_t(nx) * ny, {});
    parallel_for(nx * ny, jobs, [&](int idx) {
        const int i = idx % nx;
        const int j = idx / nx;
        const double kappa =
            kappa_min + (kappa_max - kappa_min) * (i + 0.5) / nx;
        const double y = y_min + (y_max - y_min) * (j + 0.5) / ny;
        diagram.grid[idx] = {kappa, y,
                             classify_cell(diagram.model, kappa, y)};
    });
}

namespace {

void put17(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
}

}  // namespace

void write_curves_csv(std::ostream& os, const StabilityDiagram& diagram) {
    os << "curve_id,kappa,kappa_sqrtT\n";
    for (const auto& [id, lines] : diagram.curves)
        for (const Polyline& line : lines)
            for (const auto& pt : line) {
                os << id << ',';
                put17(os, pt[0]);
                os << ',';
                put17(os, pt[1]);
                os << '\n';
            }
}

void write_grid_csv(std::ostream& os, const StabilityDiagram& diagram) {
    os << "kappa,kappa_sqrtT,class\n";
    for (const GridCell& cell : diagram.grid) {
        put17(os, cell.kappa);
        os << ',';
        put17(os, cell.kappa_sqrtT);
        os << ',' << cell.cls << '\n';
    }
}

void write_svg(std::ostream& os, const StabilityDiagram& diagram) {
    const double W = 800, H = 500;
    double kmax = 10.0, ymax = 5.0;
    for (const auto& [id, lines] : diagram.curves)
        for (const Polyline& line : lines)
            for (const auto& pt : line) {
                kmax = std::max(kmax, pt[0]);
                ymax = std::max(ymax, pt[1]);
            }
    auto px = [&](double k) { return k / kmax * W; };
    auto py = [&](double y) { return H - y / ymax * H; };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
       << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H
       << "\">\n";
    if (!diagram.grid.empty()) {
        for (const GridCell& cell : diagram.grid) {
            const char* fill = cell.cls == 'S'   ? "#cfe8cf"
                               : cell.cls == 'U' ? "#f2c9c9"
                                                 : "#dddddd";
            os << "<rect x=\"" << px(cell.kappa) - 2 << "\" y=\""
               << py(cell.kappa_sqrtT) - 2
               << "\" width=\"4\" height=\"4\" fill=\"" << fill << "\"/>\n";
        }
    }
    const char* colors[4] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};
    for (const auto& [id, lines] : diagram.curves)
        for (const Polyline& line : lines) {
            os << "<polyline fill=\"none\" stroke=\""
               << colors[(id - 1) % 4] << "\" stroke-width=\"1.5\" points=\"";
            for (const auto& pt : line)
                os << px(pt[0]) << ',' << py(pt[1]) << ' ';
            os << "\"/>\n";
        }
    os << "</svg>\n";
}

}  // namespace modwave
