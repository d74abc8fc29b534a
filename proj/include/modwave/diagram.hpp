#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <vector>

#include "modwave/indices.hpp"

namespace modwave {

/// One traced polyline in the (kappa, kappa*sqrt(T)) plane.
using Polyline = std::vector<std::array<double, 2>>;

struct GridCell {
    double kappa;
    double kappa_sqrtT;
    char cls;  // 'S', 'U', or 'I'
};

struct StabilityDiagram {
    ModelSpec model;
    std::map<int, std::vector<Polyline>> curves;  // factor label 1..4
    std::vector<GridCell> grid;
};

struct DiagramOptions {
    double kappa_min = 1e-2;
    double kappa_max = 50.0;
    double scan_step = 1e-2;
    int jobs = 1;
};

std::vector<double> default_T_grid();  // 400 log-uniform in [1e-3, 1e3]

/// Roots of the four index factors for every tension in T_grid, assembled
/// into polylines split at branch discontinuities.
StabilityDiagram trace_boundaries(const ModelSpec& spec,
                                  const std::vector<double>& T_grid,
                                  const DiagramOptions& opts = {});

struct AsymptoteEntry {
    int curve;
    double residual;  // relative residual at the largest-kappa points
    bool conclusive;
};

/// Deep-water asymptote residuals for curves 2 and 3.
std::vector<AsymptoteEntry> verify_asymptotes(const StabilityDiagram& diagram);

void classify_grid(StabilityDiagram& diagram, double kappa_min,
                   double kappa_max, double y_min, double y_max, int nx,
                   int ny, int jobs = 1);

void write_curves_csv(std::ostream& os, const StabilityDiagram& diagram);
void write_grid_csv(std::ostream& os, const StabilityDiagram& diagram);
void write_svg(std::ostream& os, const StabilityDiagram& diagram);

}  // namespace modwave
