#include <doctest.h>

#include <cmath>
#include <sstream>

#include "modwave/diagram.hpp"
#include "modwave/errors.hpp"

using namespace modwave;

namespace {

StabilityDiagram small_diagram(int jobs = 1) {
    std::vector<double> T_grid;
    for (int i = 0; i < 80; ++i)
        T_grid.push_back(2e-4 * std::pow(100.0, i / 79.0));
    DiagramOptions opts;
    opts.kappa_min = 0.05;
    opts.kappa_max = 46.0;
    opts.scan_step = 2e-2;
    opts.jobs = jobs;
    return trace_boundaries({Model::FdchSurface, 0.0}, T_grid, opts);
}

}  // namespace

TEST_CASE("default tension grid is log-uniform") {
    const auto g = default_T_grid();
    REQUIRE(g.size() == 400);
    CHECK(g.front() == doctest::Approx(1e-3));
    CHECK(g.back() == doctest::Approx(1e3));
    const double r0 = g[1] / g[0];
    for (size_t i = 2; i < g.size(); ++i)
        CHECK(g[i] / g[i - 1] == doctest::Approx(r0).epsilon(1e-10));
}

TEST_CASE("traced boundaries contain the gravity limit of curve 4") {
    const StabilityDiagram d = small_diagram();
    REQUIRE(d.curves.count(4) == 1);
    // At the weakest tension the fourth-factor root approaches 1.420.
    double best = 1e300;
    double k_at_small_T = 0.0;
    for (const Polyline& line : d.curves.at(4))
        for (const auto& pt : line) {
            const double T = (pt[1] / pt[0]) * (pt[1] / pt[0]);
            if (T < best && pt[0] < 3.0) {
                best = T;
                k_at_small_T = pt[0];
            }
        }
    REQUIRE(best < 1e290);
    CHECK(k_at_small_T == doctest::Approx(1.420).epsilon(5e-3));
}

TEST_CASE("deep-water asymptotes of curves 2 and 3") {
    const StabilityDiagram d = small_diagram(2);
    const auto report = verify_asymptotes(d);
    REQUIRE(report.size() == 2);
    for (const auto& e : report) {
        CHECK(e.conclusive);
        CHECK(e.residual <= 0.05);
    }
}

TEST_CASE("parallel tracing is deterministic") {
    const StabilityDiagram d1 = small_diagram(1);
    const StabilityDiagram d4 = small_diagram(4);
    std::ostringstream s1, s4;
    write_curves_csv(s1, d1);
    write_curves_csv(s4, d4);
    CHECK(s1.str() == s4.str());
}

TEST_CASE("grid classification landmarks") {
    StabilityDiagram d;
    d.model = {Model::FdchSurface, 0.0};
    classify_grid(d, 0.5, 2.5, 0.0, 2.0, 8, 8, 2);
    REQUIRE(d.grid.size() == 64);
    char at_gravity_stable = '?', at_gravity_unstable = '?';
    for (const GridCell& cell : d.grid) {
        if (std::abs(cell.kappa - 1.0) < 0.13 && cell.kappa_sqrtT < 0.13)
            at_gravity_stable = cell.cls;
        if (std::abs(cell.kappa - 2.0) < 0.13 && cell.kappa_sqrtT < 0.13)
            at_gravity_unstable = cell.cls;
    }
    CHECK(at_gravity_stable == 'S');
    CHECK(at_gravity_unstable == 'U');
    CHECK_THROWS_AS(classify_grid(d, 0.5, 2.5, 0.0, 2.0, 0, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_grid(d, 0.5, 2.5, 0.0, 2.0, 4000, 8),
                    std::invalid_argument);
}

TEST_CASE("grid cells near T=1/3 degrade to indeterminate, not a throw") {
    StabilityDiagram d;
    d.model = {Model::FdchSurface, 0.0};
    // One cell centered exactly at kappa=1, y=1/sqrt(3): T=1/3.
    classify_grid(d, 1.0 - 0.5, 1.0 + 0.5, 1.0 / std::sqrt(3.0) - 0.5,
                  1.0 / std::sqrt(3.0) + 0.5, 1, 1);
    REQUIRE(d.grid.size() == 1);
    CHECK(d.grid[0].cls == 'I');
}

TEST_CASE("CSV writers emit headers and full precision") {
    StabilityDiagram d;
    d.model = {Model::FdchSurface, 0.0};
    d.curves[4] = {{{1.0 / 3.0, 0.1}}};
    d.grid = {{0.25, 0.5, 'S'}};
    std::ostringstream curves, grid;
    write_curves_csv(curves, d);
    write_grid_csv(grid, d);
    CHECK(curves.str().rfind("curve_id,kappa,kappa_sqrtT\n", 0) == 0);
    CHECK(curves.str().find("0.33333333333333331") != std::string::npos);
    CHECK(grid.str() == "kappa,kappa_sqrtT,class\n0.25,0.5,S\n");
}

TEST_CASE("SVG writer produces polylines for each traced curve") {
    StabilityDiagram d;
    d.model = {Model::FdchSurface, 0.0};
    d.curves[2] = {{{1.0, 0.5}, {2.0, 1.0}}};
    d.curves[4] = {{{1.4, 0.1}, {1.5, 0.4}}};
    std::ostringstream svg;
    write_svg(svg, d);
    const std::string out = svg.str();
    CHECK(out.rfind("<svg", 0) == 0);
    CHECK(out.find("<polyline") != std::string::npos);
    CHECK(out.find("</svg>") != std::string::npos);
}

TEST_CASE("Camassa-Holm has no tension plane") {
    CHECK_THROWS_AS(
        trace_boundaries({Model::CamassaHolm, 0.0}, default_T_grid()),
        UnsupportedModelError);
}
