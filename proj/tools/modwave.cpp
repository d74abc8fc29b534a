#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "modwave/diagram.hpp"
#include "modwave/errors.hpp"
#include "modwave/json_io.hpp"
#include "modwave/validate.hpp"

namespace {

using nlohmann::json;
using namespace modwave;

Model parse_model(const std::string& name) {
    if (name == "fdch-surface") return Model::FdchSurface;
    if (name == "fdch-velocity") return Model::FdchVelocity;
    if (name == "ch" || name == "camassa-holm") return Model::CamassaHolm;
    throw CLI::ValidationError("--model", "unknown model '" + name + "'");
}

Factor parse_factor(const std::string& name) {
    if (name == "i1") return Factor::I1;
    if (name == "i2") return Factor::I2;
    if (name == "i3") return Factor::I3;
    if (name == "i4") return Factor::I4;
    throw CLI::ValidationError("--factor", "unknown factor '" + name + "'");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

int env_jobs() {
    if (const char* v = std::getenv("MODWAVE_JOBS")) return std::atoi(v);
    return 1;
}

struct Args {
    std::string model = "fdch-surface";
    std::string symbol = "water-wave";
    std::string factor = "i4";
    std::string output;
    std::string what = "curves";
    double kappa = 1.0, T = 0.0, a = 0.0, b = 0.0, xi = 0.1;
    double kmin = 0.5, kmax = 3.0, step = 1e-3;
    double ymin = 0.0, ymax = 5.0;
    int N = 64, M = 96, nx = 200, ny = 100, tcount = 400;
    double tmin = 1e-3, tmax = 1e3;
    int jobs = env_jobs();
    bool full = false, quick = false;
};

int dispatch(const std::string& cmd, const Args& args) {
    std::ofstream file;
    std::ostream& os = open_output(file, args.output);
    if (cmd == "speed") {
        DispersionSpec spec{args.symbol == "ch" ? SymbolKind::CamassaHolm
                                                : SymbolKind::WaterWave,
                            args.T};
        json j = {{"model", args.symbol},
                  {"T", args.T},
                  {"kappa", args.kappa},
                  {"c", phase_speed(spec, args.kappa)},
                  {"c1", phase_speed_deriv(spec, args.kappa, 1)},
                  {"c2", phase_speed_deriv(spec, args.kappa, 2)},
                  {"group_speed", group_speed(spec, args.kappa)}};
        os << j.dump(2) << '\n';
    } else if (cmd == "coeffs") {
        const Model m = parse_model(args.model);
        const ExpansionCoefficients e =
            m == Model::CamassaHolm
                ? ch_expansion_coeffs(args.kappa)
                : fdch_expansion_coeffs(args.kappa, args.T);
        os << json(e).dump(2) << '\n';
    } else if (cmd == "wave") {
        const ModelSpec spec{parse_model(args.model), args.T};
        const WaveProfile p =
            solve_wave(spec, args.kappa, args.a, args.b, args.N);
        os << json(p).dump(2) << '\n';
    } else if (cmd == "index") {
        const ModelSpec spec{parse_model(args.model), args.T};
        os << json(delta(spec, args.kappa)).dump(2) << '\n';
    } else if (cmd == "critical") {
        const ModelSpec spec{parse_model(args.model), args.T};
        const auto roots = critical_wavenumbers(
            spec, args.kmin, args.kmax, {parse_factor(args.factor)},
            args.step);
        json out = json::array();
        for (const auto& r : roots)
            out.push_back({{"kappa", r.kappa}, {"factor", args.factor}});
        os << out.dump(2) << '\n';
    } else if (cmd == "tension-limit") {
        const ModelSpec spec{parse_model(args.model), args.T};
        const TensionSweep sweep = strong_tension_limit(spec);
        json vals = json::array();
        for (const auto& [T, v] : sweep.values)
            vals.push_back({{"T", T}, {"kc_sqrtT", v}});
        os << json{{"values", vals}, {"extrapolate", sweep.extrapolate}}.dump(2)
           << '\n';
    } else if (cmd == "spectrum") {
        const ModelSpec spec{parse_model(args.model), args.T};
        const WaveProfile p =
            solve_wave(spec, args.kappa, args.a, args.b, args.N);
        os << json(hill_spectrum(p, args.xi, args.M)).dump(2) << '\n';
    } else if (cmd == "delta0") {
        os << json{{"kappa", args.kappa},
                   {"T", args.T},
                   {"xi", args.xi},
                   {"a", args.a},
                   {"delta0", delta0(args.kappa, args.T, args.xi, args.a)}}
                  .dump(2)
           << '\n';
    } else if (cmd == "diagram") {
        const ModelSpec spec{parse_model(args.model), args.T};
        std::vector<double> T_grid(args.tcount);
        for (int i = 0; i < args.tcount; ++i)
            T_grid[i] =
                args.tmin * std::pow(args.tmax / args.tmin,
                                     args.tcount == 1
                                         ? 0.0
                                         : double(i) / (args.tcount - 1));
        DiagramOptions opts;
        opts.kappa_min = std::max(args.kmin, 1e-2);
        opts.kappa_max = args.kmax;
        opts.scan_step = args.step;
        opts.jobs = args.jobs;
        StabilityDiagram d = trace_boundaries(spec, T_grid, opts);
        if (args.what == "curves") {
            write_curves_csv(os, d);
        } else if (args.what == "grid") {
            classify_grid(d, opts.kappa_min, opts.kappa_max, args.ymin,
                          args.ymax, args.nx, args.ny, args.jobs);
            write_grid_csv(os, d);
        } else if (args.what == "svg") {
            classify_grid(d, opts.kappa_min, opts.kappa_max, args.ymin,
                          args.ymax, std::min(args.nx, 120),
                          std::min(args.ny, 80), args.jobs);
            write_svg(os, d);
        } else {
            throw CLI::ValidationError("--what",
                                       "expected curves, grid, or svg");
        }
    } else if (cmd == "validate") {
        auto results = run_acceptance(args.full);
        bool all = true;
        for (const auto& r : results) {
            os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name
               << "  (" << r.detail << ")\n";
            all = all && r.pass;
        }
        return all ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modwave: modulational stability of small periodic waves of "
                 "full-dispersion Camassa-Holm type equations"};
    app.require_subcommand(1);
    Args args;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output,-o", args.output,
                        "Output file (default stdout)");
        return sub;
    };
    auto* speed = add_common(app.add_subcommand(
        "speed", "Evaluate a phase-speed symbol and its derivatives"));
    speed->add_option("--model", args.symbol,
                      "Symbol: water-wave or ch (default water-wave)");
    speed->add_option("--kappa", args.kappa, "Wave number")->required();
    speed->add_option("--T", args.T, "Surface tension (default 0)");

    auto* coeffs = add_common(app.add_subcommand(
        "coeffs", "Small-amplitude expansion coefficients"));
    coeffs->add_option("--model", args.model, "fdch-surface or ch");
    coeffs->add_option("--kappa", args.kappa)->required();
    coeffs->add_option("--T", args.T);

    auto* wave = add_common(
        app.add_subcommand("wave", "Newton-solve a periodic traveling wave"));
    wave->add_option("--model", args.model);
    wave->add_option("--kappa", args.kappa)->required();
    wave->add_option("--T", args.T);
    wave->add_option("--a", args.a, "Amplitude parameter");
    wave->add_option("--b", args.b, "Quadrature constant parameter");
    wave->add_option("--N", args.N, "Cosine truncation (default 64)");

    auto* index = add_common(app.add_subcommand(
        "index", "Modulational instability index and classification"));
    index->add_option("--model", args.model);
    index->add_option("--kappa", args.kappa)->required();
    index->add_option("--T", args.T);

    auto* critical = add_common(
        app.add_subcommand("critical", "Roots of an index factor"));
    critical->add_option("--model", args.model);
    critical->add_option("--factor", args.factor, "i1, i2, i3, or i4");
    critical->add_option("--T", args.T);
    critical->add_option("--kmin", args.kmin)->required();
    critical->add_option("--kmax", args.kmax)->required();
    critical->add_option("--step", args.step, "Scan step (default 1e-3)");

    auto* tension = add_common(app.add_subcommand(
        "tension-limit", "kappa_c(T) sqrt(T) for strong surface tension"));
    tension->add_option("--model", args.model);

    auto* spectrum = add_common(app.add_subcommand(
        "spectrum", "Floquet-Fourier-Hill spectrum about a solved wave"));
    spectrum->add_option("--model", args.model);
    spectrum->add_option("--kappa", args.kappa)->required();
    spectrum->add_option("--T", args.T);
    spectrum->add_option("--a", args.a);
    spectrum->add_option("--b", args.b);
    spectrum->add_option("--N", args.N);
    spectrum->add_option("--M", args.M, "Fourier half-width (default 96)");
    spectrum->add_option("--xi", args.xi, "Floquet exponent");

    auto* d0 = add_common(app.add_subcommand(
        "delta0", "Cubic discriminant of the reduced 3x3 problem"));
    d0->add_option("--kappa", args.kappa)->required();
    d0->add_option("--T", args.T);
    d0->add_option("--xi", args.xi)->required();
    d0->add_option("--a", args.a);

    auto* diagram = add_common(app.add_subcommand(
        "diagram", "Stability diagram curves, grid, or SVG"));
    diagram->add_option("--model", args.model);
    diagram->add_option("--what", args.what, "curves, grid, or svg");
    diagram->add_option("--kmin", args.kmin, "Default 1e-2");
    diagram->add_option("--kmax", args.kmax, "Default 50");
    diagram->add_option("--step", args.step, "Root scan step");
    diagram->add_option("--tmin", args.tmin);
    diagram->add_option("--tmax", args.tmax);
    diagram->add_option("--tcount", args.tcount, "Tension samples");
    diagram->add_option("--ymin", args.ymin);
    diagram->add_option("--ymax", args.ymax);
    diagram->add_option("--nx", args.nx);
    diagram->add_option("--ny", args.ny);
    diagram->add_option("--jobs", args.jobs,
                        "Worker threads (or MODWAVE_JOBS)");

    auto* validate = add_common(app.add_subcommand(
        "validate", "Run the built-in verification checks"));
    validate->add_flag("--full", args.full, "Include Hill/solver checks");
    validate->add_flag("--quick", args.quick, "Index/root checks only");

    // diagram defaults differ from critical's
    diagram->parse_complete_callback([&] {
        if (diagram->count("--kmin") == 0) args.kmin = 1e-2;
        if (diagram->count("--kmax") == 0) args.kmax = 50.0;
        if (diagram->count("--step") == 0) args.step = 1e-2;
    });

    CLI11_PARSE(app, argc, argv);
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, args);
    } catch (const ConvergenceError& e) {
        std::cerr << nlohmann::json{{"error", e.what()},
                                    {"kind", "numerical"}}
                  << '\n';
        return 2;
    } catch (const BranchLostError& e) {
        std::cerr << nlohmann::json{{"error", e.what()},
                                    {"kind", "numerical"}}
                  << '\n';
        return 2;
    } catch (const StructureViolationError& e) {
        std::cerr << nlohmann::json{{"error", e.what()},
                                    {"kind", "numerical"}}
                  << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "parameter"}}
                  << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "domain"}}
                  << '\n';
        return 1;
    } catch (const SingularCoefficientError& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "domain"}}
                  << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "numerical"}}
                  << '\n';
        return 2;
    }
}
