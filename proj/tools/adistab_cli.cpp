// adistab: theta bounds, stability sweeps and convergence studies for ADI
// schemes applied to diffusion equations with mixed derivatives.

#include "adistab/errors.hpp"
#include "adistab/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace adistab;

std::vector<std::size_t> parse_counts(const std::string& text)
{
    std::vector<std::size_t> out;
    for (const auto& t : split_list(text)) {
        std::size_t used = 0;
        const auto v = std::stoull(t, &used);
        if (used != t.size() || v == 0)
            throw StructuralError("expected positive integers, got '" + t + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

struct SweepArgs
{
    std::string scheme;
    std::optional<double> theta;
    std::string theta_policy;
    std::string problem_file;
    std::string template_name;
    double gamma = 0.0;
    std::size_t nphi = 0;
    double rmin = 1e-2, rmax = 1e6;
    std::size_t rcount = 25;
    bool anisotropic = false;
    std::string out;
};

int run_sweep_cmd(const SweepArgs& a)
{
    if (a.problem_file.empty() == a.template_name.empty())
        throw StructuralError("sweep needs exactly one of --problem or --template");
    const ProblemSpec problem =
        a.problem_file.empty() ? problem_template(a.template_name, a.gamma) : load_problem(a.problem_file);
    const std::size_t k = problem.dim();
    const SchemeKind kind = parse_scheme(a.scheme);
    const double gamma = a.problem_file.empty() ? a.gamma : gamma_min(problem.diffusion);

    double theta = 0.0;
    if (a.theta && !a.theta_policy.empty())
        throw StructuralError("give either --theta or --theta-policy");
    if (a.theta)
        theta = *a.theta;
    else
        theta = ThetaPolicy::parse(a.theta_policy.empty() ? "theorem1" : a.theta_policy)
                    .resolve(kind, k, gamma);

    const std::size_t nphi = a.nphi ? a.nphi : (k == 2 ? 64 : k == 3 ? 32 : 16);
    const auto sampling = SweepSampling::uniform(k, nphi, a.rmin, a.rmax, a.rcount, a.anisotropic);

    std::ofstream csv;
    if (!a.out.empty()) {
        csv.open(a.out, std::ios::binary);
        if (!csv)
            throw StructuralError("cannot write '" + a.out + "'");
    }
    const SweepResult res =
        run_sweep(kind, theta, problem, sampling, a.out.empty() ? nullptr : &csv, a.anisotropic);

    std::cout << "scheme " << scheme_name(kind) << ", theta " << format_number(theta) << ", "
              << res.samples << " samples\n";
    std::cout << "max|M| = " << format_number(res.max_abs_m) << " at r = "
              << format_number(res.witness_ratio.r) << ", phi = (";
    for (std::size_t j = 0; j < res.witness_phi.size(); ++j)
        std::cout << (j ? ", " : "") << format_number(res.witness_phi[j]);
    std::cout << ")\n";
    std::cout << "verdict: " << (res.stable ? "stable" : "unstable") << "\n";
    return 0;
}

struct ConvergeArgs
{
    std::string config_file;
    std::string template_name;
    std::string problem_file;
    std::optional<double> gamma;
    std::string m;
    std::string schemes;
    std::string theta_policy;
    std::optional<double> t_final;
    std::string steps;
    std::optional<double> fit_min, fit_max;
    std::string out;
    bool allow_large = false;
};

int run_converge_cmd(const ConvergeArgs& a)
{
    ExperimentConfig cfg = a.config_file.empty()
                               ? ExperimentConfig{}
                               : ExperimentConfig::from_config(KeyValueConfig::load(a.config_file));
    if (!a.template_name.empty())
        cfg.template_name = a.template_name;
    if (!a.problem_file.empty())
        cfg.problem_file = a.problem_file;
    if (a.gamma)
        cfg.gamma = *a.gamma;
    if (!a.m.empty())
        cfg.m = parse_counts(a.m);
    if (!a.schemes.empty()) {
        cfg.schemes.clear();
        for (const auto& s : split_list(a.schemes))
            cfg.schemes.push_back(parse_scheme(s));
    }
    if (!a.theta_policy.empty())
        cfg.theta_policy = ThetaPolicy::parse(a.theta_policy);
    if (a.t_final)
        cfg.t_final = *a.t_final;
    if (!a.steps.empty())
        cfg.n_list = parse_counts(a.steps);
    if (a.fit_min)
        cfg.fit_min = *a.fit_min;
    if (a.fit_max)
        cfg.fit_max = *a.fit_max;
    if (!a.out.empty())
        cfg.out = a.out;
    cfg.allow_large = cfg.allow_large || a.allow_large;
    if (cfg.out.empty())
        throw StructuralError("converge needs --out FILE.csv");

    const ConvergenceResult res = run_convergence(cfg);
    std::ofstream csv(cfg.out, std::ios::binary);
    if (!csv)
        throw StructuralError("cannot write '" + cfg.out + "'");
    write_error_csv(csv, res.records);

    std::cout << "wrote " << res.records.size() << " records to " << cfg.out << "\n";
    for (const auto& s : res.slopes) {
        const auto run = select(res.records, s.scheme, s.m);
        std::cout << scheme_name(s.scheme) << " theta=" << format_number(s.theta) << " m=" << s.m
                  << " slope[" << format_number(cfg.fit_min) << ", " << format_number(cfg.fit_max)
                  << "]=" << format_number(s.slope) << " (" << s.points << " points)"
                  << (errors_monotone(run) ? " monotone" : " non-monotone") << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ADI theta bounds, von Neumann sweeps and convergence studies"};
    app.require_subcommand(1);

    std::size_t bounds_k = 2;
    double bounds_gamma = 0.0;
    auto* bounds = app.add_subcommand("bounds", "Print sufficient and necessary theta bounds");
    bounds->add_option("--k", bounds_k, "Spatial dimension (>= 2)")->required();
    bounds->add_option("--gamma", bounds_gamma, "Mixed-coefficient bound in [0, 1]")->required();

    SweepArgs sw;
    auto* sweep = app.add_subcommand("sweep", "Sampled von Neumann stability check");
    sweep->add_option("--scheme", sw.scheme, "Do, CS, MCS or HV")->required();
    auto* theta_opt = sweep->add_option("--theta", sw.theta, "Explicit theta");
    sweep->add_option("--theta-policy", sw.theta_policy,
                      "theorem1|theorem2|fraction:F|value:V|paper-2d|paper-3d")
        ->excludes(theta_opt);
    auto* prob_opt = sweep->add_option("--problem", sw.problem_file, "Problem config file");
    sweep->add_option("--template", sw.template_name, "2d-gamma or 3d-gamma")->excludes(prob_opt);
    sweep->add_option("--gamma", sw.gamma, "gamma substituted into the template");
    sweep->add_option("--nphi", sw.nphi, "Angles per direction (default 64 in 2D, 32 in 3D)");
    sweep->add_option("--rmin", sw.rmin, "Smallest dt/dx^2");
    sweep->add_option("--rmax", sw.rmax, "Largest dt/dx^2");
    sweep->add_option("--rcount", sw.rcount, "Number of log-spaced ratios");
    sweep->add_flag("--anisotropic", sw.anisotropic, "Also sample one direction at 4r");
    sweep->add_option("--out", sw.out, "Write per-sample CSV here");

    ConvergeArgs cv;
    auto* converge = app.add_subcommand("converge", "Global temporal errors against the exact semidiscrete solution");
    converge->add_option("--config", cv.config_file, "Experiment config file (flags override it)");
    converge->add_option("--template", cv.template_name, "2d-gamma or 3d-gamma");
    converge->add_option("--problem", cv.problem_file, "Problem config file");
    converge->add_option("--gamma", cv.gamma, "gamma substituted into the template");
    converge->add_option("--m", cv.m, "Grid sizes, comma separated");
    converge->add_option("--schemes", cv.schemes, "Schemes, comma separated");
    converge->add_option("--theta-policy", cv.theta_policy,
                         "theorem1|theorem2|fraction:F|value:V|paper-2d|paper-3d");
    converge->add_option("--t-final", cv.t_final, "Final time");
    converge->add_option("--steps", cv.steps, "Step-size denominators N (dt = 1/N), comma separated");
    converge->add_option("--fit-min", cv.fit_min, "Smallest dt in the slope fit");
    converge->add_option("--fit-max", cv.fit_max, "Largest dt in the slope fit");
    converge->add_option("--out", cv.out, "Output CSV");
    converge->add_flag("--allow-large", cv.allow_large, "Permit m > 40 in three dimensions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bounds) {
            std::cout << format_bounds_table(bounds_k, bounds_gamma);
            return 0;
        }
        if (*sweep)
            return run_sweep_cmd(sw);
        if (*converge)
            return run_converge_cmd(cv);
    } catch (const std::exception& e) {
        std::cerr << "adistab: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
