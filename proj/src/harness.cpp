#include "adistab/harness.hpp"

#include "adistab/discretization.hpp"
#include "adistab/errors.hpp"
#include "adistab/reference.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace adistab {

double global_error(std::span<const double> u_ref, std::span<const double> u_num, std::size_t k,
                    std::size_t m)
{
    if (u_ref.size() != u_num.size())
        throw StructuralError("global_error: fields have different sizes");
    double sum = 0.0;
    for (std::size_t p = 0; p < u_ref.size(); ++p) {
        if (!std::isfinite(u_num[p]))
            return std::numeric_limits<double>::infinity();
        const double d = u_ref[p] - u_num[p];
        sum += d * d;
    }
    const double e = std::pow(static_cast<double>(m), -0.5 * static_cast<double>(k)) * std::sqrt(sum);
    return std::isfinite(e) ? e : std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------------------

ThetaPolicy ThetaPolicy::parse(const std::string& text)
{
    auto number_after = [&](std::size_t colon) {
        const std::string v = text.substr(colon + 1);
        try {
            std::size_t used = 0;
            const double x = std::stod(v, &used);
            if (used != v.size())
                throw std::invalid_argument(v);
            return x;
        } catch (const std::exception&) {
            throw StructuralError("theta policy '" + text + "': bad number");
        }
    };
    ThetaPolicy p;
    if (text == "theorem1") {
        p.kind = Kind::Theorem1;
    } else if (text == "theorem2") {
        p.kind = Kind::Theorem2;
    } else if (text == "paper-2d") {
        p.kind = Kind::Paper2d;
    } else if (text == "paper-3d") {
        p.kind = Kind::Paper3d;
    } else if (text.rfind("fraction:", 0) == 0) {
        p.kind = Kind::Fraction;
        p.param = number_after(8);
        if (!(p.param > 0.0))
            throw DomainError("theta fraction must be positive");
    } else if (text.rfind("value:", 0) == 0) {
        p.kind = Kind::Value;
        p.param = number_after(5);
        if (!(p.param > 0.0))
            throw DomainError("theta must be positive");
    } else {
        throw StructuralError("unknown theta policy '" + text + "'");
    }
    return p;
}

std::string ThetaPolicy::to_string() const
{
    switch (kind) {
    case Kind::Theorem1: return "theorem1";
    case Kind::Theorem2: return "theorem2";
    case Kind::Fraction: return "fraction:" + format_number(param);
    case Kind::Value: return "value:" + format_number(param);
    case Kind::Paper2d: return "paper-2d";
    case Kind::Paper3d: return "paper-3d";
    }
    return {};
}

double ThetaPolicy::resolve(SchemeKind scheme, std::size_t k, double gamma) const
{
    // Roughly 90% of the sufficient bounds for the two benchmark problems.
    static constexpr double kPaper2d[] = {0.45, 0.45, 0.29, 0.25};
    static constexpr double kPaper3d[] = {0.5, 0.45, 0.35, 0.3};
    const auto idx = static_cast<std::size_t>(scheme);
    switch (kind) {
    case Kind::Theorem1: return theorem1_lower_bound(scheme, k, gamma).theta_min;
    case Kind::Theorem2: return theorem2_lower_bound(scheme, k, gamma).theta_min;
    case Kind::Fraction: return param * theorem1_lower_bound(scheme, k, gamma).theta_min;
    case Kind::Value: return param;
    case Kind::Paper2d: return kPaper2d[idx];
    case Kind::Paper3d: return kPaper3d[idx];
    }
    return param;
}

// ---------------------------------------------------------------------------

std::vector<BoundsRow> bounds_table(std::size_t k, double gamma)
{
    std::vector<BoundsRow> rows;
    for (SchemeKind s : kAllSchemes) {
        BoundsRow row{s, std::nullopt, theorem2_lower_bound(s, k, gamma).theta_min, false};
        if (k == 2 || k == 3) {
            row.sufficient = theorem1_lower_bound(s, k, gamma).theta_min;
            row.sharp = std::abs(*row.sufficient - row.necessary) <= 1e-12;
        }
        rows.push_back(row);
    }
    return rows;
}

std::string format_bounds_table(std::size_t k, double gamma)
{
    std::ostringstream out;
    char buf[128];
    std::snprintf(buf, sizeof buf, "k = %zu, gamma = %g\n", k, gamma);
    out << buf;
    out << "scheme  sufficient  necessary  note\n";
    for (const auto& row : bounds_table(k, gamma)) {
        const std::string name(scheme_name(row.kind));
        std::string suff = "-";
        if (row.sufficient) {
            std::snprintf(buf, sizeof buf, "%.3f", round_places(*row.sufficient, 3));
            suff = buf;
        }
        std::snprintf(buf, sizeof buf, "%-6s  %-10s  %-9.3f  %s\n", name.c_str(), suff.c_str(),
                      round_places(row.necessary, 3),
                      row.sufficient ? (row.sharp ? "sharp" : "") : "necessary-only");
        out << buf;
    }
    return out.str();
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> default_step_counts()
{
    std::vector<std::size_t> n;
    for (int i = 0; i <= 24; ++i) {
        const auto v = static_cast<std::size_t>(std::llround(std::pow(10.0, 3.0 * i / 24.0)));
        if (n.empty() || n.back() != v)
            n.push_back(v);
    }
    return n;
}

ExperimentConfig ExperimentConfig::from_config(const KeyValueConfig& cfg)
{
    auto to_count = [](const std::string& s) {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != s.size() || v == 0)
            throw StructuralError("expected a positive integer, got '" + s + "'");
        return static_cast<std::size_t>(v);
    };

    ExperimentConfig c;
    c.template_name = cfg.get_or("template", c.template_name);
    c.problem_file = cfg.get_or("problem", "");
    if (cfg.has("gamma"))
        c.gamma = cfg.number("gamma");
    if (cfg.has("m")) {
        c.m.clear();
        for (const auto& t : split_list(cfg.get("m")))
            c.m.push_back(to_count(t));
    }
    if (cfg.has("schemes")) {
        c.schemes.clear();
        for (const auto& t : split_list(cfg.get("schemes")))
            c.schemes.push_back(parse_scheme(t));
    }
    if (cfg.has("theta-policy"))
        c.theta_policy = ThetaPolicy::parse(cfg.get("theta-policy"));
    if (cfg.has("t-final"))
        c.t_final = cfg.number("t-final");
    if (cfg.has("steps"))
        for (const auto& t : split_list(cfg.get("steps")))
            c.n_list.push_back(to_count(t));
    if (cfg.has("fit-min"))
        c.fit_min = cfg.number("fit-min");
    if (cfg.has("fit-max"))
        c.fit_max = cfg.number("fit-max");
    c.out = cfg.get_or("out", "");
    c.allow_large = cfg.get_or("allow-large", "false") == "true";
    return c;
}

ProblemSpec ExperimentConfig::problem() const
{
    return problem_file.empty() ? problem_template(template_name, gamma) : load_problem(problem_file);
}

std::vector<std::size_t> ExperimentConfig::step_counts() const
{
    return n_list.empty() ? default_step_counts() : n_list;
}

SlopeRecord fit_slope(const std::vector<ErrorRecord>& records, double lo, double hi)
{
    SlopeRecord s{SchemeKind::Douglas, 0.0, 0, std::numeric_limits<double>::quiet_NaN(), 0};
    if (!records.empty()) {
        s.scheme = records.front().scheme;
        s.theta = records.front().theta;
        s.m = records.front().m;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto& r : records) {
        if (r.dt < lo * (1 - 1e-12) || r.dt > hi * (1 + 1e-12))
            continue;
        if (!std::isfinite(r.error) || r.error <= 0.0)
            continue;
        const double x = std::log(r.dt), y = std::log(r.error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    s.points = n;
    if (n >= 2) {
        const double nd = static_cast<double>(n);
        const double den = nd * sxx - sx * sx;
        if (den > 0.0)
            s.slope = (nd * sxy - sx * sy) / den;
    }
    return s;
}

bool errors_monotone(const std::vector<ErrorRecord>& records)
{
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].error > records[i - 1].error)
            return false;
    return true;
}

std::vector<ErrorRecord> select(const std::vector<ErrorRecord>& records, SchemeKind scheme,
                                std::size_t m)
{
    std::vector<ErrorRecord> out;
    for (const auto& r : records)
        if (r.scheme == scheme && r.m == m)
            out.push_back(r);
    return out;
}

ConvergenceResult run_convergence(const ExperimentConfig& cfg, const ProblemSpec& problem)
{
    const std::size_t k = problem.dim();
    if (!(cfg.t_final > 0.0))
        throw DomainError("final time must be positive");
    for (std::size_t m : cfg.m)
        if (k >= 3 && m > 40 && !cfg.allow_large)
            throw DomainError("3D grids with m > 40 need allow-large");
    const double gamma = cfg.problem_file.empty() ? cfg.gamma : gamma_min(problem.diffusion);

    auto n_list = cfg.step_counts();
    std::sort(n_list.begin(), n_list.end());
    n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());

    ConvergenceResult result;
    std::map<std::size_t, std::pair<Field, Field>> cache;  // m -> (U(0), U(T))

    for (SchemeKind scheme : cfg.schemes) {
        const SchemeConfig sc(scheme, cfg.theta_policy.resolve(scheme, k, gamma));
        for (std::size_t m : cfg.m) {
            const GridSpec grid = GridSpec::uniform(k, m);
            const SplitOperator op(problem, grid);
            auto it = cache.find(m);
            if (it == cache.end()) {
                Field u0 = sample_initial(problem, grid);
                Field ref = exact_semidiscrete(problem, grid, u0, cfg.t_final);
                ++result.reference_evaluations;
                it = cache.emplace(m, std::make_pair(std::move(u0), std::move(ref))).first;
            }
            const auto& [u0, ref] = it->second;

            const std::size_t first = result.records.size();
            for (std::size_t n : n_list) {
                const double steps_real = cfg.t_final * static_cast<double>(n);
                const auto steps = static_cast<std::size_t>(std::llround(steps_real));
                if (steps == 0 || std::abs(steps_real - static_cast<double>(steps)) > 1e-9 * steps_real)
                    throw DomainError("t-final * N must be a positive integer for every N");
                const Field u = integrate(sc, op, u0, cfg.t_final, steps, OverflowPolicy::Tolerant);
                result.records.push_back({scheme, sc.theta, m, 1.0 / static_cast<double>(n),
                                          global_error(ref, u, k, m)});
            }
            std::vector<ErrorRecord> run(result.records.begin() + static_cast<std::ptrdiff_t>(first),
                                         result.records.end());
            result.slopes.push_back(fit_slope(run, cfg.fit_min, cfg.fit_max));
        }
    }
    return result;
}

ConvergenceResult run_convergence(const ExperimentConfig& cfg)
{
    return run_convergence(cfg, cfg.problem());
}

// ---------------------------------------------------------------------------

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_error_csv(std::ostream& out, const std::vector<ErrorRecord>& records)
{
    out << "scheme,theta,m,dt,error\n";
    for (const auto& r : records) {
        out << scheme_name(r.scheme) << ',' << format_number(r.theta) << ',' << r.m << ','
            << format_number(r.dt) << ',' << format_number(r.error) << '\n';
    }
}

SweepResult run_sweep(SchemeKind kind, double theta, const ProblemSpec& problem,
                      const SweepSampling& sampling, std::ostream* csv, bool with_ratio_columns)
{
    const std::size_t k = problem.dim();
    std::function<void(const SweepSample&)> visit;
    if (csv) {
        *csv << "scheme,theta,r";
        if (with_ratio_columns)
            for (std::size_t j = 1; j <= k; ++j)
                *csv << ",r_" << j;
        for (std::size_t j = 1; j <= k; ++j)
            *csv << ",phi_" << j;
        *csv << ",absM\n";
        const std::string name(scheme_name(kind));
        const std::string th = format_number(theta);
        visit = [csv, name, th, with_ratio_columns](const SweepSample& s) {
            std::ostream& o = *csv;
            o << name << ',' << th << ',' << format_number(s.ratio->r);
            if (with_ratio_columns)
                for (double r : s.ratio->r_diag)
                    o << ',' << format_number(r);
            for (double phi : s.phi)
                o << ',' << format_number(phi);
            o << ',' << format_number(s.abs_m) << '\n';
        };
    }
    return stability_sweep(kind, theta, problem.diffusion, problem.beta, sampling, visit);
}

} // namespace adistab
