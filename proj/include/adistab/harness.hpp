#pragma once

#include "adistab/adi.hpp"
#include "adistab/bounds.hpp"
#include "adistab/config.hpp"
#include "adistab/model.hpp"
#include "adistab/symbol.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace adistab {

/// m^{-k/2} ||U_ref - U_num||_2, or +inf when U_num is not finite.
double global_error(std::span<const double> u_ref, std::span<const double> u_num, std::size_t k,
                    std::size_t m);

// ---------------------------------------------------------------------------
// theta policies

struct ThetaPolicy
{
    enum class Kind { Theorem1, Theorem2, Fraction, Value, Paper2d, Paper3d };

    Kind kind = Kind::Theorem1;
    double param = 0.0;  // fraction or explicit value

    /// "theorem1", "theorem2", "fraction:F", "value:V", "paper-2d", "paper-3d".
    static ThetaPolicy parse(const std::string& text);
    std::string to_string() const;

    double resolve(SchemeKind scheme, std::size_t k, double gamma) const;
};

// ---------------------------------------------------------------------------
// bound tables

struct BoundsRow
{
    SchemeKind kind;
    std::optional<double> sufficient;  // absent for k >= 4
    double necessary;
    bool sharp;  // |sufficient - necessary| <= 1e-12
};

std::vector<BoundsRow> bounds_table(std::size_t k, double gamma);
/// Fixed-width table with values rounded to three decimals.
std::string format_bounds_table(std::size_t k, double gamma);

// ---------------------------------------------------------------------------
// convergence studies

struct ExperimentConfig
{
    std::string template_name = "2d-gamma";  // ignored when problem_file is set
    std::string problem_file;
    double gamma = 0.9;
    std::vector<std::size_t> m = {40};
    std::vector<SchemeKind> schemes = {kAllSchemes.begin(), kAllSchemes.end()};
    ThetaPolicy theta_policy;
    double t_final = 5.0;
    std::vector<std::size_t> n_list;  // dt = 1/N; empty = default_step_counts()
    double fit_min = 1e-3;
    double fit_max = 1e-1;
    std::string out;
    bool allow_large = false;  // permit m > 40 in 3D

    /// Keys: template, problem, gamma, m, schemes, theta-policy, t-final,
    /// steps (list of N), fit-min, fit-max, out, allow-large.
    static ExperimentConfig from_config(const KeyValueConfig& cfg);
    ProblemSpec problem() const;
    std::vector<std::size_t> step_counts() const;
};

/// 25 values N = round(10^(3i/24)), i = 0..24, deduplicated: dt = 1/N
/// spans [1e-3, 1].
std::vector<std::size_t> default_step_counts();

struct ErrorRecord
{
    SchemeKind scheme;
    double theta;
    std::size_t m;
    double dt;
    double error;  // +inf when the run blew up
};

struct SlopeRecord
{
    SchemeKind scheme;
    double theta;
    std::size_t m;
    double slope;  // NaN with fewer than two usable points
    std::size_t points;
};

struct ConvergenceResult
{
    std::vector<ErrorRecord> records;  // scheme, then m, then descending dt
    std::vector<SlopeRecord> slopes;
    std::size_t reference_evaluations = 0;
};

/// Least-squares slope of log(error) against log(dt) over dt in [lo, hi];
/// non-finite errors are skipped.
SlopeRecord fit_slope(const std::vector<ErrorRecord>& records, double lo, double hi);

/// True iff errors never increase as dt decreases (records in descending dt).
bool errors_monotone(const std::vector<ErrorRecord>& records);

ConvergenceResult run_convergence(const ExperimentConfig& cfg, const ProblemSpec& problem);
ConvergenceResult run_convergence(const ExperimentConfig& cfg);

/// Records restricted to one scheme and grid size, in stored order.
std::vector<ErrorRecord> select(const std::vector<ErrorRecord>& records, SchemeKind scheme,
                                std::size_t m);

// ---------------------------------------------------------------------------
// CSV

/// Fixed 17-significant-digit formatting, independent of locale.
std::string format_number(double v);

/// Header `scheme,theta,m,dt,error`, LF line endings.
void write_error_csv(std::ostream& out, const std::vector<ErrorRecord>& records);

/// Header `scheme,theta,r,[r_1..r_k,]phi_1..phi_k,absM`; per-direction
/// ratios are written only when `with_ratio_columns` is set.
SweepResult run_sweep(SchemeKind kind, double theta, const ProblemSpec& problem,
                      const SweepSampling& sampling, std::ostream* csv,
                      bool with_ratio_columns = false);

} // namespace adistab
