#pragma once

#include "adistab/discretization.hpp"
#include "adistab/grid.hpp"
#include "adistab/tridiagonal.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adistab {

enum class SchemeKind { Douglas, CraigSneyd, ModifiedCraigSneyd, HundsdorferVerwer };

inline constexpr std::array<SchemeKind, 4> kAllSchemes = {
    SchemeKind::Douglas, SchemeKind::CraigSneyd, SchemeKind::ModifiedCraigSneyd,
    SchemeKind::HundsdorferVerwer};

/// Short name: "Do", "CS", "MCS", "HV".
std::string_view scheme_name(SchemeKind kind);
/// Parses the short names (case-insensitive).
SchemeKind parse_scheme(std::string_view name);

struct SchemeConfig
{
    SchemeConfig(SchemeKind k, double th);

    SchemeKind kind;
    double theta;
};

enum class OverflowPolicy {
    Strict,    // throw InstabilityError at the first non-finite value
    Tolerant,  // let values grow; callers report an infinite error
};

/// Solve (I - a A_j) x = rhs, j = 1..k, line by line along direction j.
Field solve_line_system(const SplitOperator& op, std::size_t j, double a,
                        std::span<const double> rhs);

/// One-step ADI integrator for a fixed scheme, operator and time step.
/// The cyclic line factorisations for a = theta*dt are built once per
/// direction; scratch storage is reused across steps.
class AdiStepper
{
public:
    AdiStepper(SchemeConfig scheme, const SplitOperator& op, double dt,
               OverflowPolicy policy = OverflowPolicy::Strict);

    const SchemeConfig& scheme() const noexcept { return scheme_; }
    double dt() const noexcept { return dt_; }

    /// U_n from U_{n-1} at t_{n-1}; t_n = t_prev + dt.
    void step(std::span<const double> u_prev, double t_prev, std::span<double> u_next,
              std::size_t step_index = 1);
    /// Same with an explicit t_n.
    void step(std::span<const double> u_prev, double t_prev, double t_next,
              std::span<double> u_next, std::size_t step_index);

    Field step(std::span<const double> u_prev, double t_prev);

private:
    // x <- (I - theta dt A_j)^{-1} x
    void implicit_solve(std::size_t j, std::span<double> x) const;
    void implicit_sweep(std::span<double> y, const std::vector<Field>& subtract,
                        bool with_forcing);

    SchemeConfig scheme_;
    const SplitOperator* op_;
    double dt_;
    OverflowPolicy policy_;
    std::vector<std::optional<PeriodicTridiagonal>> solvers_;  // per direction; empty = identity

    std::vector<Field> f_prev_;  // F_j(t_{n-1}, U_{n-1}), j = 0..k
    std::vector<Field> f_mid_;   // A_j Y_k, j = 0..k
    std::vector<Field> g_next_;  // g_j(t_n) when forced
    Field y0_, y_;
};

/// Single step; builds a temporary stepper.
Field step(const SchemeConfig& scheme, const SplitOperator& op, std::span<const double> u_prev,
           double t_prev, double dt, OverflowPolicy policy = OverflowPolicy::Strict);

/// N steps of size dt = T/N from t = 0, with t_n = n dt. In tolerant mode
/// integration stops early once the solution is non-finite.
Field integrate(const SchemeConfig& scheme, const SplitOperator& op, Field u0, double t_final,
                std::size_t n_steps, OverflowPolicy policy = OverflowPolicy::Strict);

} // namespace adistab
