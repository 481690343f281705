#include "adistab/adi.hpp"

#include "adistab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace adistab {

std::string_view scheme_name(SchemeKind kind)
{
    switch (kind) {
    case SchemeKind::Douglas: return "Do";
    case SchemeKind::CraigSneyd: return "CS";
    case SchemeKind::ModifiedCraigSneyd: return "MCS";
    case SchemeKind::HundsdorferVerwer: return "HV";
    }
    return "?";
}

SchemeKind parse_scheme(std::string_view name)
{
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (s == "DO" || s == "DOUGLAS") return SchemeKind::Douglas;
    if (s == "CS") return SchemeKind::CraigSneyd;
    if (s == "MCS") return SchemeKind::ModifiedCraigSneyd;
    if (s == "HV") return SchemeKind::HundsdorferVerwer;
    throw DomainError("unknown scheme '" + std::string(name) + "' (expected Do, CS, MCS or HV)");
}

SchemeConfig::SchemeConfig(SchemeKind k, double th) : kind(k), theta(th)
{
    if (!(theta > 0.0))
        throw DomainError("theta must be positive");
}

namespace {

std::optional<PeriodicTridiagonal> make_line_solver(const SplitOperator& op, std::size_t j,
                                                    double a)
{
    const double ak = a * op.axis_coefficient(j);
    if (ak == 0.0)
        return std::nullopt;
    return PeriodicTridiagonal(op.grid().points(j - 1), 1.0 + 2.0 * ak, -ak);
}

} // namespace

Field solve_line_system(const SplitOperator& op, std::size_t j, double a,
                        std::span<const double> rhs)
{
    if (a < 0.0)
        throw DomainError("implicit weight a must be nonnegative");
    if (j < 1 || j > op.dim())
        throw DomainError("line direction must lie in 1..k");
    if (rhs.size() != op.grid().size())
        throw StructuralError("rhs size does not match the grid");
    Field x(rhs.begin(), rhs.end());
    if (auto solver = make_line_solver(op, j, a))
        solver->solve_lines(x, op.grid().stride(j - 1));
    return x;
}

AdiStepper::AdiStepper(SchemeConfig scheme, const SplitOperator& op, double dt,
                       OverflowPolicy policy)
    : scheme_(scheme), op_(&op), dt_(dt), policy_(policy)
{
    if (!(dt_ > 0.0))
        throw DomainError("time step must be positive");
    const double a = scheme_.theta * dt_;
    for (std::size_t j = 1; j <= op.dim(); ++j)
        solvers_.push_back(make_line_solver(op, j, a));

    const std::size_t n = op.grid().size();
    f_prev_.assign(op.terms(), Field(n));
    if (scheme_.kind != SchemeKind::Douglas)
        f_mid_.assign(op.terms(), Field(n));
    if (op.has_forcing())
        g_next_.assign(op.terms(), Field(n));
    y0_.resize(n);
    y_.resize(n);
}

void AdiStepper::implicit_solve(std::size_t j, std::span<double> x) const
{
    if (const auto& s = solvers_[j - 1])
        s->solve_lines(x, op_->grid().stride(j - 1));
}

void AdiStepper::implicit_sweep(std::span<double> y, const std::vector<Field>& subtract,
                                bool with_forcing)
{
    // Y_j = Y_{j-1} + theta dt (A_j Y_j + g_j(t_n) - F_j(t_{n-1}, U_{n-1}))
    const double a = scheme_.theta * dt_;
    for (std::size_t j = 1; j <= op_->dim(); ++j) {
        const Field& f = subtract[j];
        if (with_forcing) {
            const Field& g = g_next_[j];
            for (std::size_t p = 0; p < y.size(); ++p)
                y[p] += a * (g[p] - f[p]);
        } else {
            for (std::size_t p = 0; p < y.size(); ++p)
                y[p] -= a * f[p];
        }
        implicit_solve(j, y);
    }
}

void AdiStepper::step(std::span<const double> u_prev, double t_prev, std::span<double> u_next,
                      std::size_t step_index)
{
    step(u_prev, t_prev, t_prev + dt_, u_next, step_index);
}

void AdiStepper::step(std::span<const double> u_prev, double t_prev, double t_next,
                      std::span<double> u_next, std::size_t step_index)
{
    const SplitOperator& op = *op_;
    const std::size_t n = op.grid().size();
    const std::size_t k = op.dim();
    if (u_prev.size() != n || u_next.size() != n)
        throw StructuralError("field size does not match the grid");
    const bool forced = op.has_forcing();
    const double dt = dt_;
    const double theta = scheme_.theta;

    // F_j(t_{n-1}, U_{n-1}), reused by predictor and corrector.
    for (std::size_t j = 0; j <= k; ++j) {
        op.apply_term(j, u_prev, f_prev_[j]);
        if (forced) {
            op.forcing_term(j, t_prev, y_);
            for (std::size_t p = 0; p < n; ++p)
                f_prev_[j][p] += y_[p];
        }
    }
    if (forced)
        for (std::size_t j = 0; j <= k; ++j)
            op.forcing_term(j, t_next, g_next_[j]);

    // Y_0 = U_{n-1} + dt F(t_{n-1}, U_{n-1})
    for (std::size_t p = 0; p < n; ++p) {
        double s = 0.0;
        for (std::size_t j = 0; j <= k; ++j)
            s += f_prev_[j][p];
        y0_[p] = u_prev[p] + dt * s;
    }

    std::copy(y0_.begin(), y0_.end(), y_.begin());
    implicit_sweep(y_, f_prev_, forced);

    if (scheme_.kind == SchemeKind::Douglas) {
        std::copy(y_.begin(), y_.end(), u_next.begin());
    } else {
        const bool need_all = scheme_.kind != SchemeKind::CraigSneyd;
        for (std::size_t j = 0; j <= (need_all ? k : 0); ++j)
            op.apply_term(j, y_, f_mid_[j]);

        // F_j(t_n, Y_k) - F_j(t_{n-1}, U_{n-1})
        auto delta = [&](std::size_t j, std::size_t p) {
            const double g = forced ? g_next_[j][p] : 0.0;
            return f_mid_[j][p] + g - f_prev_[j][p];
        };
        auto delta_sum = [&](std::size_t p) {
            double s = 0.0;
            for (std::size_t j = 0; j <= k; ++j)
                s += delta(j, p);
            return s;
        };

        switch (scheme_.kind) {
        case SchemeKind::CraigSneyd:
            for (std::size_t p = 0; p < n; ++p)
                y0_[p] += 0.5 * dt * delta(0, p);
            break;
        case SchemeKind::ModifiedCraigSneyd:
            for (std::size_t p = 0; p < n; ++p)
                y0_[p] += theta * dt * delta(0, p) + (0.5 - theta) * dt * delta_sum(p);
            break;
        case SchemeKind::HundsdorferVerwer:
            for (std::size_t p = 0; p < n; ++p)
                y0_[p] += 0.5 * dt * delta_sum(p);
            break;
        case SchemeKind::Douglas: break;
        }

        if (scheme_.kind == SchemeKind::HundsdorferVerwer) {
            // Corrector offset F_j(t_n, Y_k): the forcing terms cancel.
            for (std::size_t j = 1; j <= k; ++j) {
                const Field& f = f_mid_[j];
                for (std::size_t p = 0; p < n; ++p)
                    y0_[p] -= theta * dt * f[p];
                implicit_solve(j, y0_);
            }
        } else {
            implicit_sweep(y0_, f_prev_, forced);
        }
        std::copy(y0_.begin(), y0_.end(), u_next.begin());
    }

    if (policy_ == OverflowPolicy::Strict && !all_finite(u_next))
        throw InstabilityError(step_index, "non-finite value in " +
                                               std::string(scheme_name(scheme_.kind)) +
                                               " step " + std::to_string(step_index));
}

Field AdiStepper::step(std::span<const double> u_prev, double t_prev)
{
    Field out(u_prev.size());
    step(u_prev, t_prev, out);
    return out;
}

Field step(const SchemeConfig& scheme, const SplitOperator& op, std::span<const double> u_prev,
           double t_prev, double dt, OverflowPolicy policy)
{
    AdiStepper stepper(scheme, op, dt, policy);
    return stepper.step(u_prev, t_prev);
}

Field integrate(const SchemeConfig& scheme, const SplitOperator& op, Field u0, double t_final,
                std::size_t n_steps, OverflowPolicy policy)
{
    if (!(t_final > 0.0))
        throw DomainError("final time must be positive");
    if (n_steps < 1)
        throw DomainError("need at least one time step");
    const double dt = t_final / static_cast<double>(n_steps);
    AdiStepper stepper(scheme, op, dt, policy);
    Field next(u0.size());
    for (std::size_t i = 1; i <= n_steps; ++i) {
        const double t_prev = static_cast<double>(i - 1) * dt;
        const double t_next = static_cast<double>(i) * dt;
        stepper.step(u0, t_prev, t_next, next, i);
        u0.swap(next);
        if (policy == OverflowPolicy::Tolerant && !all_finite(u0))
            break;
    }
    return u0;
}

} // namespace adistab
