#include "adistab/bounds.hpp"

#include "adistab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace adistab {

namespace {

void check_gamma(double gamma)
{
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw DomainError("gamma must lie in [0, 1]");
}

double ak_residual(double a, std::size_t k)
{
    const double km1 = static_cast<double>(k - 1);
    return 2.0 * a * std::pow(1.0 + (1.0 - a) / km1, km1) - 1.0;
}

} // namespace

double constant_d(std::size_t k)
{
    const double kd = static_cast<double>(k);
    return std::pow(1.0 - 1.0 / kd, kd - 1.0);
}

double constant_c(std::size_t k)
{
    const double kd = static_cast<double>(k);
    return std::pow(1.0 - 1.0 / kd, kd);
}

double constant_b(std::size_t k)
{
    const double km1 = static_cast<double>(k - 1);
    return 1.0 / (1.0 + std::pow(1.0 + 1.0 / km1, km1));
}

double solve_ak(std::size_t k)
{
    if (k < 2)
        throw DomainError("a_k is defined for k >= 2");
    // Residual is -1 at a = 0 and positive at a = 1/2.
    double lo = 1e-9, hi = 0.5 - 1e-9;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (ak_residual(mid, k) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    // Pick whichever end has the smaller residual.
    return std::abs(ak_residual(lo, k)) <= std::abs(ak_residual(hi, k)) ? lo : hi;
}

BoundResult theorem1_lower_bound(SchemeKind kind, std::size_t k, double gamma)
{
    check_gamma(gamma);
    if (k != 2 && k != 3)
        throw DomainError("sufficient bounds are only available for k = 2 and k = 3");

    BoundResult r{kind, k, gamma, 0.0, BoundSource::Sufficient, {}, false};
    const double g = gamma;
    switch (kind) {
    case SchemeKind::Douglas:
        r.theta_min = k == 2 ? 0.5 : std::max(0.5, 2.0 * (2.0 * g + 1.0) / 9.0);
        break;
    case SchemeKind::CraigSneyd:
        r.theta_min = 0.5;
        break;
    case SchemeKind::ModifiedCraigSneyd:
        r.theta_min = k == 2 ? std::max(0.25, (g + 1.0) / 6.0)
                             : std::max(0.25, 2.0 * (2.0 * g + 1.0) / 13.0);
        break;
    case SchemeKind::HundsdorferVerwer:
        r.theta_min = k == 2 ? std::max(0.25, (g + 1.0) / (4.0 + 2.0 * std::sqrt(2.0)))
                             : std::max(0.25, (2.0 * g + 1.0) / (4.0 + 2.0 * std::sqrt(3.0)));
        break;
    }
    return r;
}

BoundResult theorem2_lower_bound(SchemeKind kind, std::size_t k, double gamma)
{
    check_gamma(gamma);
    if (k < 2)
        throw DomainError("necessary bounds need k >= 2");

    BoundResult r{kind, k, gamma, 0.0, BoundSource::Necessary, {}, k >= 4};
    const double kd = static_cast<double>(k);
    const double spread = (kd - 1.0) * gamma + 1.0;
    switch (kind) {
    case SchemeKind::Douglas: {
        const double d = constant_d(k);
        r.constants.emplace_back("d_k", d);
        r.theta_min = std::max(0.5, 0.5 * d * spread);
        break;
    }
    case SchemeKind::CraigSneyd: {
        const double c = constant_c(k);
        r.constants.emplace_back("c_k", c);
        r.theta_min = std::max(0.5, 0.5 * c * kd * gamma);
        break;
    }
    case SchemeKind::ModifiedCraigSneyd: {
        const double b = constant_b(k);
        r.constants.emplace_back("b_k", b);
        r.theta_min = std::max(0.25, 0.5 * b * spread);
        break;
    }
    case SchemeKind::HundsdorferVerwer: {
        const double a = solve_ak(k);
        r.constants.emplace_back("a_k", a);
        r.theta_min = std::max(0.25, 0.5 * a * spread);
        break;
    }
    }
    return r;
}

double lemma2_polynomial(double alpha, double delta, double u, double v, double w) noexcept
{
    return alpha + u * u + v * v + w * w + u * v * w - delta * (u + v + w);
}

bool lemma2_condition(double alpha, double delta)
{
    if (!(delta > 0.0 && delta <= 4.0))
        throw DomainError("lemma2_condition requires 0 < delta <= 4");
    const double s = std::sqrt(delta + 1.0);
    const double lhs1 = (delta + 1.0) * (3.0 - 2.0 * s);
    const double rhs1 = 1.0 - alpha;
    const double slack1 = 1e-12 * (1.0 + std::abs(lhs1) + std::abs(rhs1));
    const double lhs2 = delta * delta;
    const double rhs2 = 2.0 * alpha;
    const double slack2 = 1e-12 * (1.0 + lhs2 + std::abs(rhs2));
    return lhs1 >= rhs1 - slack1 && lhs2 <= rhs2 + slack2;
}

double lemma2_bruteforce_min(double alpha, double delta, double upper, double h)
{
    if (upper < 5.0)
        throw DomainError("lemma2_bruteforce_min requires upper >= 5");
    if (!(h > 0.0 && h <= 0.05))
        throw DomainError("lemma2_bruteforce_min requires 0 < h <= 0.05");

    const auto n = static_cast<std::size_t>(std::floor(upper / h + 1e-9)) + 1;
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = static_cast<double>(i) * h;

    // P is symmetric in (u, v, w): scan u <= v <= w only.
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double u = x[i];
        const double pu = alpha + u * u - delta * u;
        for (std::size_t j = i; j < n; ++j) {
            const double v = x[j];
            const double puv = pu + v * v - delta * v;
            const double uv = u * v;
            for (std::size_t l = j; l < n; ++l) {
                const double w = x[l];
                best = std::min(best, puv + w * (w + uv - delta));
            }
        }
    }
    return best;
}

double round_places(double x, int places)
{
    const double scale = std::pow(10.0, places);
    return std::round(x * scale) / scale;
}

} // namespace adistab
