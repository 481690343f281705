#pragma once

#include "adistab/adi.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace adistab {

enum class BoundSource { Sufficient, Necessary };

struct BoundResult
{
    SchemeKind kind;
    std::size_t k;
    double gamma;
    double theta_min;
    BoundSource source;
    /// Named constants that entered the bound, e.g. {"a_k", 0.2928...}.
    std::vector<std::pair<std::string, double>> constants;
    /// Necessary bound for k >= 4, where sufficiency is not established.
    bool necessary_only = false;
};

/// Sufficient lower bound on theta for unconditional stability, k in {2, 3}.
/// Throws DomainError for other k.
BoundResult theorem1_lower_bound(SchemeKind kind, std::size_t k, double gamma);

/// Necessary lower bound on theta for unconditional stability, any k >= 2.
BoundResult theorem2_lower_bound(SchemeKind kind, std::size_t k, double gamma);

/// d_k = (1 - 1/k)^(k-1)
double constant_d(std::size_t k);
/// c_k = (1 - 1/k)^k
double constant_c(std::size_t k);
/// b_k = 1 / (1 + (1 + 1/(k-1))^(k-1))
double constant_b(std::size_t k);
/// a_k: the root in (0, 1/2) of 2a (1 + (1-a)/(k-1))^(k-1) - 1.
double solve_ak(std::size_t k);

/// P(u, v, w) = alpha + u^2 + v^2 + w^2 + uvw - delta (u + v + w)
double lemma2_polynomial(double alpha, double delta, double u, double v, double w) noexcept;

/// (delta+1)(3 - 2 sqrt(delta+1)) >= 1 - alpha  and  delta^2 <= 2 alpha,
/// each compared with a 1e-12 relative slack. Requires 0 < delta <= 4.
bool lemma2_condition(double alpha, double delta);

/// Minimum of P over the grid {0, h, 2h, ...}^3 intersected with [0, upper]^3.
/// Requires upper >= 5 and 0 < h <= 0.05.
double lemma2_bruteforce_min(double alpha, double delta, double upper = 8.0, double h = 0.02);

/// Round half away from zero to `places` decimals.
double round_places(double x, int places);

} // namespace adistab
