#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace adistab {

/// Factorised constant-coefficient cyclic tridiagonal system of size m >= 3:
///
///   diag * x_i + off * (x_{i-1} + x_{i+1}) = r_i,  indices mod m.
///
/// Solved by the Thomas algorithm on a modified tridiagonal matrix plus a
/// rank-one periodic correction (Sherman-Morrison). No pivoting, so the
/// system must be diagonally dominant: |diag| > 2 |off|.
class PeriodicTridiagonal
{
public:
    PeriodicTridiagonal(std::size_t m, double diag, double off);

    std::size_t size() const noexcept { return m_; }

    /// Solve in place for one contiguous line.
    void solve(std::span<double> x) const;

    /// Solve in place for every line of a strided layout: `data` is a
    /// sequence of blocks of m*stride values; within a block, entry l of
    /// line q sits at l*stride + q.
    void solve_lines(std::span<double> data, std::size_t stride) const;

private:
    std::size_t m_;
    double diag_, off_;
    double gamma_;
    std::vector<double> cprime_;     // Thomas super-diagonal after elimination
    std::vector<double> inv_pivot_;  // 1 / pivot per row
    std::vector<double> z_;          // solution for the rank-one update vector
    double corner_scale_;            // off / gamma
    double inv_denom_;               // 1 / (1 + z_0 + off z_{m-1} / gamma)
};

} // namespace adistab
