#pragma once

#include "adistab/grid.hpp"
#include "adistab/model.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace adistab {

/// Matrix-free second-order central finite-difference semidiscretisation
/// A = A_0 + A_1 + ... + A_k on a periodic grid. A_0 holds every mixed
/// derivative term, A_j (j >= 1) the second derivative in direction j.
class SplitOperator
{
public:
    SplitOperator(const ProblemSpec& problem, GridSpec grid);

    const GridSpec& grid() const noexcept { return grid_; }
    std::size_t dim() const noexcept { return grid_.dim(); }
    std::size_t terms() const noexcept { return grid_.dim() + 1; }

    /// d_jj / dx_j^2 for direction j = 1..k.
    double axis_coefficient(std::size_t j) const { return axis_coeff_.at(j - 1); }

    /// out = A_j u.
    void apply_term(std::size_t j, std::span<const double> u, std::span<double> out) const;
    Field apply_term(std::size_t j, std::span<const double> u) const;

    /// out = A u.
    void apply_full(std::span<const double> u, std::span<double> out) const;
    Field apply_full(std::span<const double> u) const;

    bool has_forcing() const noexcept { return !forcing_.empty(); }
    /// out = g_j(t) sampled on the grid; zero when there is no forcing.
    void forcing_term(std::size_t j, double t, std::span<double> out) const;

    /// Periodic neighbour l+1 / l-1 along direction `dir` (0-based).
    std::size_t next(std::size_t dir, std::size_t l) const { return plus_[dir][l]; }
    std::size_t prev(std::size_t dir, std::size_t l) const { return minus_[dir][l]; }

private:
    struct MixedPair
    {
        std::size_t a, b;  // 0-based directions, a < b
        double coeff;      // 2 d_ab / (4 dx_a dx_b): both (a,b) and (b,a) terms
        double beta;
    };

    void check(std::size_t j, std::span<const double> u, std::span<double> out) const;
    void apply_axis(std::size_t dir, std::span<const double> u, std::span<double> out,
                    bool accumulate) const;
    void apply_mixed(const MixedPair& pr, std::span<const double> u, std::span<double> out) const;

    GridSpec grid_;
    std::vector<double> axis_coeff_;
    std::vector<MixedPair> pairs_;
    std::vector<std::vector<std::size_t>> plus_, minus_;
    std::vector<ForcingTerm> forcing_;
};

SplitOperator build_split_operator(const ProblemSpec& problem, const GridSpec& grid);

/// u0 sampled at the grid nodes (l_1 dx_1, ..., l_k dx_k).
Field sample_initial(const ProblemSpec& problem, const GridSpec& grid);

/// Any spatial function sampled at the grid nodes.
Field sample(const SpatialFunction& f, const GridSpec& grid);

} // namespace adistab
