#pragma once

#include "adistab/grid.hpp"
#include "adistab/model.hpp"

#include <complex>
#include <span>
#include <vector>

namespace adistab {

using ComplexField = std::vector<std::complex<double>>;

/// Eigenvalue of the full semidiscrete operator A for every grid mode,
/// stored in the same layout as a Field (mode l_1 fastest):
///   lambda(l) = sum_{i!=j} d_ij [-sin phi_i sin phi_j + beta_ij (1-cos phi_i)(1-cos phi_j)] / (dx_i dx_j)
///             - sum_j 2 d_jj (1 - cos phi_j) / dx_j^2,   phi_j = 2 pi l_j / m_j.
struct OperatorSymbolTable
{
    GridSpec grid;
    std::vector<double> lambda;
};

OperatorSymbolTable operator_symbol_table(const ProblemSpec& problem, const GridSpec& grid);

/// Multidimensional DFT, U^(l) = sum_n U_n exp(-i 2 pi sum_j l_j n_j / m_j),
/// computed one direction at a time with direct O(m^2) line transforms.
ComplexField dft_forward(const GridSpec& grid, std::span<const double> u);
/// Inverse of dft_forward (including the 1/N factor).
ComplexField dft_inverse(const GridSpec& grid, ComplexField spectrum);

/// U(t) = exp(tA) U(0) for the periodic semidiscrete system with g = 0.
/// Throws ConsistencyError if the result carries an imaginary part above
/// 1e-9 relative to max|U0|.
Field exact_semidiscrete(const ProblemSpec& problem, const GridSpec& grid,
                         std::span<const double> u0, double t);
Field exact_semidiscrete(const OperatorSymbolTable& table, std::span<const double> u0, double t);

} // namespace adistab
