#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace adistab {

/// Dense row-major square matrix of doubles.
class SquareMatrix
{
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, double fill = 0.0);
    SquareMatrix(std::size_t n, std::vector<double> row_major);
    SquareMatrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    std::span<const double> data() const noexcept { return a_; }

    bool is_symmetric() const noexcept;
    double max_abs() const noexcept;

    friend SquareMatrix operator*(double s, SquareMatrix m);

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// Default relative tolerance for positive semidefiniteness checks.
inline constexpr double kPsdTolerance = 1e-12;

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const SquareMatrix& m);

/// True iff the smallest eigenvalue of `m` is at least -tol * max|m_ij|
/// (or -tol when m is the zero matrix). Throws StructuralError when `m`
/// is not symmetric.
bool validate_psd(const SquareMatrix& m, double tol = kPsdTolerance);

/// Symmetric positive semidefinite diffusion coefficients d_ij, k >= 2.
class DiffusionMatrix
{
public:
    explicit DiffusionMatrix(SquareMatrix d, double tol = kPsdTolerance);

    std::size_t dim() const noexcept { return d_.size(); }
    double operator()(std::size_t i, std::size_t j) const { return d_(i, j); }
    const SquareMatrix& matrix() const noexcept { return d_; }

private:
    SquareMatrix d_;
};

/// Smallest gamma with |d_ij| <= gamma * sqrt(d_ii d_jj) for all i != j.
double gamma_min(const DiffusionMatrix& d);

/// Weights beta_ij (i != j) of the centred 9-point mixed-derivative
/// stencil. The diagonal of the input is ignored; the derived matrix
/// B = (-beta_ij) with unit diagonal must be positive semidefinite.
class MixedStencilParams
{
public:
    explicit MixedStencilParams(std::size_t k);  // all beta_ij = 0
    explicit MixedStencilParams(const SquareMatrix& beta, double tol = kPsdTolerance);

    std::size_t dim() const noexcept { return beta_.size(); }
    double operator()(std::size_t i, std::size_t j) const { return i == j ? -1.0 : beta_(i, j); }

    /// B = (-beta_ij) with beta_ii = -1.
    SquareMatrix b_matrix() const;

private:
    SquareMatrix beta_;
};

/// Scalar function of the k spatial coordinates.
using SpatialFunction = std::function<double(std::span<const double>)>;

/// Forcing term g_j(t, x); sampled on the grid to give the semidiscrete g_j(t).
using ForcingTerm = std::function<double(double, std::span<const double>)>;

struct InitialFunction
{
    std::string name;
    SpatialFunction fn;
};

/// Named initial functions: "exp-sincos-2d", "exp-cos-3d", "constant".
InitialFunction initial_function(const std::string& name);
std::vector<std::string> initial_function_names();

/// The continuous problem on the unit hypercube with periodic boundaries.
struct ProblemSpec
{
    ProblemSpec(DiffusionMatrix d, MixedStencilParams b, InitialFunction init,
                std::vector<ForcingTerm> g = {});

    std::size_t dim() const noexcept { return diffusion.dim(); }
    bool has_forcing() const noexcept { return !forcing.empty(); }

    DiffusionMatrix diffusion;
    MixedStencilParams beta;
    InitialFunction initial;
    /// Either empty (g == 0) or exactly k+1 terms g_0..g_k.
    std::vector<ForcingTerm> forcing;
};

/// The two benchmark diffusion matrices with gamma substituted.
///   "2d-gamma": 0.025 * [[1, 2g], [2g, 4]]
///   "3d-gamma": 0.025 * [[1, 2g, g], [2g, 4, 2g], [g, 2g, 1]]
SquareMatrix template_matrix(const std::string& name, double gamma);

/// Benchmark problem: template matrix, beta = 0 and the matching initial function.
ProblemSpec problem_template(const std::string& name, double gamma);

} // namespace adistab
