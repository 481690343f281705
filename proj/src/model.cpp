#include "adistab/model.hpp"

#include "adistab/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adistab {

SquareMatrix::SquareMatrix(std::size_t n, double fill) : n_(n), a_(n * n, fill) {}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), a_(std::move(row_major))
{
    if (a_.size() != n_ * n_)
        throw StructuralError("matrix data has " + std::to_string(a_.size()) +
                              " entries, expected " + std::to_string(n_ * n_));
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size())
{
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_)
            throw StructuralError("matrix is not square");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

bool SquareMatrix::is_symmetric() const noexcept
{
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

double SquareMatrix::max_abs() const noexcept
{
    double r = 0.0;
    for (double v : a_)
        r = std::max(r, std::abs(v));
    return r;
}

SquareMatrix operator*(double s, SquareMatrix m)
{
    for (double& v : m.a_)
        v *= s;
    return m;
}

double min_eigenvalue(const SquareMatrix& m)
{
    if (m.size() == 0)
        throw StructuralError("empty matrix");
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        a(m.data().data(), n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw ConsistencyError("symmetric eigen-solve did not converge");
    return es.eigenvalues().minCoeff();
}

bool validate_psd(const SquareMatrix& m, double tol)
{
    if (!m.is_symmetric())
        throw StructuralError("matrix is not symmetric");
    const double scale = m.max_abs() > 0.0 ? m.max_abs() : 1.0;
    return min_eigenvalue(m) >= -tol * scale;
}

DiffusionMatrix::DiffusionMatrix(SquareMatrix d, double tol) : d_(std::move(d))
{
    if (d_.size() < 2)
        throw StructuralError("diffusion matrix needs dimension k >= 2");
    if (!validate_psd(d_, tol))
        throw DomainError("diffusion matrix is not positive semidefinite");
}

double gamma_min(const DiffusionMatrix& d)
{
    double g = 0.0;
    const std::size_t k = d.dim();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const double prod = d(i, i) * d(j, j);
            if (prod <= 0.0) {
                if (d(i, j) != 0.0)
                    throw DomainError("d_ij != 0 while d_ii * d_jj = 0 (matrix is not PSD)");
                continue;
            }
            g = std::max(g, std::abs(d(i, j)) / std::sqrt(prod));
        }
    }
    return g;
}

MixedStencilParams::MixedStencilParams(std::size_t k) : beta_(k, 0.0) {}

MixedStencilParams::MixedStencilParams(const SquareMatrix& beta, double tol) : beta_(beta)
{
    const std::size_t k = beta_.size();
    for (std::size_t i = 0; i < k; ++i) {
        beta_(i, i) = -1.0;
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j)
                continue;
            if (beta(i, j) != beta(j, i))
                throw StructuralError("beta is not symmetric");
            if (std::abs(beta(i, j)) > 1.0)
                throw DomainError("|beta_ij| must not exceed 1");
        }
    }
    if (!validate_psd(b_matrix(), tol))
        throw DomainError("B = (-beta_ij) is not positive semidefinite");
}

SquareMatrix MixedStencilParams::b_matrix() const
{
    SquareMatrix b(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            b(i, j) = -(*this)(i, j);
    return b;
}

InitialFunction initial_function(const std::string& name)
{
    using std::numbers::pi;
    if (name == "exp-sincos-2d") {
        return {name, [](std::span<const double> x) {
                    const double s = std::sin(pi * x[0]);
                    const double c = std::cos(pi * x[1]);
                    return std::exp(-4.0 * (s * s + c * c));
                }};
    }
    if (name == "exp-cos-3d") {
        return {name, [](std::span<const double> x) {
                    double sum = 0.0;
                    for (double xi : x) {
                        const double c = std::cos(pi * xi);
                        sum += c * c;
                    }
                    return std::exp(-sum);
                }};
    }
    if (name == "constant")
        return {name, [](std::span<const double>) { return 1.0; }};
    throw DomainError("unknown initial function '" + name + "'");
}

std::vector<std::string> initial_function_names()
{
    return {"exp-sincos-2d", "exp-cos-3d", "constant"};
}

ProblemSpec::ProblemSpec(DiffusionMatrix d, MixedStencilParams b, InitialFunction init,
                         std::vector<ForcingTerm> g)
    : diffusion(std::move(d)), beta(std::move(b)), initial(std::move(init)), forcing(std::move(g))
{
    if (beta.dim() != diffusion.dim())
        throw StructuralError("beta and D have different dimensions");
    if (!forcing.empty() && forcing.size() != diffusion.dim() + 1)
        throw StructuralError("forcing needs k+1 terms g_0..g_k");
}

SquareMatrix template_matrix(const std::string& name, double gamma)
{
    if (gamma < 0.0 || gamma > 1.0)
        throw DomainError("gamma must lie in [0, 1]");
    const double g = gamma;
    if (name == "2d-gamma")
        return 0.025 * SquareMatrix{{1.0, 2.0 * g}, {2.0 * g, 4.0}};
    if (name == "3d-gamma")
        return 0.025 * SquareMatrix{{1.0, 2.0 * g, g}, {2.0 * g, 4.0, 2.0 * g}, {g, 2.0 * g, 1.0}};
    throw DomainError("unknown problem template '" + name + "'");
}

ProblemSpec problem_template(const std::string& name, double gamma)
{
    DiffusionMatrix d(template_matrix(name, gamma));
    const std::size_t k = d.dim();
    return ProblemSpec(std::move(d), MixedStencilParams(k),
                       initial_function(k == 2 ? "exp-sincos-2d" : "exp-cos-3d"));
}

} // namespace adistab
