#include "adistab/discretization.hpp"

#include "adistab/errors.hpp"

#include <algorithm>
#include <string>

namespace adistab {

SplitOperator::SplitOperator(const ProblemSpec& problem, GridSpec grid)
    : grid_(std::move(grid)), forcing_(problem.forcing)
{
    const std::size_t k = problem.dim();
    if (grid_.dim() != k)
        throw StructuralError("grid has dimension " + std::to_string(grid_.dim()) +
                              " but the problem has k = " + std::to_string(k));

    const auto& d = problem.diffusion;
    for (std::size_t j = 0; j < k; ++j) {
        const double h = grid_.spacing(j);
        axis_coeff_.push_back(d(j, j) / (h * h));
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            if (d(a, b) == 0.0)
                continue;
            const double c = 2.0 * d(a, b) / (4.0 * grid_.spacing(a) * grid_.spacing(b));
            pairs_.push_back({a, b, c, problem.beta(a, b)});
        }
    }

    plus_.resize(k);
    minus_.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t m = grid_.points(j);
        plus_[j].resize(m);
        minus_[j].resize(m);
        for (std::size_t l = 0; l < m; ++l) {
            plus_[j][l] = (l + 1) % m;
            minus_[j][l] = (l + m - 1) % m;
        }
    }
}

void SplitOperator::check(std::size_t j, std::span<const double> u, std::span<double> out) const
{
    if (j > dim())
        throw DomainError("split term index " + std::to_string(j) + " out of range 0.." +
                          std::to_string(dim()));
    if (u.size() != grid_.size() || out.size() != grid_.size())
        throw StructuralError("field size does not match the grid");
}

void SplitOperator::apply_axis(std::size_t dir, std::span<const double> u, std::span<double> out,
                               bool accumulate) const
{
    const double kappa = axis_coeff_[dir];
    const std::size_t s = grid_.stride(dir);
    const std::size_t m = grid_.points(dir);
    const std::size_t block = s * m;
    const auto& lp = plus_[dir];
    const auto& lm = minus_[dir];

    for (std::size_t base = 0; base < grid_.size(); base += block) {
        for (std::size_t l = 0; l < m; ++l) {
            const double* c = u.data() + base + l * s;
            const double* p = u.data() + base + lp[l] * s;
            const double* q = u.data() + base + lm[l] * s;
            double* o = out.data() + base + l * s;
            if (accumulate) {
                for (std::size_t i = 0; i < s; ++i)
                    o[i] += kappa * (p[i] - 2.0 * c[i] + q[i]);
            } else {
                for (std::size_t i = 0; i < s; ++i)
                    o[i] = kappa * (p[i] - 2.0 * c[i] + q[i]);
            }
        }
    }
}

void SplitOperator::apply_mixed(const MixedPair& pr, std::span<const double> u,
                                std::span<double> out) const
{
    // Flat index = i + la*sa + mid*sa*ma + lb*sb + outer*sb*mb.
    const std::size_t sa = grid_.stride(pr.a), ma = grid_.points(pr.a);
    const std::size_t sb = grid_.stride(pr.b), mb = grid_.points(pr.b);
    const std::size_t n_mid = sb / (sa * ma);
    const std::size_t n_outer = grid_.size() / (sb * mb);
    const double c = pr.coeff;
    const double beta = pr.beta;
    const double wpp = c * (1.0 + beta);  // (+,+) and (-,-)
    const double wpm = c * (1.0 - beta);  // (+,-) and (-,+)
    const double wc = 4.0 * c * beta;
    const double wax = 2.0 * c * beta;
    const double* src = u.data();

    for (std::size_t outer = 0; outer < n_outer; ++outer) {
        for (std::size_t lb = 0; lb < mb; ++lb) {
            const std::size_t ob = outer * sb * mb;
            const std::size_t b0 = ob + lb * sb;
            const std::size_t bp = ob + plus_[pr.b][lb] * sb;
            const std::size_t bm = ob + minus_[pr.b][lb] * sb;
            for (std::size_t mid = 0; mid < n_mid; ++mid) {
                const std::size_t om = mid * sa * ma;
                for (std::size_t la = 0; la < ma; ++la) {
                    const std::size_t a0 = om + la * sa;
                    const std::size_t ap = om + plus_[pr.a][la] * sa;
                    const std::size_t am = om + minus_[pr.a][la] * sa;
                    double* o = out.data() + b0 + a0;
                    for (std::size_t i = 0; i < sa; ++i) {
                        const double upp = src[bp + ap + i], umm = src[bm + am + i];
                        const double upm = src[bm + ap + i], ump = src[bp + am + i];
                        double v = wpp * (upp + umm) - wpm * (upm + ump);
                        if (beta != 0.0) {
                            const double axes = src[b0 + ap + i] + src[b0 + am + i] +
                                                src[bp + a0 + i] + src[bm + a0 + i];
                            v += wc * src[b0 + a0 + i] - wax * axes;
                        }
                        o[i] += v;
                    }
                }
            }
        }
    }
}

void SplitOperator::apply_term(std::size_t j, std::span<const double> u,
                               std::span<double> out) const
{
    check(j, u, out);
    if (j == 0) {
        std::fill(out.begin(), out.end(), 0.0);
        for (const auto& pr : pairs_)
            apply_mixed(pr, u, out);
    } else {
        apply_axis(j - 1, u, out, false);
    }
}

Field SplitOperator::apply_term(std::size_t j, std::span<const double> u) const
{
    Field out(grid_.size());
    apply_term(j, u, out);
    return out;
}

void SplitOperator::apply_full(std::span<const double> u, std::span<double> out) const
{
    check(0, u, out);
    std::fill(out.begin(), out.end(), 0.0);
    for (const auto& pr : pairs_)
        apply_mixed(pr, u, out);
    for (std::size_t d = 0; d < dim(); ++d)
        apply_axis(d, u, out, true);
}

Field SplitOperator::apply_full(std::span<const double> u) const
{
    Field out(grid_.size());
    apply_full(u, out);
    return out;
}

void SplitOperator::forcing_term(std::size_t j, double t, std::span<double> out) const
{
    if (j > dim())
        throw DomainError("split term index out of range");
    if (forcing_.empty()) {
        std::fill(out.begin(), out.end(), 0.0);
        return;
    }
    std::vector<double> x(dim());
    for (std::size_t p = 0; p < grid_.size(); ++p) {
        grid_.coordinates(p, x);
        out[p] = forcing_[j](t, x);
    }
}

SplitOperator build_split_operator(const ProblemSpec& problem, const GridSpec& grid)
{
    return SplitOperator(problem, grid);
}

Field sample(const SpatialFunction& f, const GridSpec& grid)
{
    Field u(grid.size());
    std::vector<double> x(grid.dim());
    for (std::size_t p = 0; p < grid.size(); ++p) {
        grid.coordinates(p, x);
        u[p] = f(x);
    }
    return u;
}

Field sample_initial(const ProblemSpec& problem, const GridSpec& grid)
{
    if (grid.dim() != problem.dim())
        throw StructuralError("grid and problem dimensions differ");
    return sample(problem.initial.fn, grid);
}

} // namespace adistab
