#include "adistab/tridiagonal.hpp"

#include "adistab/errors.hpp"

#include <cmath>

namespace adistab {

PeriodicTridiagonal::PeriodicTridiagonal(std::size_t m, double diag, double off)
    : m_(m), diag_(diag), off_(off)
{
    if (m_ < 3)
        throw StructuralError("cyclic tridiagonal system needs m >= 3");
    if (!(std::abs(diag_) > 2.0 * std::abs(off_)))
        throw DomainError("cyclic tridiagonal system is not strictly diagonally dominant");

    // Modified matrix: b_0 -> b_0 - gamma, b_{m-1} -> b_{m-1} - off^2 / gamma.
    gamma_ = -diag_;
    std::vector<double> b(m_, diag_);
    b[0] = diag_ - gamma_;
    b[m_ - 1] = diag_ - off_ * off_ / gamma_;

    cprime_.resize(m_);
    inv_pivot_.resize(m_);
    inv_pivot_[0] = 1.0 / b[0];
    cprime_[0] = off_ * inv_pivot_[0];
    for (std::size_t i = 1; i < m_; ++i) {
        inv_pivot_[i] = 1.0 / (b[i] - off_ * cprime_[i - 1]);
        cprime_[i] = off_ * inv_pivot_[i];
    }

    z_.assign(m_, 0.0);
    z_[0] = gamma_;
    z_[m_ - 1] = off_;
    // Plain Thomas solve for z (before the correction data exists).
    z_[0] *= inv_pivot_[0];
    for (std::size_t i = 1; i < m_; ++i)
        z_[i] = (z_[i] - off_ * z_[i - 1]) * inv_pivot_[i];
    for (std::size_t i = m_ - 1; i-- > 0;)
        z_[i] -= cprime_[i] * z_[i + 1];

    corner_scale_ = off_ / gamma_;
    inv_denom_ = 1.0 / (1.0 + z_[0] + corner_scale_ * z_[m_ - 1]);
}

void PeriodicTridiagonal::solve(std::span<double> x) const
{
    solve_lines(x, 1);
}

void PeriodicTridiagonal::solve_lines(std::span<double> data, std::size_t s) const
{
    const std::size_t block = m_ * s;
    if (s == 0 || data.size() % block != 0)
        throw StructuralError("line data size is not a multiple of m * stride");

    std::vector<double> factor(s);

    for (std::size_t base = 0; base < data.size(); base += block) {
        double* x = data.data() + base;

        for (std::size_t q = 0; q < s; ++q)
            x[q] *= inv_pivot_[0];
        for (std::size_t l = 1; l < m_; ++l) {
            double* row = x + l * s;
            const double* prev = row - s;
            const double ip = inv_pivot_[l];
            for (std::size_t q = 0; q < s; ++q)
                row[q] = (row[q] - off_ * prev[q]) * ip;
        }
        for (std::size_t l = m_ - 1; l-- > 0;) {
            double* row = x + l * s;
            const double* next = row + s;
            const double c = cprime_[l];
            for (std::size_t q = 0; q < s; ++q)
                row[q] -= c * next[q];
        }

        const double* last = x + (m_ - 1) * s;
        for (std::size_t q = 0; q < s; ++q)
            factor[q] = (x[q] + corner_scale_ * last[q]) * inv_denom_;
        for (std::size_t l = 0; l < m_; ++l) {
            double* row = x + l * s;
            const double zl = z_[l];
            for (std::size_t q = 0; q < s; ++q)
                row[q] -= factor[q] * zl;
        }
    }
}

} // namespace adistab
