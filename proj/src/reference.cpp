#include "adistab/reference.hpp"

#include "adistab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace adistab {

OperatorSymbolTable operator_symbol_table(const ProblemSpec& problem, const GridSpec& grid)
{
    const std::size_t k = problem.dim();
    if (grid.dim() != k)
        throw StructuralError("grid and problem dimensions differ");
    const auto& d = problem.diffusion;

    std::vector<std::vector<double>> sn(k), omc(k);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t m = grid.points(j);
        for (std::size_t l = 0; l < m; ++l) {
            const double phi = 2.0 * std::numbers::pi * static_cast<double>(l) /
                               static_cast<double>(m);
            sn[j].push_back(std::sin(phi));
            omc[j].push_back(1.0 - std::cos(phi));
        }
    }

    OperatorSymbolTable table{grid, std::vector<double>(grid.size())};
    std::vector<std::size_t> l(k);
    for (std::size_t p = 0; p < grid.size(); ++p) {
        grid.multi_index(p, l);
        double lam = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double hi = grid.spacing(i);
            lam -= 2.0 * d(i, i) * omc[i][l[i]] / (hi * hi);
            for (std::size_t j = i + 1; j < k; ++j) {
                if (d(i, j) == 0.0)
                    continue;
                const double term = -sn[i][l[i]] * sn[j][l[j]] +
                                    problem.beta(i, j) * omc[i][l[i]] * omc[j][l[j]];
                lam += 2.0 * d(i, j) * term / (hi * grid.spacing(j));
            }
        }
        table.lambda[p] = lam;
    }
    return table;
}

namespace {

// In-place DFT along one direction; sign -1 forward, +1 inverse (unscaled).
void dft_direction(const GridSpec& grid, std::size_t dir, ComplexField& data, int sign)
{
    const std::size_t m = grid.points(dir);
    const std::size_t s = grid.stride(dir);
    const std::size_t block = m * s;

    std::vector<std::complex<double>> twiddle(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(i) /
                           static_cast<double>(m);
        twiddle[i] = {std::cos(ang), std::sin(ang)};
    }

    ComplexField out(block);
    for (std::size_t base = 0; base < data.size(); base += block) {
        std::fill(out.begin(), out.end(), std::complex<double>{});
        for (std::size_t l = 0; l < m; ++l) {
            auto* o = out.data() + l * s;
            for (std::size_t n = 0; n < m; ++n) {
                const auto w = twiddle[(l * n) % m];
                const auto* in = data.data() + base + n * s;
                for (std::size_t q = 0; q < s; ++q)
                    o[q] += w * in[q];
            }
        }
        std::copy(out.begin(), out.end(), data.begin() + static_cast<std::ptrdiff_t>(base));
    }
}

} // namespace

ComplexField dft_forward(const GridSpec& grid, std::span<const double> u)
{
    if (u.size() != grid.size())
        throw StructuralError("field size does not match the grid");
    ComplexField data(u.begin(), u.end());
    for (std::size_t dir = 0; dir < grid.dim(); ++dir)
        dft_direction(grid, dir, data, -1);
    return data;
}

ComplexField dft_inverse(const GridSpec& grid, ComplexField spectrum)
{
    if (spectrum.size() != grid.size())
        throw StructuralError("spectrum size does not match the grid");
    for (std::size_t dir = 0; dir < grid.dim(); ++dir)
        dft_direction(grid, dir, spectrum, +1);
    const double scale = 1.0 / static_cast<double>(grid.size());
    for (auto& c : spectrum)
        c *= scale;
    return spectrum;
}

Field exact_semidiscrete(const OperatorSymbolTable& table, std::span<const double> u0, double t)
{
    if (t < 0.0)
        throw DomainError("time must be nonnegative");
    if (t == 0.0)
        return Field(u0.begin(), u0.end());

    ComplexField spec = dft_forward(table.grid, u0);
    for (std::size_t p = 0; p < spec.size(); ++p)
        spec[p] *= std::exp(table.lambda[p] * t);
    ComplexField back = dft_inverse(table.grid, std::move(spec));

    double scale = 1.0;
    for (double v : u0)
        scale = std::max(scale, std::abs(v));
    Field out(back.size());
    for (std::size_t p = 0; p < back.size(); ++p) {
        if (std::abs(back[p].imag()) > 1e-9 * scale)
            throw ConsistencyError("exact_semidiscrete: imaginary residue above 1e-9");
        out[p] = back[p].real();
    }
    return out;
}

Field exact_semidiscrete(const ProblemSpec& problem, const GridSpec& grid,
                         std::span<const double> u0, double t)
{
    return exact_semidiscrete(operator_symbol_table(problem, grid), u0, t);
}

} // namespace adistab
