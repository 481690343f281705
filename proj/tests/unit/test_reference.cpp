#include "adistab/discretization.hpp"
#include "adistab/errors.hpp"
#include "adistab/reference.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace adistab;

namespace {

// exp(tA) u by scaling and a 40-term Taylor series per substep.
std::vector<double> dense_expm_apply(const oracle::Dense& a, std::vector<double> u, double t)
{
    double norm = 0.0;
    for (std::size_t i = 0; i < a.n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < a.n; ++j)
            row += std::abs(a(i, j));
        norm = std::max(norm, row);
    }
    const auto sub = static_cast<int>(std::ceil(norm * t / 0.5)) + 1;
    const double h = t / sub;
    for (int s = 0; s < sub; ++s) {
        std::vector<double> term = u, sum = u;
        for (int n = 1; n <= 40; ++n) {
            term = a * term;
            for (std::size_t i = 0; i < term.size(); ++i) {
                term[i] *= h / n;
                sum[i] += term[i];
            }
        }
        u = sum;
    }
    return u;
}

oracle::Dense full_matrix(const ProblemSpec& p, const GridSpec& g)
{
    oracle::Dense a(g.size());
    for (std::size_t j = 0; j <= g.dim(); ++j) {
        const auto t = oracle::assemble_term(p, g, j);
        for (std::size_t i = 0; i < a.a.size(); ++i)
            a.a[i] += t.a[i];
    }
    return a;
}

} // namespace

TEST_CASE("separable DFT matches direct summation")
{
    std::mt19937_64 rng(53);
    for (const GridSpec& g : {GridSpec({5, 4}), GridSpec({3, 4, 5}), GridSpec({8, 8})}) {
        const Field u = oracle::random_field(rng, g.size());
        const auto want = oracle::naive_dft(g, u);
        const auto got = dft_forward(g, u);
        double dev = 0.0;
        for (std::size_t i = 0; i < want.size(); ++i)
            dev = std::max(dev, std::abs(want[i] - got[i]));
        CHECK(dev <= 1e-12 * static_cast<double>(g.size()));

        const auto back = dft_inverse(g, got);
        double err = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i)
            err = std::max({err, std::abs(back[i].real() - u[i]), std::abs(back[i].imag())});
        CHECK(err <= 1e-13);
    }
}

TEST_CASE("exact semidiscrete solution matches a dense matrix exponential")
{
    std::mt19937_64 rng(59);
    const SquareMatrix b2{{0, -0.6}, {-0.6, 0}};
    const std::vector<ProblemSpec> problems = {
        problem_template("2d-gamma", 0.9), problem_template("3d-gamma", 0.75),
        ProblemSpec(DiffusionMatrix(template_matrix("2d-gamma", 0.7)), MixedStencilParams(b2),
                    initial_function("exp-sincos-2d"))};
    for (const auto& p : problems) {
        const GridSpec g = p.dim() == 2 ? GridSpec({6, 5}) : GridSpec({3, 4, 4});
        const auto a = full_matrix(p, g);
        for (double t : {0.0, 0.05, 1.0}) {
            const Field u0 = oracle::random_field(rng, g.size());
            const Field want = dense_expm_apply(a, u0, t);
            const Field got = exact_semidiscrete(p, g, u0, t);
            CHECK(oracle::max_abs_diff(got, want) <= 1e-11);
        }
    }
}

TEST_CASE("symbol table, semigroup and mean preservation")
{
    const ProblemSpec p = problem_template("2d-gamma", 0.9);
    const GridSpec g = GridSpec::uniform(2, 16);
    const auto table = operator_symbol_table(p, g);
    CHECK(table.lambda[0] == 0.0);
    for (double l : table.lambda)
        CHECK(l <= 1e-12);

    const Field u0 = sample_initial(p, g);
    const Field a = exact_semidiscrete(table, u0, 0.7);
    const Field b = exact_semidiscrete(table, exact_semidiscrete(table, u0, 0.3), 0.4);
    CHECK(oracle::max_abs_diff(a, b) <= 1e-13);
    double m0 = 0.0, m1 = 0.0;
    for (std::size_t i = 0; i < u0.size(); ++i) {
        m0 += u0[i];
        m1 += a[i];
    }
    CHECK(m1 == doctest::Approx(m0).epsilon(1e-12));
    CHECK(oracle::max_abs_diff(exact_semidiscrete(table, u0, 0.0), u0) <= 1e-15);
    CHECK_THROWS_AS(exact_semidiscrete(table, u0, -1.0), DomainError);
    CHECK_THROWS_AS(exact_semidiscrete(table, Field(5, 0.0), 1.0), StructuralError);
}

TEST_CASE("each grid mode decays at its symbol")
{
    const ProblemSpec p = problem_template("3d-gamma", 0.75);
    const GridSpec g = GridSpec::uniform(3, 4);
    const auto table = operator_symbol_table(p, g);
    const SplitOperator op(p, g);
    for (std::size_t mode = 0; mode < g.size(); ++mode) {
        const auto phi = oracle::mode_angles(g, mode);
        double dev = 0.0;
        const auto c = oracle::mode_multiplier(
            g, phi, [&](const Field& u) { return op.apply_full(u); }, &dev);
        CHECK(dev <= 1e-10);
        CHECK(c.real() == doctest::Approx(table.lambda[mode]).epsilon(1e-12).scale(1.0));
    }
}
