#include "adistab/bounds.hpp"
#include "adistab/errors.hpp"
#include "adistab/harness.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace adistab;

namespace {

double three(double x)
{
    return round_places(x, 3);
}

// Smallest value of P over the closed positive orthant: the face minimum
// alpha - delta^2/2 (u = 0, v = w = delta/2) or the symmetric interior
// critical point u = v = w = sqrt(delta+1) - 1.
double lemma2_exact_min(double alpha, double delta)
{
    const double s = std::sqrt(delta + 1.0);
    return std::min(alpha - delta * delta / 2.0, (delta + 1.0) * (3.0 - 2.0 * s) + alpha - 1.0);
}

} // namespace

TEST_CASE("sufficient bounds at the benchmark gammas")
{
    CHECK(three(theorem1_lower_bound(SchemeKind::ModifiedCraigSneyd, 2, 0.9).theta_min) == 0.317);
    CHECK(three(theorem1_lower_bound(SchemeKind::HundsdorferVerwer, 2, 0.9).theta_min) == 0.278);
    CHECK(three(theorem1_lower_bound(SchemeKind::Douglas, 3, 0.75).theta_min) == 0.556);
    CHECK(three(theorem1_lower_bound(SchemeKind::ModifiedCraigSneyd, 3, 0.75).theta_min) == 0.385);
    CHECK(three(theorem1_lower_bound(SchemeKind::HundsdorferVerwer, 3, 0.75).theta_min) == 0.335);
    CHECK(three(theorem1_lower_bound(SchemeKind::CraigSneyd, 3, 0.75).theta_min) == 0.5);
    CHECK(theorem1_lower_bound(SchemeKind::Douglas, 2, 0.9).theta_min == 0.5);
    CHECK(theorem1_lower_bound(SchemeKind::CraigSneyd, 2, 0.9).theta_min == 0.5);
}

TEST_CASE("gamma = 1 closed forms")
{
    CHECK(theorem1_lower_bound(SchemeKind::Douglas, 3, 1.0).theta_min == 2.0 / 3.0);
    CHECK(theorem2_lower_bound(SchemeKind::Douglas, 3, 1.0).theta_min == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(std::abs(solve_ak(2) - (1.0 - std::sqrt(2.0) / 2.0)) <= 1e-14);
    CHECK(std::abs(solve_ak(3) - (2.0 - std::sqrt(3.0))) <= 1e-14);
    CHECK(theorem1_lower_bound(SchemeKind::HundsdorferVerwer, 2, 1.0).theta_min ==
          doctest::Approx(1.0 - std::sqrt(2.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("constants")
{
    CHECK(constant_d(2) == 0.5);
    CHECK(constant_d(3) == doctest::Approx(4.0 / 9.0));
    CHECK(constant_c(2) == 0.25);
    CHECK(constant_c(3) == doctest::Approx(8.0 / 27.0));
    CHECK(constant_b(2) == doctest::Approx(1.0 / 3.0));
    CHECK(constant_b(3) == doctest::Approx(4.0 / 13.0));
    // a_k solves 2a (1 + (1-a)/(k-1))^(k-1) = 1
    for (std::size_t k = 2; k <= 10; ++k) {
        const double a = solve_ak(k);
        const double km1 = static_cast<double>(k - 1);
        CHECK(a > 0.0);
        CHECK(a < 0.5);
        CHECK(2.0 * a * std::pow(1.0 + (1.0 - a) / km1, km1) == doctest::Approx(1.0).epsilon(1e-13));
        if (k > 2)
            CHECK(a < solve_ak(k - 1));
    }
}

TEST_CASE("sufficient and necessary bounds coincide for k = 2, 3")
{
    for (std::size_t k : {2, 3})
        for (SchemeKind kind : kAllSchemes)
            for (int i = 0; i <= 100; ++i) {
                const double g = i / 100.0;
                CHECK(std::abs(theorem1_lower_bound(kind, k, g).theta_min -
                               theorem2_lower_bound(kind, k, g).theta_min) <= 1e-12);
            }
}

TEST_CASE("bound properties")
{
    for (std::size_t k = 2; k <= 6; ++k) {
        for (SchemeKind kind : kAllSchemes) {
            double prev = 0.0;
            for (int i = 0; i <= 50; ++i) {
                const auto b = theorem2_lower_bound(kind, k, i / 50.0);
                CHECK(b.theta_min >= prev);
                if (k <= 3)
                    CHECK(b.theta_min <= 1.0);
                CHECK(b.necessary_only == (k >= 4));
                prev = b.theta_min;
            }
            const double floor = kind == SchemeKind::Douglas || kind == SchemeKind::CraigSneyd ? 0.5 : 0.25;
            CHECK(theorem2_lower_bound(kind, k, 0.0).theta_min == floor);
        }
    }
    CHECK_THROWS_AS(theorem1_lower_bound(SchemeKind::Douglas, 4, 0.5), DomainError);
    CHECK_THROWS_AS(theorem1_lower_bound(SchemeKind::Douglas, 2, 1.1), DomainError);
    CHECK_THROWS_AS(theorem2_lower_bound(SchemeKind::HundsdorferVerwer, 1, 0.5), DomainError);
    CHECK(theorem2_lower_bound(SchemeKind::HundsdorferVerwer, 3, 0.5).constants.at(0).first == "a_k");
}

TEST_CASE("bounds table formatting")
{
    const std::string t = format_bounds_table(2, 0.9);
    CHECK(t.find("MCS") != std::string::npos);
    CHECK(t.find("0.317") != std::string::npos);
    CHECK(t.find("0.278") != std::string::npos);
    CHECK(t.find("sharp") != std::string::npos);
    const std::string t4 = format_bounds_table(4, 0.5);
    CHECK(t4.find("necessary-only") != std::string::npos);
    const auto rows = bounds_table(3, 0.75);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].sufficient.has_value());
    CHECK(rows[0].sharp);
    CHECK_FALSE(bounds_table(5, 0.2)[1].sufficient.has_value());
}

TEST_CASE("lemma2 condition examples")
{
    CHECK_FALSE(lemma2_condition(0.0, 1.0));
    CHECK(lemma2_condition(1.0, 1.0));
    // first inequality holds with equality
    CHECK(lemma2_condition(0.5, std::sqrt(3.0) / 2.0));
    CHECK_FALSE(lemma2_condition(0.5 - 1e-9, std::sqrt(3.0) / 2.0));
    CHECK_FALSE(lemma2_condition(0.5, 1.0));
    CHECK(lemma2_bruteforce_min(0.0, 1.0) < 0.0);
    CHECK(lemma2_bruteforce_min(0.0, 1.0) <= -0.5);
    CHECK(lemma2_exact_min(0.0, 1.0) == doctest::Approx(5.0 - 4.0 * std::sqrt(2.0)));
    CHECK(lemma2_bruteforce_min(1.0, 1.0) >= 0.0);
    CHECK_THROWS_AS(lemma2_condition(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(lemma2_condition(0.5, 4.5), DomainError);
    CHECK_THROWS_AS(lemma2_bruteforce_min(0.5, 1.0, 4.0), DomainError);
    CHECK_THROWS_AS(lemma2_bruteforce_min(0.5, 1.0, 8.0, 0.1), DomainError);
    CHECK(lemma2_polynomial(0.3, 1.0, 1.0, 2.0, 3.0) == doctest::Approx(0.3 + 14.0 + 6.0 - 6.0));
}

TEST_CASE("lemma2 condition is exactly nonnegativity of the minimum")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ua(0.0, 1.5), ud(1e-3, 4.0);
    for (int i = 0; i < 2000; ++i) {
        const double a = ua(rng), d = ud(rng);
        const double m = lemma2_exact_min(a, d);
        if (std::abs(m) < 1e-9)
            continue;
        CHECK(lemma2_condition(a, d) == (m >= 0.0));
    }
}

TEST_CASE("lemma2 brute force brackets the exact minimum")
{
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> ua(0.0, 1.5), ud(1e-3, 4.0);
    for (int i = 0; i < 10; ++i) {
        const double a = ua(rng), d = ud(rng);
        const double exact = lemma2_exact_min(a, d);
        const double bf = lemma2_bruteforce_min(a, d, 6.0, 0.05);
        CHECK(bf >= exact - 1e-12);
        CHECK(bf <= exact + 10 * 0.05 * (1.0 + d));
    }
}
