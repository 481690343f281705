#include "adistab/discretization.hpp"
#include "adistab/errors.hpp"
#include "adistab/harness.hpp"
#include "adistab/reference.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

using namespace adistab;

TEST_CASE("global error")
{
    const Field ref(16, 1.0), num(16, 1.5);
    CHECK(global_error(ref, num, 2, 4) == doctest::Approx(0.5));
    Field bad = num;
    bad[7] = std::numeric_limits<double>::infinity();
    CHECK(global_error(ref, bad, 2, 4) == std::numeric_limits<double>::infinity());
    bad[7] = std::nan("");
    CHECK(global_error(ref, bad, 2, 4) == std::numeric_limits<double>::infinity());
    CHECK(global_error(ref, ref, 2, 4) == 0.0);
    CHECK_THROWS_AS(global_error(ref, Field(3, 0.0), 2, 4), StructuralError);
}

TEST_CASE("default step counts")
{
    const auto n = default_step_counts();
    CHECK(n.front() == 1);
    CHECK(n.back() == 1000);
    CHECK(n.size() == 23);  // 1 and 2 repeat
    for (std::size_t i = 1; i < n.size(); ++i)
        CHECK(n[i] > n[i - 1]);
}

TEST_CASE("slope fit and monotonicity")
{
    std::vector<ErrorRecord> recs;
    for (double dt : {1.0, 0.1, 0.01, 0.001})
        recs.push_back({SchemeKind::CraigSneyd, 0.5, 40, dt, 3.0 * dt * dt});
    const auto s = fit_slope(recs, 1e-3, 1e-1);
    CHECK(s.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.points == 3);
    CHECK(s.scheme == SchemeKind::CraigSneyd);
    CHECK(errors_monotone(recs));

    recs[0].error = std::numeric_limits<double>::infinity();
    CHECK(errors_monotone(recs));
    CHECK(fit_slope(recs, 1e-3, 1.0).points == 3);
    recs[2].error = 1.0;
    CHECK_FALSE(errors_monotone(recs));
    CHECK(std::isnan(fit_slope(recs, 0.5, 0.6).slope));
}

TEST_CASE("theta policies")
{
    CHECK(ThetaPolicy::parse("theorem1").resolve(SchemeKind::Douglas, 3, 0.75) ==
          doctest::Approx(5.0 / 9.0));
    CHECK(ThetaPolicy::parse("fraction:0.9").resolve(SchemeKind::ModifiedCraigSneyd, 2, 0.9) ==
          doctest::Approx(0.9 * 1.9 / 6.0));
    CHECK(ThetaPolicy::parse("value:0.7").resolve(SchemeKind::HundsdorferVerwer, 2, 0.1) == 0.7);
    CHECK(ThetaPolicy::parse("paper-2d").resolve(SchemeKind::ModifiedCraigSneyd, 2, 0.9) == 0.29);
    CHECK(ThetaPolicy::parse("paper-3d").resolve(SchemeKind::HundsdorferVerwer, 3, 0.75) == 0.3);
    CHECK(ThetaPolicy::parse("theorem2").to_string() == "theorem2");
    CHECK(ThetaPolicy::parse("fraction:0.5").to_string() == "fraction:0.5");
    CHECK_THROWS_AS(ThetaPolicy::parse("fraction:x"), StructuralError);
    CHECK_THROWS_AS(ThetaPolicy::parse("value:-1"), DomainError);
    CHECK_THROWS_AS(ThetaPolicy::parse("best"), StructuralError);
}

TEST_CASE("experiment config parsing")
{
    const auto cfg = ExperimentConfig::from_config(KeyValueConfig::parse(R"(
template = 3d-gamma
gamma = 0.75
m = 8, 10
schemes = Do HV
theta-policy = paper-3d
t-final = 2
steps = 1 2 4
out = errors.csv
)"));
    CHECK(cfg.template_name == "3d-gamma");
    CHECK(cfg.m == std::vector<std::size_t>{8, 10});
    CHECK(cfg.schemes.size() == 2);
    CHECK(cfg.schemes[1] == SchemeKind::HundsdorferVerwer);
    CHECK(cfg.theta_policy.kind == ThetaPolicy::Kind::Paper3d);
    CHECK(cfg.t_final == 2.0);
    CHECK(cfg.step_counts() == std::vector<std::size_t>{1, 2, 4});
    CHECK(cfg.out == "errors.csv");
    CHECK_FALSE(cfg.allow_large);
    CHECK_THROWS_AS(ExperimentConfig::from_config(KeyValueConfig::parse("m = 0\n")), StructuralError);
}

TEST_CASE("small convergence run")
{
    ExperimentConfig cfg;
    cfg.m = {8, 10};
    cfg.schemes = {SchemeKind::Douglas, SchemeKind::HundsdorferVerwer};
    cfg.t_final = 1.0;
    cfg.n_list = {16, 4, 8, 4};
    cfg.fit_min = 0.01;
    cfg.fit_max = 1.0;
    const auto res = run_convergence(cfg);
    CHECK(res.reference_evaluations == 2);
    REQUIRE(res.records.size() == 2 * 2 * 3);
    CHECK(res.slopes.size() == 4);
    CHECK(res.records[0].scheme == SchemeKind::Douglas);
    CHECK(res.records[0].m == 8);
    CHECK(res.records[0].dt == 0.25);
    CHECK(res.records[2].dt == 0.0625);
    CHECK(res.records[3].m == 10);
    CHECK(res.records[6].scheme == SchemeKind::HundsdorferVerwer);

    // One record recomputed by hand.
    const ProblemSpec p = cfg.problem();
    const GridSpec g = GridSpec::uniform(2, 10);
    const SplitOperator op(p, g);
    const Field u0 = sample_initial(p, g);
    const double th = theorem1_lower_bound(SchemeKind::HundsdorferVerwer, 2, 0.9).theta_min;
    const Field u = integrate(SchemeConfig(SchemeKind::HundsdorferVerwer, th), op, u0, 1.0, 8);
    const double e = global_error(exact_semidiscrete(p, g, u0, 1.0), u, 2, 10);
    const auto rec = select(res.records, SchemeKind::HundsdorferVerwer, 10);
    REQUIRE(rec.size() == 3);
    CHECK(rec[1].error == doctest::Approx(e).epsilon(1e-14));
    CHECK(rec[1].theta == th);

    cfg.t_final = 0.3;
    CHECK_THROWS_AS(run_convergence(cfg), DomainError);
    cfg.t_final = 1.0;
    cfg.template_name = "3d-gamma";
    cfg.m = {48};
    CHECK_THROWS_AS(run_convergence(cfg), DomainError);
}

TEST_CASE("problem files take gamma from the matrix")
{
    const char* path = "adistab_test_problem.cfg";
    {
        std::ofstream f(path);
        f << "k = 2\ngamma = 0.5\nD = 0.025, 0.05*gamma; 0.05*gamma, 0.1\ninitial = exp-sincos-2d\n";
    }
    ExperimentConfig cfg;
    cfg.problem_file = path;
    cfg.gamma = 0.9;  // ignored
    cfg.m = {6};
    cfg.schemes = {SchemeKind::ModifiedCraigSneyd};
    cfg.t_final = 1.0;
    cfg.n_list = {2};
    const auto res = run_convergence(cfg);
    CHECK(res.records.at(0).theta == doctest::Approx(0.25));
    std::remove(path);
}

TEST_CASE("error CSV")
{
    std::ostringstream out;
    write_error_csv(out, {{SchemeKind::ModifiedCraigSneyd, 0.1, 40, 0.001, 0.25},
                          {SchemeKind::Douglas, 0.5, 40, 1.0, std::numeric_limits<double>::infinity()}});
    CHECK(out.str() ==
          "scheme,theta,m,dt,error\n"
          "MCS,0.10000000000000001,40,0.001,0.25\n"
          "Do,0.5,40,1,inf\n");
    CHECK(format_number(std::nan("")) == "nan");
}
