#include "doctest.h"

#include "bgl3/verify.hpp"

using namespace bgl3;

TEST_CASE("newton solves the n=2 bethe systems") {
    GenericConfig g = sample_generic_config(SampleConfig{7, 20, 4000}, SampleCounts{2, 0, 0, 0});
    auto ctx = FieldCtx<Rational>::make(g.q);
    auto chain = make_chain<Rational>(2, g.inhomogeneities, ctx);

    SUBCASE("a=1, b=0: quadratic condition") {
        BigFloat::PrecisionGuard guard(50);
        BetheRoots roots = solve_bethe_roots(chain, 1, 0, 11, 50);
        REQUIRE(roots.u.size() == 1);
        ChainSpec<BigComplex> fchain{2, SpectralSet<BigComplex>({BigComplex(g.inhomogeneities[0]),
                                                                 BigComplex(g.inhomogeneities[1])}),
                                     FieldCtx<BigComplex>::make(BigComplex(g.q)), BigComplex(1)};
        auto res = bethe_residuals(fchain, SpectralSet<BigComplex>(roots.u),
                                   SpectralSet<BigComplex>());
        REQUIRE(res.size() == 1);
        CHECK(res[0].magnitude() < BigFloat::pow10(-40));
    }

    SUBCASE("a=1, b=1: coupled system") {
        BigFloat::PrecisionGuard guard(50);
        BetheRoots roots = solve_bethe_roots(chain, 1, 1, 13, 50);
        REQUIRE(roots.u.size() == 1);
        REQUIRE(roots.v.size() == 1);
        ChainSpec<BigComplex> fchain{2, SpectralSet<BigComplex>({BigComplex(g.inhomogeneities[0]),
                                                                 BigComplex(g.inhomogeneities[1])}),
                                     FieldCtx<BigComplex>::make(BigComplex(g.q)), BigComplex(1)};
        auto res = bethe_residuals(fchain, SpectralSet<BigComplex>(roots.u),
                                   SpectralSet<BigComplex>(roots.v));
        for (const auto& r : res) CHECK(r.magnitude() < BigFloat::pow10(-40));
    }

    SUBCASE("infeasible shape is rejected") {
        CHECK_THROWS_AS(solve_bethe_roots(chain, 0, 1, 5, 50), ConfigError);
        CHECK_THROWS_AS(solve_bethe_roots(chain, 3, 0, 5, 50), ConfigError);
    }

    SUBCASE("precision floor is enforced") {
        CHECK_THROWS_AS(solve_bethe_roots(chain, 1, 0, 5, 40), ConfigError);
    }

    SUBCASE("roots are deterministic in the seed") {
        BigFloat::PrecisionGuard guard(50);
        BetheRoots r1 = solve_bethe_roots(chain, 1, 1, 17, 50);
        BetheRoots r2 = solve_bethe_roots(chain, 1, 1, 17, 50);
        CHECK(r1.u[0] == r2.u[0]);
        CHECK(r1.v[0] == r2.v[0]);
        CHECK(r1.iterations == r2.iterations);
    }
}

TEST_CASE("on-shell suite passes with negative control") {
    auto cases = verify_on_shell(2, 1, 1, 7, 50, std::nullopt);
    REQUIRE(!cases.empty());
    for (const auto& c : cases) {
        INFO(c.id, " ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("run config validation") {
    RunConfig cfg;
    cfg.suite = "verify-rtt";
    CHECK_NOTHROW(cfg.validate());
    cfg.q = "1/1";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.q = "random";
    cfg.suite = "bogus";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.suite = "verify-action";
    cfg.entry = "14";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.entry = "31";
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("reports are deterministic modulo timing") {
    RunConfig cfg;
    cfg.suite = "verify-rtt";
    cfg.rtt_points = 4;
    cfg.seed = 42;
    Report r1 = run(cfg);
    Report r2 = run(cfg);
    CHECK(r1.all_pass());
    CHECK(r1.to_json(false).dump() == r2.to_json(false).dump());

    cfg.seed = 43;
    Report r3 = run(cfg);
    CHECK(r1.to_json(false).dump() != r3.to_json(false).dump());
}

TEST_CASE("exact suites carry no residuals, float suites do") {
    auto exact_cases = izergin_suite(1, 71, std::nullopt);
    REQUIRE(!exact_cases.empty());
    for (const auto& c : exact_cases) {
        CHECK(c.exact);
        CHECK(c.residual.empty());
    }
    auto float_cases = verify_on_shell(2, 1, 1, 71, 50, std::nullopt);
    int with_residual = 0;
    for (const auto& c : float_cases) {
        CHECK(!c.exact);
        if (!c.residual.empty()) ++with_residual;
    }
    CHECK(with_residual >= 6); // newton + five eigenvector points (+ control)
}

TEST_CASE("module errors become failed cases with diagnostics") {
    // a degenerate fixed q makes the sampler throw inside the case body
    auto cases = rtt_suite(1, 3, Rational(1));
    REQUIRE(cases.size() == 1);
    CHECK(!cases[0].pass);
    CHECK(cases[0].detail.find("error:") == 0);

    auto good = rtt_suite(1, 3, Rational(2));
    REQUIRE(good.size() == 1);
    CHECK(good[0].pass);
}
