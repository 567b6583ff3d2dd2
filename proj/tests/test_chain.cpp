#include "doctest.h"

#include "bgl3/chain.hpp"
#include "bgl3/sample.hpp"

using namespace bgl3;

TEST_CASE("n=1 monodromy is the site r-matrix") {
    SampleConfig cfg;
    cfg.seed = 3;
    GenericConfig g = sample_generic_config(cfg, SampleCounts{1, 0, 0, 1});
    auto ctx = FieldCtx<Rational>::make(g.q);
    auto chain = make_chain<Rational>(1, g.inhomogeneities, ctx);
    Rational u = g.w[0];
    Monodromy<Rational> T = build_monodromy(chain, u);
    Vec<Rational> vac = vacuum(chain);
    // T_11(u)|1> = f(u,z_1)|1>
    CHECK(T.T(1, 1).apply(vac) == vec_scale(vac, f_fun(ctx, u, g.inhomogeneities[0])));
    // T_21(u)|1> = 0
    CHECK(vec_is_zero(T.T(2, 1).apply(vac)));
    // T_22(u)|0> = |0>
    CHECK(T.T(2, 2).apply(vac) == vac);
}

TEST_CASE("vacuum structure for sites 1..3, untwisted and twisted") {
    for (int sites = 1; sites <= 3; ++sites) {
        SampleConfig cfg;
        cfg.seed = 100 + sites;
        GenericConfig g = sample_generic_config(cfg, SampleCounts{sites, 0, 0, 1});
        auto ctx = FieldCtx<Rational>::make(g.q);
        for (Rational twist : {Rational(1), Rational(5, 7)}) {
            auto chain = make_chain<Rational>(sites, g.inhomogeneities, ctx, twist);
            Rational u = g.w[0];
            CHECK(check_vacuum(chain, u).ok());
            auto lam = vacuum_eigenvalues(chain, u);
            Rational expected1(1);
            for (const auto& z : g.inhomogeneities) expected1 *= f_fun(ctx, u, z);
            CHECK(lam.lambda1 == expected1);
            CHECK(lam.lambda2.is_one());
            CHECK(lam.lambda3 == twist.pow(sites));
            CHECK(lam.r1 == expected1);
            CHECK(lam.r3 == twist.pow(sites));
        }
    }
}

TEST_CASE("dual vacuum pairing and annihilation") {
    SampleConfig cfg;
    cfg.seed = 17;
    GenericConfig g = sample_generic_config(cfg, SampleCounts{2, 0, 0, 1});
    auto ctx = FieldCtx<Rational>::make(g.q);
    auto chain = make_chain<Rational>(2, g.inhomogeneities, ctx);
    Monodromy<Rational> T = build_monodromy(chain, g.w[0]);
    Vec<Rational> vac = vacuum(chain);
    Vec<Rational> dvac = dual_vacuum(chain);
    Rational pairing(0);
    for (size_t i = 0; i < vac.size(); ++i) pairing += dvac[i] * vac[i];
    CHECK(pairing.is_one());
    CHECK(vec_is_zero(T.T(1, 2).apply_left(dvac)));
    CHECK(vec_is_zero(T.T(1, 3).apply_left(dvac)));
    CHECK(vec_is_zero(T.T(3, 1).apply(vac)));
}

TEST_CASE("transfer matrices commute") {
    SampleConfig cfg;
    cfg.seed = 23;
    GenericConfig g = sample_generic_config(cfg, SampleCounts{2, 0, 0, 2});
    auto ctx = FieldCtx<Rational>::make(g.q);
    for (Rational twist : {Rational(1), Rational(2, 3)}) {
        auto chain = make_chain<Rational>(2, g.inhomogeneities, ctx, twist);
        Mat<Rational> tu = build_monodromy(chain, g.w[0]).transfer();
        Mat<Rational> tv = build_monodromy(chain, g.w[1]).transfer();
        CHECK(tu * tv == tv * tu);
    }
}

TEST_CASE("chain validation") {
    auto ctx = FieldCtx<Rational>::make(Rational(2));
    CHECK_THROWS_AS(make_chain<Rational>(2, {Rational(1), Rational(1)}, ctx), ConfigError);
    CHECK_THROWS_AS(make_chain<Rational>(2, {Rational(1)}, ctx), SizeMismatchError);
    CHECK_THROWS_AS(FieldCtx<Rational>::make(Rational(0)), DegenerateQError);
    CHECK_THROWS_AS(FieldCtx<Rational>::make(Rational(-1)), DegenerateQError);
}
