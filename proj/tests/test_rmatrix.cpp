#include "doctest.h"

#include "bgl3/chain.hpp"
#include "bgl3/rmatrix.hpp"
#include "bgl3/sample.hpp"

using namespace bgl3;

TEST_CASE("r-matrix entries and sparsity") {
    auto ctx = FieldCtx<Rational>::make(Rational(2));
    Rational u(3), v(1);
    RMatrix<Rational> R = build_r_matrix(ctx, u, v);
    CHECK(R.at(pair_index(1, 1), pair_index(1, 1)) == f_fun(ctx, u, v));
    CHECK(R.at(pair_index(1, 2), pair_index(2, 1)) == u * g_fun(ctx, u, v));
    CHECK(R.at(pair_index(2, 1), pair_index(1, 2)) == v * g_fun(ctx, u, v));
    CHECK(R.at(pair_index(1, 2), pair_index(1, 2)).is_one());
    CHECK(R.nonzero_count() == 15);
    CHECK_THROWS_AS(build_r_matrix(ctx, u, u), PoleError);
}

TEST_CASE("r-matrix depends on the ratio of its arguments") {
    auto ctx = FieldCtx<Rational>::make(Rational(5, 3));
    Rational u(7, 2), v(4), alpha(9, 5);
    RMatrix<Rational> R1 = build_r_matrix(ctx, u, v);
    RMatrix<Rational> R2 = build_r_matrix(ctx, alpha * u, alpha * v);
    for (int i = 0; i < 81; ++i) CHECK(R1.e[i] == R2.e[i]);
}

TEST_CASE("rtt holds for small chains") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        SampleConfig cfg;
        cfg.seed = seed;
        for (int sites = 1; sites <= 2; ++sites) {
            GenericConfig g = sample_generic_config(cfg, SampleCounts{sites, 0, 0, 2});
            auto ctx = FieldCtx<Rational>::make(g.q);
            auto chain = make_chain<Rational>(sites, g.inhomogeneities, ctx);
            Rational u = g.w[0], v = g.w[1];
            Monodromy<Rational> Tu = build_monodromy(chain, u);
            Monodromy<Rational> Tv = build_monodromy(chain, v);
            RMatrix<Rational> R = build_r_matrix(ctx, u, v);
            RttReport rep = check_rtt(Tu, Tv, R);
            CHECK(rep.ok);
            CHECK(rep.checked_blocks == 81);
        }
    }
}

TEST_CASE("rtt on the n=1 chain is the yang-baxter instance") {
    SampleConfig cfg;
    cfg.seed = 99;
    GenericConfig g = sample_generic_config(cfg, SampleCounts{1, 0, 0, 2});
    auto ctx = FieldCtx<Rational>::make(g.q);
    auto chain = make_chain<Rational>(1, g.inhomogeneities, ctx);
    Monodromy<Rational> Tu = build_monodromy(chain, g.w[0]);
    Monodromy<Rational> Tv = build_monodromy(chain, g.w[1]);
    RMatrix<Rational> R = build_r_matrix(ctx, g.w[0], g.w[1]);
    CHECK(check_rtt(Tu, Tv, R).ok);
}

TEST_CASE("rtt rejects mismatched chains") {
    SampleConfig cfg;
    cfg.seed = 5;
    GenericConfig g = sample_generic_config(cfg, SampleCounts{3, 0, 0, 2});
    auto ctx = FieldCtx<Rational>::make(g.q);
    auto chain1 = make_chain<Rational>(1, {g.inhomogeneities[0]}, ctx);
    auto chain2 =
        make_chain<Rational>(2, {g.inhomogeneities[1], g.inhomogeneities[2]}, ctx);
    Monodromy<Rational> Tu = build_monodromy(chain1, g.w[0]);
    Monodromy<Rational> Tv = build_monodromy(chain2, g.w[1]);
    RMatrix<Rational> R = build_r_matrix(ctx, g.w[0], g.w[1]);
    CHECK_THROWS_AS(check_rtt(Tu, Tv, R), DimensionError);
}

TEST_CASE("twisted chains still satisfy rtt") {
    SampleConfig cfg;
    cfg.seed = 21;
    GenericConfig g = sample_generic_config(cfg, SampleCounts{2, 0, 0, 2});
    auto ctx = FieldCtx<Rational>::make(g.q);
    auto chain = make_chain<Rational>(2, g.inhomogeneities, ctx, Rational(3, 2));
    Monodromy<Rational> Tu = build_monodromy(chain, g.w[0]);
    Monodromy<Rational> Tv = build_monodromy(chain, g.w[1]);
    RMatrix<Rational> R = build_r_matrix(ctx, g.w[0], g.w[1]);
    CHECK(check_rtt(Tu, Tv, R).ok);
}
