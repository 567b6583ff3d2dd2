#include "doctest.h"

#include "bgl3/izergin.hpp"
#include "bgl3/sample.hpp"

using namespace bgl3;

namespace {

struct Fixture {
    Sampler sampler;
    FieldCtx<Rational> ctx;
    explicit Fixture(std::uint64_t seed)
        : sampler(SampleConfig{seed, 50, 4000}), ctx(FieldCtx<Rational>::make(sampler.q())) {}
    SpectralSet<Rational> draw_set(int n) { return SpectralSet<Rational>(sampler.draw_many(n)); }
};

} // namespace

TEST_CASE("initial condition K_1 = g and K_0 = 1") {
    Fixture fx(31);
    Rational x = fx.sampler.draw(), y = fx.sampler.draw();
    CHECK(check_izergin_initial(fx.ctx, x, y));
    CHECK(izergin_k(fx.ctx, SpectralSet<Rational>(), SpectralSet<Rational>()).is_one());
}

TEST_CASE("K_1 at the reduction point equals -q/z") {
    auto ctx = FieldCtx<Rational>::make(Rational(3));
    Rational z(5);
    Rational got = izergin_k(ctx, SpectralSet<Rational>({z / Rational(9)}),
                             SpectralSet<Rational>({z}));
    CHECK(got == -ctx.q / z);
}

TEST_CASE("modified determinants") {
    Fixture fx(32);
    Rational w = fx.sampler.draw(), y = fx.sampler.draw();
    SpectralSet<Rational> sw({w}), sy({y});
    CHECK(izergin_kr(fx.ctx, sw, sy) == y * g_fun(fx.ctx, w, y));
    CHECK(izergin_kl(fx.ctx, sw, sy) == w * g_fun(fx.ctx, w, y));
    auto xs = fx.draw_set(3);
    auto ys = fx.draw_set(3);
    Rational px(1), py(1);
    for (const auto& x : xs) px *= x;
    for (const auto& yy : ys) py *= yy;
    CHECK(izergin_kl(fx.ctx, xs, ys) / izergin_kr(fx.ctx, xs, ys) == px / py);
}

TEST_CASE("izergin determinant is symmetric within each argument family") {
    Fixture fx(33);
    auto xs = fx.draw_set(3);
    auto ys = fx.draw_set(3);
    SpectralSet<Rational> xs_perm({xs[2], xs[0], xs[1]});
    SpectralSet<Rational> ys_perm({ys[1], ys[2], ys[0]});
    CHECK(izergin_k(fx.ctx, xs, ys) == izergin_k(fx.ctx, xs_perm, ys_perm));
}

TEST_CASE("appendix identities at random points, k up to 4") {
    for (std::uint64_t seed : {41u, 42u, 43u}) {
        Fixture fx(seed);
        for (int k = 1; k <= 4; ++k) {
            auto xs = fx.draw_set(k);
            auto ys = fx.draw_set(k);
            Rational alpha = fx.sampler.draw();
            CHECK(check_izergin_rescaling(fx.ctx, xs, ys, alpha));
            CHECK(check_izergin_inverse_order(fx.ctx, xs, ys));
            CHECK(check_izergin_inverse_order_modified(fx.ctx, xs, ys));
        }
        for (int k = 0; k <= 3; ++k) {
            auto xs = fx.draw_set(k);
            auto ys = fx.draw_set(k);
            Rational z = fx.sampler.draw();
            CHECK(check_izergin_reduction(fx.ctx, xs, ys, z));
        }
        for (int k = 1; k <= 4; ++k) {
            auto xs_rest = fx.draw_set(k - 1);
            auto ys = fx.draw_set(k);
            CHECK(check_izergin_residue(fx.ctx, xs_rest, ys));
        }
    }
}

TEST_CASE("summation lemma for all shapes m1+m2 <= 4") {
    for (std::uint64_t seed : {51u, 52u}) {
        for (int m1 = 0; m1 <= 4; ++m1)
            for (int m2 = 0; m1 + m2 <= 4; ++m2) {
                Fixture fx(seed + 100 * m1 + 10 * m2);
                auto alpha = fx.draw_set(m1);
                auto beta = fx.draw_set(m2);
                auto gamma = fx.draw_set(m1 + m2);
                auto rep = summation_lemma_check(fx.ctx, alpha, beta, gamma);
                CHECK(rep.plain_q_down);
                CHECK(rep.plain_q_up);
                CHECK(rep.modified);
            }
    }
}

TEST_CASE("summation lemma smallest shapes by hand") {
    Fixture fx(61);
    // m1=1, m2=0: single partition, both sides equal g(gamma, alpha)
    Rational alpha = fx.sampler.draw();
    Rational gamma = fx.sampler.draw();
    SpectralSet<Rational> sa({alpha}), sg({gamma});
    Rational lhs = izergin_k(fx.ctx, sg, sa);
    CHECK(lhs == g_fun(fx.ctx, gamma, alpha));
    auto rep = summation_lemma_check(fx.ctx, sa, SpectralSet<Rational>(), sg);
    CHECK(rep.ok());
    // m1=0, m2=1
    auto rep2 = summation_lemma_check(fx.ctx, SpectralSet<Rational>(), sa, sg);
    CHECK(rep2.ok());
}

TEST_CASE("three-term identity vanishes exactly") {
    for (std::uint64_t seed = 70; seed < 80; ++seed) {
        Fixture fx(seed);
        Rational u = fx.sampler.draw(), v = fx.sampler.draw(), w = fx.sampler.draw();
        CHECK(check_three_term_identity(fx.ctx, u, v, w));
    }
}

TEST_CASE("size mismatch is rejected") {
    Fixture fx(81);
    CHECK_THROWS_AS(izergin_k(fx.ctx, fx.draw_set(2), fx.draw_set(3)), SizeMismatchError);
}

TEST_CASE("pole arguments are rejected in the exact field") {
    auto ctx = FieldCtx<Rational>::make(Rational(2));
    SpectralSet<Rational> xs({Rational(3)});
    SpectralSet<Rational> ys({Rational(3)});
    CHECK_THROWS_AS(izergin_k(ctx, xs, ys), PoleError);
    SpectralSet<Rational> xs2({Rational(3), Rational(3)});
    SpectralSet<Rational> ys2({Rational(5), Rational(7)});
    CHECK_THROWS_AS(izergin_k(ctx, xs2, ys2), PoleError);
    // q x_i = q^{-1} y_j is not a pole of K; the zero cancels and the
    // determinant evaluates (the k=1 case is just g)
    SpectralSet<Rational> ys3({Rational(12)});
    CHECK(izergin_k(ctx, xs, ys3) == g_fun(ctx, Rational(3), Rational(12)));
}
