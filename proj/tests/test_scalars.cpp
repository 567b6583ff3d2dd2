#include "doctest.h"

#include "bgl3/bigfloat.hpp"
#include "bgl3/field.hpp"
#include "bgl3/regulated.hpp"
#include "bgl3/sample.hpp"

using namespace bgl3;

TEST_CASE("rational basics") {
    Rational a(3, 6);
    CHECK(a == Rational(1, 2));
    CHECK(a.to_string() == "1/2");
    CHECK((a + a).is_one());
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a / Rational(0), PoleError);
    CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
}

TEST_CASE("polynomial gcd and division") {
    // (x+1)^2 (x-2) vs (x+1)(x+3)
    Poly x = Poly::variable();
    Poly one = Poly::constant(Rational(1));
    Poly p = (x + one) * (x + one) * (x - Poly::constant(Rational(2)));
    Poly q = (x + one) * (x + Poly::constant(Rational(3)));
    Poly g = poly_gcd(p, q);
    CHECK(g.degree() == 1);
    CHECK(Poly::divexact(p, g) * g == p);
    CHECK(Poly::divexact(q, g) * g == q);
    CHECK(poly_gcd(x, x + one).degree() == 0);
}

TEST_CASE("regulated evaluation at zero") {
    RatFunc eps = RatFunc::epsilon();
    RatFunc one(1);

    SUBCASE("(1+eps)/(1-eps) -> 1") {
        RatFunc r = (one + eps) / (one - eps);
        CHECK(reg_eval_at_zero(r) == Rational(1));
    }
    SUBCASE("eps/eps -> 1 after cancellation") {
        RatFunc r = eps / eps;
        CHECK(r.is_one());
        CHECK(reg_eval_at_zero(r) == Rational(1));
    }
    SUBCASE("1/eps is a genuine pole") {
        RatFunc r = one / eps;
        CHECK_THROWS_AS(reg_eval_at_zero(r), PoleAtZeroError);
    }
    SUBCASE("normalization is canonical") {
        RatFunc r1 = (eps + one) * RatFunc(Rational(3)) / (RatFunc(Rational(3)) * (one - eps));
        RatFunc r2 = (one + eps) / (one - eps);
        CHECK(r1 == r2);
        CHECK(r1.den().leading().is_one());
    }
}

TEST_CASE("degree cap is an error, not truncation") {
    RatFunc::DegreeCapGuard guard(8);
    RatFunc eps = RatFunc::epsilon();
    RatFunc p = eps + RatFunc(1);
    RatFunc acc(1);
    CHECK_THROWS_AS(
        [&] {
            for (int i = 0; i < 20; ++i) acc = acc * p;
        }(),
        DegreeCapError);
}

TEST_CASE("evaluation commutes with arithmetic where defined") {
    SplitMix64 rng(41);
    RatFunc eps = RatFunc::epsilon();
    for (int trial = 0; trial < 20; ++trial) {
        auto small = [&] {
            // random rational function with nonzero denominator constant term
            RatFunc num = RatFunc(Rational(static_cast<long>(rng.next() % 9) - 4)) +
                          RatFunc(Rational(static_cast<long>(rng.next() % 9) - 4)) * eps;
            RatFunc den = RatFunc(Rational(static_cast<long>(rng.next() % 4) + 1)) +
                          RatFunc(Rational(static_cast<long>(rng.next() % 9) - 4)) * eps;
            return num / den;
        };
        RatFunc x = small(), y = small();
        CHECK(reg_eval_at_zero(x * y) == reg_eval_at_zero(x) * reg_eval_at_zero(y));
        CHECK(reg_eval_at_zero(x + y) == reg_eval_at_zero(x) + reg_eval_at_zero(y));
    }
}

TEST_CASE("field axioms spot checks") {
    SplitMix64 rng(7);
    auto rnd_rat = [&] {
        return Rational(static_cast<long>(rng.next() % 200) - 100,
                        static_cast<long>(rng.next() % 50) + 1);
    };
    for (int trial = 0; trial < 50; ++trial) {
        Rational a = rnd_rat(), b = rnd_rat(), c = rnd_rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((Rational(1) / a) * a == Rational(1));
    }
    RatFunc eps = RatFunc::epsilon();
    for (int trial = 0; trial < 15; ++trial) {
        RatFunc a = RatFunc(rnd_rat()) + RatFunc(rnd_rat()) * eps;
        RatFunc b = RatFunc(rnd_rat()) + RatFunc(rnd_rat()) * eps * eps;
        RatFunc c = RatFunc(rnd_rat()) - RatFunc(rnd_rat()) * eps;
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((RatFunc(1) / a) * a == RatFunc(1));
    }
}

TEST_CASE("float field axioms hold to working precision") {
    BigFloat::PrecisionGuard guard(50);
    SplitMix64 rng(19);
    auto rnd = [&] {
        return BigComplex(BigFloat(Rational(static_cast<long>(rng.next() % 400) - 200,
                                            static_cast<long>(rng.next() % 40) + 1)),
                          BigFloat(Rational(static_cast<long>(rng.next() % 400) - 200,
                                            static_cast<long>(rng.next() % 40) + 1)));
    };
    BigFloat tol = BigFloat::pow10(-44);
    for (int trial = 0; trial < 20; ++trial) {
        BigComplex a = rnd(), b = rnd(), c = rnd();
        CHECK(((a + b) + c - (a + (b + c))).magnitude() < tol);
        BigFloat scale = ((a * b) * c).magnitude() + BigFloat(1L);
        CHECK((((a * b) * c - a * (b * c)).magnitude() / scale) < tol);
        if (!a.is_zero()) CHECK(((BigComplex(1) / a) * a - BigComplex(1)).magnitude() < tol);
    }
}

TEST_CASE("big float precision rules") {
    BigFloat::PrecisionGuard guard(50);
    BigFloat a(Rational(1, 3));
    BigFloat b(Rational(1, 7), 80);
    CHECK((a * b).digits() == 80);
    CHECK_THROWS_AS(BigFloat(Rational(1), 10), ConfigError);
    BigComplex z(BigFloat(3L), BigFloat(4L));
    CHECK(z.magnitude() == BigFloat(5L));
    BigComplex w = z / z;
    CHECK(w.is_one());
    // threshold comparison round trip
    CHECK(BigFloat::pow10(-40) < BigFloat::pow10(-39));
}

TEST_CASE("sampling determinism and blacklist") {
    SampleConfig cfg;
    cfg.seed = 1;
    SampleCounts counts{2, 1, 1, 1};
    GenericConfig g1 = sample_generic_config(cfg, counts);
    GenericConfig g2 = sample_generic_config(cfg, counts);
    CHECK(g1.q == g2.q);
    CHECK(g1.all_parameters() == g2.all_parameters());

    cfg.seed = 2;
    GenericConfig g3 = sample_generic_config(cfg, counts);
    CHECK(g1.all_parameters() != g3.all_parameters());

    auto params = g1.all_parameters();
    CHECK(params.size() == 5);
    CHECK(!g1.q.is_zero());
    CHECK(g1.q != Rational(1));
    CHECK(g1.q != Rational(-1));
    Rational qsq = g1.q * g1.q;
    for (size_t i = 0; i < params.size(); ++i) {
        CHECK(!params[i].is_zero());
        for (size_t j = 0; j < params.size(); ++j) {
            if (i == j) continue;
            CHECK(params[i] != params[j]);
            CHECK(params[i] != qsq * params[j]);
        }
    }
}

TEST_CASE("sampling rejects tiny bound") {
    SampleConfig cfg;
    cfg.magnitude_bound = 5;
    CHECK_THROWS_AS(sample_generic_config(cfg, SampleCounts{1, 0, 0, 0}), ConfigError);
}
