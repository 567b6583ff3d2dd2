#include "bgl3/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

#include "bgl3/izergin.hpp"
#include "bgl3/sample.hpp"

namespace bgl3 {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Uniform wrapper: timing plus error capture.  A thrown module error is a
// failed case with diagnostics, never a crashed suite.
VerificationCase guarded(const std::string& id, const std::string& suite, bool exact,
                         const std::function<bool(std::string&)>& body) {
    VerificationCase c;
    c.id = id;
    c.suite = suite;
    c.exact = exact;
    Clock::time_point t0 = Clock::now();
    try {
        std::string detail;
        c.pass = body(detail);
        c.detail = detail;
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("error: ") + e.what();
    }
    c.elapsed_ms = ms_since(t0);
    return c;
}

std::string norm_string(const BigFloat& x) { return x.to_string(3); }

BigFloat max_norm(const Vec<BigComplex>& v) {
    BigFloat m(0L);
    for (const auto& x : v) {
        BigFloat a = x.magnitude();
        if (m < a) m = a;
    }
    return m;
}

ChainSpec<BigComplex> to_complex_chain(const ChainSpec<Rational>& chain) {
    ChainSpec<BigComplex> out;
    out.sites = chain.sites;
    std::vector<BigComplex> z;
    for (const auto& zi : chain.z) z.emplace_back(zi);
    out.z = SpectralSet<BigComplex>(std::move(z));
    out.ctx = FieldCtx<BigComplex>::make(BigComplex(chain.ctx.q));
    out.twist = BigComplex(chain.twist);
    return out;
}

} // namespace

int thread_cap() {
    const char* env = std::getenv("BETHE_GL3_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n > 0 ? n : 1;
}

namespace {

// Deterministic parallel map: results land in preallocated slots, report
// order is restored by Report::finalize regardless of scheduling.
std::vector<VerificationCase> run_jobs(const std::vector<std::function<VerificationCase()>>& jobs) {
    std::vector<VerificationCase> out(jobs.size());
    int threads = std::min<int>(thread_cap(), static_cast<int>(jobs.size()));
    if (threads <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                out[i] = jobs[i]();
            }
        });
    for (auto& th : pool) th.join();
    return out;
}

} // namespace

std::vector<VerificationCase> rtt_suite(int points, std::uint64_t seed,
                                        const std::optional<Rational>& q_fixed) {
    std::vector<std::function<VerificationCase()>> jobs;
    for (int p = 0; p < points; ++p) {
        int sites = 1 + (p % 3);
        std::uint64_t case_seed = seed * 1000 + p;
        jobs.push_back([=] {
            return guarded(case_id("rtt", "full", sites, 0, 0, 2, case_seed), "rtt", true,
                           [&](std::string& detail) {
                               GenericConfig g = sample_generic_config(
                                   SampleConfig{case_seed, 50, 4000}, SampleCounts{sites, 0, 0, 2},
                                   q_fixed);
                               auto ctx = FieldCtx<Rational>::make(g.q);
                               auto chain = make_chain<Rational>(sites, g.inhomogeneities, ctx);
                               auto Tu = build_monodromy(chain, g.w[0]);
                               auto Tv = build_monodromy(chain, g.w[1]);
                               auto R = build_r_matrix(ctx, g.w[0], g.w[1]);
                               RttReport rep = check_rtt(Tu, Tv, R);
                               detail = std::to_string(rep.checked_blocks) + " blocks";
                               return rep.ok;
                           });
        });
    }
    return run_jobs(jobs);
}

std::vector<VerificationCase> vacuum_suite(std::uint64_t seed, const Rational& twist,
                                           const std::optional<Rational>& q_fixed) {
    std::vector<std::function<VerificationCase()>> jobs;
    std::string leg = twist == Rational(1) ? "plain" : "twisted";
    for (int sites = 1; sites <= 3; ++sites) {
        std::uint64_t case_seed = seed * 100 + sites;
        jobs.push_back([=] {
            return guarded(case_id("vacuum", leg, sites, 0, 0, 0, case_seed), "vacuum", true,
                           [&](std::string& detail) {
                               GenericConfig g = sample_generic_config(
                                   SampleConfig{case_seed, 50, 4000}, SampleCounts{sites, 0, 0, 1},
                                   q_fixed);
                               auto ctx = FieldCtx<Rational>::make(g.q);
                               auto chain = make_chain<Rational>(sites, g.inhomogeneities, ctx, twist);
                               VacuumReport rep = check_vacuum(chain, g.w[0]);
                               auto lam = vacuum_eigenvalues(chain, g.w[0]);
                               bool closed_forms = lam.lambda2.is_one() &&
                                                   lam.lambda3 == twist.pow(sites) &&
                                                   lam.r3 == twist.pow(sites);
                               detail = "triangularity+eigenvalues";
                               return rep.ok() && closed_forms;
                           });
        });
    }
    return run_jobs(jobs);
}

std::vector<VerificationCase> izergin_suite(int points, std::uint64_t seed,
                                            const std::optional<Rational>& q_fixed) {
    std::vector<std::function<VerificationCase()>> jobs;
    auto add = [&](const std::string& name, std::uint64_t case_seed,
                   std::function<bool(Sampler&, const FieldCtx<Rational>&)> body) {
        jobs.push_back([=] {
            return guarded(case_id("izergin", name, 0, 0, 0, 0, case_seed), "izergin", true,
                           [&](std::string&) {
                               Sampler sampler(SampleConfig{case_seed, 50, 4000}, q_fixed);
                               auto ctx = FieldCtx<Rational>::make(sampler.q());
                               return body(sampler, ctx);
                           });
        });
    };
    for (int p = 0; p < points; ++p) {
        std::uint64_t s = seed * 10000 + p;
        add("initial", s, [](Sampler& smp, const FieldCtx<Rational>& ctx) {
            return check_izergin_initial(ctx, smp.draw(), smp.draw());
        });
        for (int k = 1; k <= 4; ++k) {
            add("rescale-k" + std::to_string(k), s + 10 * k,
                [k](Sampler& smp, const FieldCtx<Rational>& ctx) {
                    SpectralSet<Rational> xs(smp.draw_many(k)), ys(smp.draw_many(k));
                    return check_izergin_rescaling(ctx, xs, ys, smp.draw());
                });
            add("invorder-k" + std::to_string(k), s + 10 * k + 1,
                [k](Sampler& smp, const FieldCtx<Rational>& ctx) {
                    SpectralSet<Rational> xs(smp.draw_many(k)), ys(smp.draw_many(k));
                    return check_izergin_inverse_order(ctx, xs, ys);
                });
            add("invorder-mod-k" + std::to_string(k), s + 10 * k + 2,
                [k](Sampler& smp, const FieldCtx<Rational>& ctx) {
                    SpectralSet<Rational> xs(smp.draw_many(k)), ys(smp.draw_many(k));
                    return check_izergin_inverse_order_modified(ctx, xs, ys);
                });
            add("residue-k" + std::to_string(k), s + 10 * k + 3,
                [k](Sampler& smp, const FieldCtx<Rational>& ctx) {
                    SpectralSet<Rational> xs(smp.draw_many(k - 1)), ys(smp.draw_many(k));
                    return check_izergin_residue(ctx, xs, ys);
                });
        }
        for (int k = 0; k <= 3; ++k)
            add("reduction-k" + std::to_string(k), s + 100 + k,
                [k](Sampler& smp, const FieldCtx<Rational>& ctx) {
                    SpectralSet<Rational> xs(smp.draw_many(k)), ys(smp.draw_many(k));
                    return check_izergin_reduction(ctx, xs, ys, smp.draw());
                });
        for (int m1 = 0; m1 <= 4; ++m1)
            for (int m2 = 0; m1 + m2 <= 4; ++m2)
                add("lemma-" + std::to_string(m1) + "-" + std::to_string(m2),
                    s + 200 + 10 * m1 + m2, [m1, m2](Sampler& smp, const FieldCtx<Rational>& ctx) {
                        SpectralSet<Rational> alpha(smp.draw_many(m1));
                        SpectralSet<Rational> beta(smp.draw_many(m2));
                        SpectralSet<Rational> gamma(smp.draw_many(m1 + m2));
                        return summation_lemma_check(ctx, alpha, beta, gamma).ok();
                    });
    }
    return run_jobs(jobs);
}

std::vector<VerificationCase> threeterm_suite(int points, std::uint64_t seed,
                                              const std::optional<Rational>& q_fixed) {
    std::vector<std::function<VerificationCase()>> jobs;
    for (int p = 0; p < points; ++p) {
        std::uint64_t case_seed = seed * 100000 + p;
        jobs.push_back([=] {
            return guarded(case_id("threeterm", "k1", 0, 0, 0, 0, case_seed), "threeterm", true,
                           [&](std::string&) {
                               Sampler smp(SampleConfig{case_seed, 50, 4000}, q_fixed);
                               auto ctx = FieldCtx<Rational>::make(smp.q());
                               return check_three_term_identity(ctx, smp.draw(), smp.draw(),
                                                                smp.draw());
                           });
        });
    }
    return run_jobs(jobs);
}

VerificationCase verify_action(Entry entry, int sites, int a, int b, int n, std::uint64_t seed,
                               const Rational& twist, const std::optional<Rational>& q_fixed,
                               int regulator_cap) {
    std::string leg = entry.to_string() + (twist == Rational(1) ? "" : "t");
    return guarded(
        case_id("action", leg, sites, a, b, n, seed), "action", true,
        [&](std::string& detail) {
            GenericConfig g = sample_generic_config(SampleConfig{seed, 50, 4000},
                                                    SampleCounts{sites, a, b, n}, q_fixed);
            auto ctx = FieldCtx<Rational>::make(g.q);
            auto chain = make_chain<Rational>(sites, g.inhomogeneities, ctx, twist);
            MonodromyCache<Rational> cache(chain);
            BetheLabel<Rational> label{SpectralSet<Rational>(g.u), SpectralSet<Rational>(g.v)};
            Vec<Rational> direct = build_bethe(label, cache);
            for (const auto& w : g.w) direct = cache.at(w).T(entry.i, entry.j).apply(direct);

            RatFunc::DegreeCapGuard guard(regulator_cap);
            Vec<Rational> via_formula = regulated_action_vector(chain, entry, g.w, label,
                                                                RegulatorPlan::standard(n));
            Vec<Rational> via_alternate = regulated_action_vector(chain, entry, g.w, label,
                                                                  RegulatorPlan::alternate(n));
            bool ok = direct == via_formula && via_formula == via_alternate;
            detail = "direct=formula=alt-plan";
            if (n == 1) {
                Vec<Rational> via_resolved = regulated_action_vector(
                    chain, entry, g.w, label, RegulatorPlan::standard(n), true);
                ok = ok && via_resolved == direct;
                detail += "=resolved";
            }
            return ok;
        });
}

VerificationCase verify_induction(Entry entry, int sites, int a, int b, std::uint64_t seed,
                                  const Rational& twist, const std::optional<Rational>& q_fixed,
                                  int regulator_cap) {
    return guarded(
        case_id("induction", entry.to_string(), sites, a, b, 2, seed), "induction", true,
        [&](std::string& detail) {
            GenericConfig g = sample_generic_config(SampleConfig{seed, 50, 4000},
                                                    SampleCounts{sites, a, b, 2}, q_fixed);
            auto ctx = FieldCtx<Rational>::make(g.q);
            auto chain = make_chain<Rational>(sites, g.inhomogeneities, ctx, twist);
            MonodromyCache<Rational> cache(chain);
            BetheLabel<Rational> label{SpectralSet<Rational>(g.u), SpectralSet<Rational>(g.v)};
            Vec<Rational> direct = build_bethe(label, cache);
            for (const auto& w : g.w) direct = cache.at(w).T(entry.i, entry.j).apply(direct);

            RatFunc::DegreeCapGuard guard(regulator_cap);
            Vec<Rational> pair_formula = regulated_action_vector(chain, entry, g.w, label,
                                                                 RegulatorPlan::standard(2));
            Vec<Rational> sequential = regulated_sequential_action_vector(
                chain, entry, g.w, label, RegulatorPlan::standard(2));
            detail = "direct=n2-formula=sequential";
            return direct == pair_formula && pair_formula == sequential;
        });
}

VerificationCase verify_act31_denominators(int sites, int a, int b, std::uint64_t seed,
                                           const std::optional<Rational>& q_fixed,
                                           int regulator_cap) {
    return guarded(
        case_id("act31den", "31", sites, a, b, 1, seed), "act31den", true,
        [&](std::string& detail) {
            GenericConfig g = sample_generic_config(SampleConfig{seed, 50, 4000},
                                                    SampleCounts{sites, a, b, 1}, q_fixed);
            auto ctx = FieldCtx<Rational>::make(g.q);
            auto chain = make_chain<Rational>(sites, g.inhomogeneities, ctx);
            RatFunc::DegreeCapGuard guard(regulator_cap);
            ChainSpec<RatFunc> rchain = lift_chain(chain);
            BetheLabel<Rational> label{SpectralSet<Rational>(g.u), SpectralSet<Rational>(g.v)};
            auto params = regulated_params(g.w, RegulatorPlan::standard(1));
            ActionResult<RatFunc> res =
                act_multiple(rchain, Entry{3, 1}, params, lift_label(label));
            detail = std::to_string(res.act31_denominators.size()) + " partitions";
            if (res.act31_denominators.empty()) return false;
            for (const auto& [by_xi1, by_eta2] : res.act31_denominators)
                if (!(by_xi1 == by_eta2)) return false;
            return true;
        });
}

// ---- Newton solver for the Bethe equations ----

namespace {

struct AffineFactor {
    BigComplex c0;
    std::vector<std::pair<int, BigComplex>> terms; // (unknown index, coefficient)

    BigComplex eval(const std::vector<BigComplex>& x) const {
        BigComplex v = c0;
        for (const auto& [i, c] : terms) v += c * x[i];
        return v;
    }
    BigComplex coeff_of(int m) const {
        for (const auto& [i, c] : terms)
            if (i == m) return c;
        return BigComplex(0);
    }
};

struct FactorProduct {
    BigComplex scale;
    std::vector<AffineFactor> factors;

    // value and gradient via prefix/suffix products
    void eval(const std::vector<BigComplex>& x, BigComplex& value,
              std::vector<BigComplex>& grad) const {
        size_t n = factors.size();
        std::vector<BigComplex> vals(n), prefix(n + 1, BigComplex(1)), suffix(n + 1, BigComplex(1));
        for (size_t t = 0; t < n; ++t) vals[t] = factors[t].eval(x);
        for (size_t t = 0; t < n; ++t) prefix[t + 1] = prefix[t] * vals[t];
        for (size_t t = n; t-- > 0;) suffix[t] = suffix[t + 1] * vals[t];
        value = scale * prefix[n];
        for (auto& gm : grad) gm = BigComplex(0);
        for (size_t t = 0; t < n; ++t) {
            BigComplex rest = scale * prefix[t] * suffix[t + 1];
            for (const auto& [i, c] : factors[t].terms) grad[i] += c * rest;
        }
    }
};

struct PolynomialSystem {
    std::vector<std::pair<FactorProduct, FactorProduct>> equations; // lhs - rhs = 0
    int unknowns = 0;

    void eval(const std::vector<BigComplex>& x, std::vector<BigComplex>& F,
              std::vector<std::vector<BigComplex>>& J) const {
        size_t m = equations.size();
        F.assign(m, BigComplex(0));
        J.assign(m, std::vector<BigComplex>(unknowns, BigComplex(0)));
        std::vector<BigComplex> ga(unknowns), gb(unknowns);
        for (size_t e = 0; e < m; ++e) {
            BigComplex va, vb;
            ga.assign(unknowns, BigComplex(0));
            gb.assign(unknowns, BigComplex(0));
            equations[e].first.eval(x, va, ga);
            equations[e].second.eval(x, vb, gb);
            F[e] = va - vb;
            for (int i = 0; i < unknowns; ++i) J[e][i] = ga[i] - gb[i];
        }
    }
};

// Denominator-cleared Bethe system.  Unknowns: u_0..u_{a-1}, v_0..v_{b-1}.
PolynomialSystem build_bethe_system(const ChainSpec<BigComplex>& chain, int a, int b) {
    const BigComplex q = chain.ctx.q;
    const BigComplex qi = chain.ctx.qinv;
    PolynomialSystem sys;
    sys.unknowns = a + b;
    auto uvar = [](int j) { return j; };
    auto vvar = [a](int i) { return a + i; };

    for (int j = 0; j < a; ++j) {
        FactorProduct lhs, rhs;
        lhs.scale = BigComplex(1);
        rhs.scale = (a - 1) % 2 == 0 ? BigComplex(1) : BigComplex(-1);
        for (const auto& z : chain.z) {
            lhs.factors.push_back(AffineFactor{-(qi * z), {{uvar(j), q}}});
            rhs.factors.push_back(AffineFactor{-z, {{uvar(j), BigComplex(1)}}});
        }
        for (int k = 0; k < a; ++k) {
            if (k == j) continue;
            lhs.factors.push_back(AffineFactor{BigComplex(0), {{uvar(k), q}, {uvar(j), -qi}}});
            rhs.factors.push_back(AffineFactor{BigComplex(0), {{uvar(j), q}, {uvar(k), -qi}}});
        }
        for (int i = 0; i < b; ++i) {
            lhs.factors.push_back(
                AffineFactor{BigComplex(0), {{vvar(i), BigComplex(1)}, {uvar(j), BigComplex(-1)}}});
            rhs.factors.push_back(AffineFactor{BigComplex(0), {{vvar(i), q}, {uvar(j), -qi}}});
        }
        sys.equations.emplace_back(std::move(lhs), std::move(rhs));
    }
    for (int i = 0; i < b; ++i) {
        FactorProduct lhs, rhs;
        lhs.scale = chain.r3(BigComplex(1)); // constant in this representation
        rhs.scale = (b - 1) % 2 == 0 ? BigComplex(1) : BigComplex(-1);
        for (int k = 0; k < b; ++k) {
            if (k == i) continue;
            lhs.factors.push_back(AffineFactor{BigComplex(0), {{vvar(i), q}, {vvar(k), -qi}}});
            rhs.factors.push_back(AffineFactor{BigComplex(0), {{vvar(k), q}, {vvar(i), -qi}}});
        }
        for (int j = 0; j < a; ++j) {
            lhs.factors.push_back(
                AffineFactor{BigComplex(0), {{vvar(i), BigComplex(1)}, {uvar(j), BigComplex(-1)}}});
            rhs.factors.push_back(AffineFactor{BigComplex(0), {{vvar(i), q}, {uvar(j), -qi}}});
        }
        sys.equations.emplace_back(std::move(lhs), std::move(rhs));
    }
    return sys;
}

// dense linear solve with partial pivoting on magnitude
std::vector<BigComplex> solve_linear(std::vector<std::vector<BigComplex>> A,
                                     std::vector<BigComplex> rhs) {
    const int n = static_cast<int>(rhs.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        BigFloat best = A[col][col].magnitude();
        for (int r = col + 1; r < n; ++r) {
            BigFloat m = A[r][col].magnitude();
            if (best < m) {
                best = m;
                pivot = r;
            }
        }
        if (best.is_zero()) throw ConvergenceError("singular Jacobian");
        std::swap(A[col], A[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (int r = col + 1; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            BigComplex f = A[r][col] / A[col][col];
            for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<BigComplex> x(n, BigComplex(0));
    for (int r = n - 1; r >= 0; --r) {
        BigComplex acc = rhs[r];
        for (int c = r + 1; c < n; ++c) acc -= A[r][c] * x[c];
        x[r] = acc / A[r][r];
    }
    return x;
}

BigFloat max_abs(const std::vector<BigComplex>& v) {
    BigFloat m(0L);
    for (const auto& x : v) {
        BigFloat a = x.magnitude();
        if (m < a) m = a;
    }
    return m;
}

} // namespace

BetheRoots solve_bethe_roots(const ChainSpec<Rational>& chain, int a, int b, std::uint64_t seed,
                             int precision) {
    if (b > a || a > chain.sites) throw ConfigError("solve_bethe_roots: infeasible shape");
    if (precision < 50) throw ConfigError("solve_bethe_roots: precision must be >= 50 digits");
    BigFloat::PrecisionGuard prec_guard(precision);
    ChainSpec<BigComplex> fchain = to_complex_chain(chain);
    PolynomialSystem sys = build_bethe_system(fchain, a, b);
    const int m = a + b;
    SplitMix64 rng(seed);
    BigFloat target = BigFloat::pow10(-(precision - 10));
    BigFloat step_tol = BigFloat::pow10(-(precision - 8));
    BigFloat guard_dist = BigFloat::pow10(-8);

    for (int attempt = 0; attempt < 40; ++attempt) {
        std::vector<BigComplex> x;
        for (int i = 0; i < m; ++i) {
            long re = 1 + static_cast<long>(rng.next() % 2000);
            long im = static_cast<long>(rng.next() % 2001) - 1000;
            x.emplace_back(BigFloat(Rational(re, 100)), BigFloat(Rational(im, 250)));
        }
        bool converged = false;
        int iters = 0;
        try {
            std::vector<BigComplex> F;
            std::vector<std::vector<BigComplex>> J;
            for (int it = 0; it < 200; ++it) {
                iters = it + 1;
                sys.eval(x, F, J);
                std::vector<BigComplex> step = solve_linear(J, F);
                BigFloat fmag = max_abs(F);
                // damped update
                BigFloat t(1L);
                std::vector<BigComplex> cand(m, BigComplex(0));
                for (int half = 0; half < 12; ++half) {
                    for (int i = 0; i < m; ++i) cand[i] = x[i] - BigComplex(BigFloat(t)) * step[i];
                    std::vector<BigComplex> Fc;
                    std::vector<std::vector<BigComplex>> Jc;
                    sys.eval(cand, Fc, Jc);
                    if (max_abs(Fc) < fmag || half == 11) break;
                    t = t / BigFloat(2L);
                }
                BigFloat stepmag = max_abs(step);
                x = cand;
                if (stepmag < step_tol) {
                    converged = true;
                    break;
                }
            }
        } catch (const Error&) {
            continue; // singular Jacobian or stray pole: next start
        }
        if (!converged) continue;

        // admissibility against pole loci
        bool admissible = true;
        std::vector<BigComplex> all(x);
        for (const auto& z : fchain.z) all.push_back(z);
        for (size_t i = 0; i < all.size() && admissible; ++i)
            for (size_t j = 0; j < all.size() && admissible; ++j) {
                if (i == j) continue;
                if ((all[i] - all[j]).magnitude() < guard_dist) admissible = false;
                if ((fchain.ctx.q * all[i] - fchain.ctx.qinv * all[j]).magnitude() < guard_dist)
                    admissible = false;
            }
        if (!admissible) continue;

        BetheRoots roots;
        roots.u.assign(x.begin(), x.begin() + a);
        roots.v.assign(x.begin() + a, x.end());
        roots.iterations = iters;
        auto residuals = bethe_residuals(fchain, SpectralSet<BigComplex>(roots.u),
                                         SpectralSet<BigComplex>(roots.v));
        BigFloat rmax(0L);
        for (const auto& r : residuals) {
            BigFloat mag = r.magnitude();
            if (rmax < mag) rmax = mag;
        }
        if (rmax < target) {
            roots.max_residual = norm_string(rmax);
            return roots;
        }
    }
    throw ConvergenceError("solve_bethe_roots: no admissible root within the retry budget");
}

std::vector<VerificationCase> verify_on_shell(int sites, int a, int b, std::uint64_t seed,
                                              int precision,
                                              const std::optional<Rational>& q_fixed) {
    std::vector<VerificationCase> out;
    // shared sampled model
    GenericConfig g;
    try {
        g = sample_generic_config(SampleConfig{seed, 20, 4000}, SampleCounts{sites, 0, 0, 6},
                                  q_fixed);
    } catch (const std::exception& e) {
        VerificationCase c;
        c.id = case_id("onshell", "setup", sites, a, b, 0, seed);
        c.suite = "onshell";
        c.exact = false;
        c.detail = std::string("error: ") + e.what();
        out.push_back(c);
        return out;
    }
    auto ctx = FieldCtx<Rational>::make(g.q);
    auto chain = make_chain<Rational>(sites, g.inhomogeneities, ctx);

    BigFloat::PrecisionGuard prec_guard(precision);
    BetheRoots roots;
    out.push_back(guarded(case_id("onshell", "newton", sites, a, b, 0, seed), "onshell", false,
                          [&](std::string& detail) {
                              roots = solve_bethe_roots(chain, a, b, seed, precision);
                              detail = "residual=" + roots.max_residual + " iters=" +
                                       std::to_string(roots.iterations);
                              return true;
                          }));
    out.back().residual = roots.max_residual;
    if (!out.back().pass) return out;

    ChainSpec<BigComplex> fchain = to_complex_chain(chain);
    MonodromyCache<BigComplex> cache(fchain);
    SpectralSet<BigComplex> us(roots.u), vs(roots.v);
    BetheLabel<BigComplex> label{us, vs};
    Vec<BigComplex> B = build_bethe(label, cache);
    BigFloat bnorm = max_norm(B);
    BigFloat tol = BigFloat::pow10(-(precision / 2 - 5));
    BigFloat neg_tol = BigFloat::pow10(-10);

    auto eigen_residual = [&](MonodromyCache<BigComplex>& cc, const Vec<BigComplex>& vec,
                              const SpectralSet<BigComplex>& uu, const SpectralSet<BigComplex>& vv,
                              const BigComplex& w) {
        Vec<BigComplex> lhs = cc.at(w).transfer().apply(vec);
        BigComplex tau = transfer_eigenvalue(cc.chain(), w, uu, vv);
        Vec<BigComplex> diff = vec_sub(lhs, vec_scale(vec, tau));
        return max_norm(diff) / max_norm(vec);
    };

    for (int s = 0; s < 5; ++s) {
        BigComplex w(g.w[s]);
        std::uint64_t wseed = seed + s;
        std::string rstr;
        out.push_back(guarded(
            case_id("onshell", "eigvec-w" + std::to_string(s), sites, a, b, 0, wseed), "onshell",
            false, [&](std::string& detail) {
                if (bnorm.is_zero()) return false;
                BigFloat r = eigen_residual(cache, B, us, vs, w);
                rstr = norm_string(r);
                detail = "|t(w)B - tau B| / |B|";
                return r < tol;
            }));
        out.back().residual = rstr;
    }

    {
        std::string rstr;
        out.push_back(guarded(
            case_id("onshell", "negative-control", sites, a, b, 0, seed), "onshell", false,
            [&](std::string& detail) {
                // perturb the first root; the eigenvector property must break
                std::vector<BigComplex> u_pert = roots.u;
                BigComplex bump = BigComplex(1) + BigComplex(BigFloat::pow10(-6));
                u_pert[0] *= bump;
                SpectralSet<BigComplex> us_p(u_pert);
                BetheLabel<BigComplex> label_p{us_p, vs};
                Vec<BigComplex> Bp = build_bethe(label_p, cache);
                BigFloat r = eigen_residual(cache, Bp, us_p, vs, BigComplex(g.w[5]));
                rstr = norm_string(r);
                detail = "perturbed roots must exceed 1e-10";
                return r > neg_tol;
            }));
        out.back().residual = rstr;
    }

    out.push_back(guarded(
        case_id("onshell", "dual-exploratory", sites, a, b, 0, seed), "onshell", false,
        [&](std::string& detail) {
            Vec<BigComplex> C = build_dual_bethe(label, cache);
            bool nonzero = !max_norm(C).is_zero();
            bool weight = check_weight_support(C, sites, a, b);
            detail = "exploratory: dual vector nonzero and weight-graded";
            return nonzero && weight;
        }));

    return out;
}

// ---- full run ----

nlohmann::json RunConfig::to_json() const {
    return nlohmann::json{{"suite", suite},
                          {"sites", sites},
                          {"a", a},
                          {"b", b},
                          {"n", n},
                          {"entry", entry},
                          {"q", q},
                          {"seed", seed},
                          {"precision", precision},
                          {"twist", twist},
                          {"format", format},
                          {"output", output},
                          {"rtt_points", rtt_points},
                          {"izergin_points", izergin_points},
                          {"threeterm_points", threeterm_points},
                          {"regulator_cap", regulator_cap}};
}

void RunConfig::validate() const {
    static const char* suites[] = {"verify-rtt",    "verify-vacuum",    "verify-izergin",
                                   "verify-action", "verify-induction", "on-shell",
                                   "all"};
    bool found = false;
    for (const char* s : suites) found = found || suite == s;
    if (!found) throw ConfigError("unknown suite '" + suite + "'");
    if (sites < 1 || sites > 3) throw ConfigError("sites must be in {1,2,3}");
    if (a < 0 || b < 0 || n < 1) throw ConfigError("negative label counts or n < 1");
    if (entry != "all") {
        if (entry.size() != 2 || entry[0] < '1' || entry[0] > '3' || entry[1] < '1' ||
            entry[1] > '3')
            throw ConfigError("entry must be \"all\" or two digits in 1..3");
    }
    if (q != "random") {
        Rational qq = Rational::from_string(q);
        if (qq.is_zero() || qq == Rational(1) || qq == Rational(-1))
            throw ConfigError("q must avoid {0, 1, -1}");
    }
    if (precision < 30) throw ConfigError("precision must be >= 30 digits");
    if (Rational::from_string(twist).is_zero()) throw ConfigError("twist must be nonzero");
    if (format != "text" && format != "json") throw ConfigError("format must be text or json");
    if (regulator_cap < 16) throw ConfigError("regulator cap too small");
}

Report run(const RunConfig& cfg) {
    cfg.validate();
    Clock::time_point t0 = Clock::now();
    std::optional<Rational> q_fixed;
    if (cfg.q != "random") q_fixed = Rational::from_string(cfg.q);
    Rational twist = Rational::from_string(cfg.twist);

    Report rep;
    rep.config_echo = cfg.to_json();
    auto append = [&rep](std::vector<VerificationCase> cs) {
        for (auto& c : cs) rep.cases.push_back(std::move(c));
    };

    std::vector<Entry> entries;
    if (cfg.entry == "all") {
        entries = {Entry{1, 3}, Entry{1, 2}, Entry{2, 3}, Entry{2, 2}, Entry{1, 1},
                   Entry{3, 3}, Entry{2, 1}, Entry{3, 2}, Entry{3, 1}};
    } else {
        entries = {Entry{cfg.entry[0] - '0', cfg.entry[1] - '0'}};
    }

    if (cfg.suite == "verify-rtt" || cfg.suite == "all")
        append(rtt_suite(cfg.rtt_points, cfg.seed, q_fixed));
    if (cfg.suite == "verify-vacuum" || cfg.suite == "all") {
        append(vacuum_suite(cfg.seed, Rational(1), q_fixed));
        Rational tw = twist == Rational(1) ? Rational(5, 7) : twist;
        append(vacuum_suite(cfg.seed, tw, q_fixed));
    }
    if (cfg.suite == "verify-izergin" || cfg.suite == "all") {
        append(izergin_suite(cfg.izergin_points, cfg.seed, q_fixed));
        append(threeterm_suite(cfg.threeterm_points, cfg.seed, q_fixed));
    }
    if (cfg.suite == "verify-action" || cfg.suite == "all") {
        std::vector<std::function<VerificationCase()>> jobs;
        for (const Entry& e : entries)
            jobs.push_back([=, &cfg] {
                return verify_action(e, cfg.sites, cfg.a, cfg.b, cfg.n, cfg.seed, twist, q_fixed,
                                     cfg.regulator_cap);
            });
        if (cfg.entry == "all" || cfg.entry == "31")
            jobs.push_back([=, &cfg] {
                return verify_act31_denominators(cfg.sites, std::max(cfg.a, 1), cfg.b, cfg.seed,
                                                 q_fixed, cfg.regulator_cap);
            });
        append(run_jobs(jobs));
    }
    if (cfg.suite == "verify-induction" || cfg.suite == "all") {
        std::vector<std::function<VerificationCase()>> jobs;
        for (const Entry& e : {Entry{1, 3}, Entry{1, 2}, Entry{2, 3}, Entry{2, 2}})
            jobs.push_back([=, &cfg] {
                return verify_induction(e, cfg.sites, cfg.a, cfg.b, cfg.seed, twist, q_fixed,
                                        cfg.regulator_cap);
            });
        append(run_jobs(jobs));
    }
    if (cfg.suite == "on-shell" || cfg.suite == "all") {
        int sites = cfg.suite == "all" ? 2 : cfg.sites;
        int a = cfg.suite == "all" ? 1 : cfg.a;
        int b = cfg.suite == "all" ? 1 : cfg.b;
        append(verify_on_shell(sites, a, b, cfg.seed, cfg.precision, q_fixed));
    }

    rep.finalize();
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

} // namespace bgl3
