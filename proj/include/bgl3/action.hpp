#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bgl3/bethe.hpp"

namespace bgl3 {

struct Entry {
    int i = 1;
    int j = 1;

    friend bool operator==(Entry a, Entry b) { return a.i == b.i && a.j == b.j; }
    std::string to_string() const { return std::to_string(i) + std::to_string(j); }
};

// One action parameter w_m.  Coefficient occurrences of the action set
// itself use `bare`; occurrences inside xi- and eta-derived subsets use the
// respective regulated copy.  In an unregulated run all three coincide.
template <class F>
struct ActionParam {
    F bare;
    F xi;
    F eta;

    static ActionParam plain(const F& w) { return ActionParam{w, w, w}; }
};

template <class F>
struct ActionTerm {
    F coeff;
    BetheLabel<F> label;
    std::string partition_tag;
};

template <class F>
struct ActionResult {
    Entry entry;
    int n = 0;
    std::vector<ActionTerm<F>> terms;
    // entry (3,1) only: the two equivalent denominator groupings, one pair
    // per partition
    std::vector<std::pair<F, F>> act31_denominators;
};

namespace detail {

inline std::string tag_indices(const char* name, const std::vector<int>& idx) {
    std::string s = name;
    s += "={";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
    }
    s += "}";
    return s;
}

} // namespace detail

// The multiple action of T_ij(w_n)...T_ij(w_1) on B^{a,b}(u;v), as a sum
// over partitions of xi = {v, w} and eta = {u, w} with the coefficients of
// the corresponding closed formula.  Shape-infeasible entries produce the
// empty sum.
template <class F>
ActionResult<F> act_multiple(const ChainSpec<F>& chain, Entry entry,
                             const std::vector<ActionParam<F>>& ws, const BetheLabel<F>& label) {
    const FieldCtx<F>& ctx = chain.ctx;
    const int n = static_cast<int>(ws.size());
    const int a = label.a();
    const int b = label.b();

    std::vector<F> wbare_v, wxi_v, weta_v;
    for (const auto& w : ws) {
        wbare_v.push_back(w.bare);
        wxi_v.push_back(w.xi);
        weta_v.push_back(w.eta);
    }
    SpectralSet<F> wbar(wbare_v);
    SpectralSet<F> xi = disjoint_union(label.v, SpectralSet<F>(wxi_v));
    SpectralSet<F> eta = disjoint_union(label.u, SpectralSet<F>(weta_v));

    ActionResult<F> res;
    res.entry = entry;
    res.n = n;
    F lam2_w = FieldTraits<F>::one();
    for (const auto& w : ws) lam2_w = lam2_w * chain.lambda2(w.bare);

    auto push = [&](F coeff, SpectralSet<F> us, SpectralSet<F> vs, std::string tag) {
        res.terms.push_back(
            ActionTerm<F>{std::move(coeff), BetheLabel<F>{std::move(us), std::move(vs)},
                          std::move(tag)});
    };

    if (entry.i == 1 && entry.j == 3) {
        push(lam2_w, eta, xi, "full");
        return res;
    }

    if (entry.i == 1 && entry.j == 2) {
        for (const auto& p : enumerate_partitions(xi.size(), {n, b})) {
            SpectralSet<F> xiI = xi.subset(p.parts[0]);
            SpectralSet<F> xiII = xi.subset(p.parts[1]);
            F coeff = lam2_w * f_prod(ctx, xiII, xiI) / f_prod(ctx, wbar, xiI) *
                      izergin_kr(ctx, wbar, xiI);
            push(std::move(coeff), eta, xiII, detail::tag_indices("xiI", p.parts[0]));
        }
        return res;
    }

    if (entry.i == 2 && entry.j == 3) {
        for (const auto& p : enumerate_partitions(eta.size(), {n, a})) {
            SpectralSet<F> etaI = eta.subset(p.parts[0]);
            SpectralSet<F> etaII = eta.subset(p.parts[1]);
            F coeff = lam2_w * f_prod(ctx, etaI, etaII) / f_prod(ctx, etaI, wbar) *
                      izergin_kl(ctx, etaI, wbar);
            push(std::move(coeff), etaII, xi, detail::tag_indices("etaI", p.parts[0]));
        }
        return res;
    }

    if (entry.i == 2 && entry.j == 2) {
        for (const auto& pe : enumerate_partitions(eta.size(), {n, a}))
            for (const auto& px : enumerate_partitions(xi.size(), {n, b})) {
                SpectralSet<F> etaI = eta.subset(pe.parts[0]);
                SpectralSet<F> etaII = eta.subset(pe.parts[1]);
                SpectralSet<F> xiI = xi.subset(px.parts[0]);
                SpectralSet<F> xiII = xi.subset(px.parts[1]);
                F coeff = lam2_w * f_prod(ctx, xiII, xiI) * f_prod(ctx, etaI, etaII) /
                          (f_prod(ctx, wbar, xiI) * f_prod(ctx, etaI, wbar)) *
                          izergin_kr(ctx, wbar, xiI) * izergin_kl(ctx, etaI, wbar);
                push(std::move(coeff), etaII, xiII,
                     detail::tag_indices("etaI", pe.parts[0]) + "|" +
                         detail::tag_indices("xiI", px.parts[0]));
            }
        return res;
    }

    if (entry.i == 1 && entry.j == 1) {
        for (const auto& pe : enumerate_partitions(eta.size(), {n, a}))
            for (const auto& px : enumerate_partitions(xi.size(), {n, b})) {
                SpectralSet<F> etaI = eta.subset(pe.parts[0]);
                SpectralSet<F> etaII = eta.subset(pe.parts[1]);
                SpectralSet<F> xiI = xi.subset(px.parts[0]);
                SpectralSet<F> xiII = xi.subset(px.parts[1]);
                F coeff = lam2_w * chain.r1_set(etaI) / f_prod(ctx, xiII, etaI) *
                          f_prod(ctx, xiII, xiI) * f_prod(ctx, etaII, etaI) /
                          (f_prod(ctx, wbar, xiI) * f_prod(ctx, xiI, etaI)) *
                          izergin_kr(ctx, wbar, xiI) * izergin_kr(ctx, xiI, etaI);
                push(std::move(coeff), etaII, xiII,
                     detail::tag_indices("etaI", pe.parts[0]) + "|" +
                         detail::tag_indices("xiI", px.parts[0]));
            }
        return res;
    }

    if (entry.i == 3 && entry.j == 3) {
        for (const auto& pe : enumerate_partitions(eta.size(), {n, a}))
            for (const auto& px : enumerate_partitions(xi.size(), {n, b})) {
                SpectralSet<F> etaI = eta.subset(pe.parts[0]);
                SpectralSet<F> etaII = eta.subset(pe.parts[1]);
                SpectralSet<F> xiI = xi.subset(px.parts[0]);
                SpectralSet<F> xiII = xi.subset(px.parts[1]);
                F coeff = lam2_w * chain.r3_set(xiI) / f_prod(ctx, xiI, etaII) *
                          f_prod(ctx, xiI, xiII) * f_prod(ctx, etaI, etaII) /
                          (f_prod(ctx, xiI, etaI) * f_prod(ctx, etaI, wbar)) *
                          izergin_kl(ctx, etaI, wbar) * izergin_kl(ctx, xiI, etaI);
                push(std::move(coeff), etaII, xiII,
                     detail::tag_indices("etaI", pe.parts[0]) + "|" +
                         detail::tag_indices("xiI", px.parts[0]));
            }
        return res;
    }

    if (entry.i == 2 && entry.j == 1) {
        if (a - n < 0) return res;
        for (const auto& pe : enumerate_partitions(eta.size(), {n, n, a - n}))
            for (const auto& px : enumerate_partitions(xi.size(), {n, b})) {
                SpectralSet<F> etaI = eta.subset(pe.parts[0]);
                SpectralSet<F> etaII = eta.subset(pe.parts[1]);
                SpectralSet<F> etaIII = eta.subset(pe.parts[2]);
                SpectralSet<F> xiI = xi.subset(px.parts[0]);
                SpectralSet<F> xiII = xi.subset(px.parts[1]);
                F coeff = lam2_w * chain.r1_set(etaI) * f_prod(ctx, etaII, etaI) *
                          f_prod(ctx, etaII, etaIII) * f_prod(ctx, etaIII, etaI) *
                          f_prod(ctx, xiII, xiI) /
                          (f_prod(ctx, xi, etaI) * f_prod(ctx, wbar, xiI) *
                           f_prod(ctx, etaII, wbar)) *
                          izergin_kl(ctx, etaII, wbar) * izergin_kr(ctx, xiI, etaI) *
                          izergin_kr(ctx, wbar, xiI);
                push(std::move(coeff), etaIII, xiII,
                     detail::tag_indices("etaI", pe.parts[0]) + "|" +
                         detail::tag_indices("etaII", pe.parts[1]) + "|" +
                         detail::tag_indices("xiI", px.parts[0]));
            }
        return res;
    }

    if (entry.i == 3 && entry.j == 2) {
        if (b - n < 0) return res;
        for (const auto& px : enumerate_partitions(xi.size(), {n, n, b - n}))
            for (const auto& pe : enumerate_partitions(eta.size(), {n, a})) {
                SpectralSet<F> xiI = xi.subset(px.parts[0]);
                SpectralSet<F> xiII = xi.subset(px.parts[1]);
                SpectralSet<F> xiIII = xi.subset(px.parts[2]);
                SpectralSet<F> etaI = eta.subset(pe.parts[0]);
                SpectralSet<F> etaII = eta.subset(pe.parts[1]);
                F coeff = lam2_w * chain.r3_set(xiI) * f_prod(ctx, xiI, xiII) *
                          f_prod(ctx, xiI, xiIII) * f_prod(ctx, xiIII, xiII) *
                          f_prod(ctx, etaI, etaII) /
                          (f_prod(ctx, xiI, eta) * f_prod(ctx, etaI, wbar) *
                           f_prod(ctx, wbar, xiII)) *
                          izergin_kl(ctx, etaI, wbar) * izergin_kl(ctx, xiI, etaI) *
                          izergin_kr(ctx, wbar, xiII);
                push(std::move(coeff), etaII, xiIII,
                     detail::tag_indices("xiI", px.parts[0]) + "|" +
                         detail::tag_indices("xiII", px.parts[1]) + "|" +
                         detail::tag_indices("etaI", pe.parts[0]));
            }
        return res;
    }

    if (entry.i == 3 && entry.j == 1) {
        if (a - n < 0 || b - n < 0) return res;
        for (const auto& px : enumerate_partitions(xi.size(), {n, n, b - n}))
            for (const auto& pe : enumerate_partitions(eta.size(), {n, n, a - n})) {
                SpectralSet<F> xiI = xi.subset(px.parts[0]);
                SpectralSet<F> xiII = xi.subset(px.parts[1]);
                SpectralSet<F> xiIII = xi.subset(px.parts[2]);
                SpectralSet<F> etaI = eta.subset(pe.parts[0]);
                SpectralSet<F> etaII = eta.subset(pe.parts[1]);
                SpectralSet<F> etaIII = eta.subset(pe.parts[2]);
                F numer = lam2_w * chain.r1_set(etaII) * chain.r3_set(xiI) *
                          izergin_kl(ctx, xiI, etaI) * izergin_kr(ctx, xiII, etaII) *
                          izergin_kl(ctx, etaI, wbar) * izergin_kr(ctx, wbar, xiII) *
                          f_prod(ctx, etaI, etaII) * f_prod(ctx, etaI, etaIII) *
                          f_prod(ctx, etaIII, etaII) * f_prod(ctx, xiI, xiII) *
                          f_prod(ctx, xiI, xiIII) * f_prod(ctx, xiIII, xiII);
                F den_by_xi1 = f_prod(ctx, xiI, eta) * f_prod(ctx, xiIII, etaII) *
                               f_prod(ctx, xiII, etaII) * f_prod(ctx, etaI, wbar) *
                               f_prod(ctx, wbar, xiII);
                F den_by_eta2 = f_prod(ctx, xi, etaII) * f_prod(ctx, xiI, etaI) *
                                f_prod(ctx, xiI, etaIII) * f_prod(ctx, etaI, wbar) *
                                f_prod(ctx, wbar, xiII);
                res.act31_denominators.emplace_back(den_by_xi1, den_by_eta2);
                push(numer / den_by_xi1, etaIII, xiIII,
                     detail::tag_indices("xiI", px.parts[0]) + "|" +
                         detail::tag_indices("xiII", px.parts[1]) + "|" +
                         detail::tag_indices("etaI", pe.parts[0]) + "|" +
                         detail::tag_indices("etaII", pe.parts[1]));
            }
        return res;
    }

    throw ConfigError("act_multiple: unknown entry " + entry.to_string());
}

// Sum of coeff * B(label) over all terms.
template <class F>
Vec<F> evaluate_result(const ActionResult<F>& res, MonodromyCache<F>& cache) {
    Vec<F> acc = zero_vec<F>(cache.chain().dim());
    for (const auto& term : res.terms)
        acc = vec_add(acc, vec_scale(build_bethe(term.label, cache), term.coeff));
    return acc;
}

// ---- single-action resolved forms ----

namespace detail {

template <class F>
F k1r(const FieldCtx<F>& ctx, const F& x, const F& y) {
    return y * g_fun(ctx, x, y);
}

template <class F>
F k1l(const FieldCtx<F>& ctx, const F& x, const F& y) {
    return x * g_fun(ctx, x, y);
}

} // namespace detail

// Manifestly regular single-action sums; for the lower-triangular entries
// the intermediate T_11 / T_12 pieces are expanded with the already
// resolved diagonal and upper actions.
template <class F>
ActionResult<F> act_single_resolved(const ChainSpec<F>& chain, Entry entry,
                                    const ActionParam<F>& wp, const BetheLabel<F>& label) {
    const FieldCtx<F>& ctx = chain.ctx;
    const int a = label.a();
    const int b = label.b();
    const F& w = wp.bare;
    const SpectralSet<F>& us = label.u;
    const SpectralSet<F>& vs = label.v;
    F lam2 = chain.lambda2(w);

    ActionResult<F> res;
    res.entry = entry;
    res.n = 1;
    auto push = [&](F coeff, SpectralSet<F> nu, SpectralSet<F> nv, std::string tag) {
        res.terms.push_back(
            ActionTerm<F>{std::move(coeff), BetheLabel<F>{std::move(nu), std::move(nv)},
                          std::move(tag)});
    };

    if (entry.i == 1 && entry.j == 3) {
        push(lam2, us.with_appended(wp.eta), vs.with_appended(wp.xi), "direct");
        return res;
    }

    if (entry.i == 1 && entry.j == 2) {
        push(lam2 * f_prod(ctx, vs, w), us.with_appended(wp.eta), vs, "plain");
        for (int i = 0; i < b; ++i) {
            SpectralSet<F> vrest = vs.removed(i);
            push(lam2 * detail::k1r(ctx, w, vs[i]) * f_prod(ctx, vrest, vs[i]),
                 us.with_appended(wp.eta), vrest.with_appended(wp.xi), "swap v" + std::to_string(i));
        }
        return res;
    }

    if (entry.i == 2 && entry.j == 3) {
        push(lam2 * f_prod(ctx, w, us), us, vs.with_appended(wp.xi), "plain");
        for (int j = 0; j < a; ++j) {
            SpectralSet<F> urest = us.removed(j);
            push(lam2 * detail::k1l(ctx, us[j], w) * f_prod(ctx, us[j], urest),
                 urest.with_appended(wp.eta), vs.with_appended(wp.xi), "swap u" + std::to_string(j));
        }
        return res;
    }

    if (entry.i == 2 && entry.j == 2) {
        push(lam2 * f_prod(ctx, w, us) * f_prod(ctx, vs, w), us, vs, "diag");
        for (int i = 0; i < b; ++i) {
            SpectralSet<F> vrest = vs.removed(i);
            push(lam2 * f_prod(ctx, w, us) * detail::k1r(ctx, w, vs[i]) *
                     f_prod(ctx, vrest, vs[i]),
                 us, vrest.with_appended(wp.xi), "swap v" + std::to_string(i));
        }
        for (int j = 0; j < a; ++j) {
            SpectralSet<F> urest = us.removed(j);
            push(lam2 * f_prod(ctx, vs, w) * detail::k1l(ctx, us[j], w) *
                     f_prod(ctx, us[j], urest),
                 urest.with_appended(wp.eta), vs, "swap u" + std::to_string(j));
        }
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < a; ++j) {
                SpectralSet<F> vrest = vs.removed(i);
                SpectralSet<F> urest = us.removed(j);
                push(lam2 * detail::k1l(ctx, us[j], w) * detail::k1r(ctx, w, vs[i]) *
                         f_prod(ctx, vrest, vs[i]) * f_prod(ctx, us[j], urest),
                     urest.with_appended(wp.eta), vrest.with_appended(wp.xi),
                     "swap u" + std::to_string(j) + " v" + std::to_string(i));
            }
        return res;
    }

    if (entry.i == 1 && entry.j == 1) {
        push(lam2 * chain.r1(w) * f_prod(ctx, us, w), us, vs, "diag");
        for (int j = 0; j < a; ++j) {
            SpectralSet<F> urest = us.removed(j);
            push(lam2 * chain.r1(us[j]) * detail::k1r(ctx, w, us[j]) *
                     f_prod(ctx, urest, us[j]) * f_prod(ctx, vs, w) / f_prod(ctx, vs, us[j]),
                 urest.with_appended(wp.eta), vs, "swap u" + std::to_string(j));
        }
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < a; ++j) {
                SpectralSet<F> vrest = vs.removed(i);
                SpectralSet<F> urest = us.removed(j);
                push(lam2 * chain.r1(us[j]) * detail::k1r(ctx, w, vs[i]) *
                         detail::k1r(ctx, vs[i], us[j]) * f_prod(ctx, urest, us[j]) *
                         f_prod(ctx, vrest, vs[i]) / f_prod(ctx, vs, us[j]),
                     urest.with_appended(wp.eta), vrest.with_appended(wp.xi),
                     "swap u" + std::to_string(j) + " v" + std::to_string(i));
            }
        return res;
    }

    if (entry.i == 3 && entry.j == 3) {
        push(lam2 * chain.r3(w) * f_prod(ctx, w, vs), us, vs, "diag");
        for (int i = 0; i < b; ++i) {
            SpectralSet<F> vrest = vs.removed(i);
            push(lam2 * chain.r3(vs[i]) * detail::k1l(ctx, vs[i], w) *
                     f_prod(ctx, vs[i], vrest) * f_prod(ctx, w, us) / f_prod(ctx, vs[i], us),
                 us, vrest.with_appended(wp.xi), "swap v" + std::to_string(i));
        }
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < a; ++j) {
                SpectralSet<F> vrest = vs.removed(i);
                SpectralSet<F> urest = us.removed(j);
                push(lam2 * chain.r3(vs[i]) * detail::k1l(ctx, us[j], w) *
                         detail::k1l(ctx, vs[i], us[j]) * f_prod(ctx, vs[i], vrest) *
                         f_prod(ctx, us[j], urest) / f_prod(ctx, vs[i], us),
                     urest.with_appended(wp.eta), vrest.with_appended(wp.xi),
                     "swap u" + std::to_string(j) + " v" + std::to_string(i));
            }
        return res;
    }

    if (entry.i == 2 && entry.j == 1) {
        if (a == 0) return res;
        for (int j = 0; j < a; ++j) {
            SpectralSet<F> urest = us.removed(j);
            push(lam2 * detail::k1r(ctx, w, us[j]) * chain.r1(us[j]) * f_prod(ctx, w, urest) *
                     f_prod(ctx, urest, us[j]) * f_prod(ctx, vs, w) / f_prod(ctx, vs, us[j]),
                 urest, vs, "drop u" + std::to_string(j));
            for (int i = 0; i < b; ++i) {
                SpectralSet<F> vrest = vs.removed(i);
                push(lam2 * detail::k1r(ctx, w, vs[i]) * detail::k1r(ctx, vs[i], us[j]) *
                         chain.r1(us[j]) * f_prod(ctx, w, urest) * f_prod(ctx, urest, us[j]) *
                         f_prod(ctx, vrest, vs[i]) / f_prod(ctx, vs, us[j]),
                     urest, vrest.with_appended(wp.xi),
                     "drop u" + std::to_string(j) + " swap v" + std::to_string(i));
            }
            // T_11(w) acting on B^{a-1,b}(u_rest; v), already resolved
            F outer = detail::k1l(ctx, us[j], w) * f_prod(ctx, us[j], urest);
            ActionResult<F> inner =
                act_single_resolved(chain, Entry{1, 1}, wp, BetheLabel<F>{urest, vs});
            for (auto& t : inner.terms)
                push(outer * t.coeff, t.label.u, t.label.v,
                     "t11 u" + std::to_string(j) + ":" + t.partition_tag);
        }
        return res;
    }

    if (entry.i == 3 && entry.j == 2) {
        if (b == 0) return res;
        for (int i = 0; i < b; ++i) {
            SpectralSet<F> vrest = vs.removed(i);
            push(lam2 * detail::k1r(ctx, w, vs[i]) * chain.r3(w) * f_prod(ctx, w, vrest) *
                     f_prod(ctx, vrest, vs[i]),
                 us, vrest, "drop v" + std::to_string(i) + " r3w");
            push(lam2 * detail::k1l(ctx, vs[i], w) * chain.r3(vs[i]) *
                     f_prod(ctx, vs[i], vrest) * f_prod(ctx, vrest, w) * f_prod(ctx, w, us) /
                     f_prod(ctx, vs[i], us),
                 us, vrest, "drop v" + std::to_string(i) + " r3v");
            for (int i2 = 0; i2 < b; ++i2) {
                if (i2 == i) continue;
                SpectralSet<F> vrest2 = vs.removed2(i, i2);
                push(lam2 * detail::k1l(ctx, vs[i], w) * detail::k1r(ctx, w, vs[i2]) *
                         chain.r3(vs[i]) * f_prod(ctx, vs[i], vrest) *
                         f_prod(ctx, vrest2, vs[i2]) * f_prod(ctx, w, us) /
                         f_prod(ctx, vs[i], us),
                     us, vrest2.with_appended(wp.xi),
                     "drop v" + std::to_string(i) + " swap v" + std::to_string(i2));
            }
            // T_12(w) acting on B^{a-1,b-1}(u_rest; v_rest), already resolved
            for (int j = 0; j < a; ++j) {
                SpectralSet<F> urest = us.removed(j);
                F outer = detail::k1l(ctx, us[j], w) * detail::k1l(ctx, vs[i], us[j]) *
                          chain.r3(vs[i]) * f_prod(ctx, vs[i], vrest) *
                          f_prod(ctx, us[j], urest) / f_prod(ctx, vs[i], us);
                ActionResult<F> inner =
                    act_single_resolved(chain, Entry{1, 2}, wp, BetheLabel<F>{urest, vrest});
                for (auto& t : inner.terms)
                    push(outer * t.coeff, t.label.u, t.label.v,
                         "t12 u" + std::to_string(j) + " v" + std::to_string(i) + ":" +
                             t.partition_tag);
            }
        }
        return res;
    }

    if (entry.i == 3 && entry.j == 1) {
        if (a == 0 || b == 0) return res;
        for (int j = 0; j < a; ++j) {
            SpectralSet<F> urest = us.removed(j);
            for (int i = 0; i < b; ++i) {
                SpectralSet<F> vrest = vs.removed(i);
                push(lam2 * detail::k1r(ctx, vs[i], us[j]) * detail::k1r(ctx, w, vs[i]) *
                         chain.r1(us[j]) * chain.r3(w) * f_prod(ctx, urest, us[j]) *
                         f_prod(ctx, w, vrest) * f_prod(ctx, vrest, vs[i]) /
                         f_prod(ctx, vs, us[j]),
                     urest, vrest, "pair u" + std::to_string(j) + " v" + std::to_string(i) + " A");
                push(lam2 * detail::k1l(ctx, vs[i], w) * detail::k1r(ctx, w, us[j]) *
                         chain.r1(us[j]) * chain.r3(vs[i]) * f_prod(ctx, urest, us[j]) *
                         f_prod(ctx, w, urest) * f_prod(ctx, vs[i], vrest) *
                         f_prod(ctx, vrest, w) /
                         (f_fun(ctx, vs[i], us[j]) * f_prod(ctx, vs[i], urest) *
                          f_prod(ctx, vrest, us[j])),
                     urest, vrest, "pair u" + std::to_string(j) + " v" + std::to_string(i) + " B");
                for (int i2 = 0; i2 < b; ++i2) {
                    if (i2 == i) continue;
                    SpectralSet<F> vrest2 = vs.removed2(i, i2);
                    push(lam2 * detail::k1l(ctx, vs[i], w) * detail::k1r(ctx, vs[i2], us[j]) *
                             detail::k1r(ctx, w, vs[i2]) * chain.r1(us[j]) * chain.r3(vs[i]) *
                             f_prod(ctx, urest, us[j]) * f_prod(ctx, w, urest) *
                             f_prod(ctx, vs[i], vrest) * f_prod(ctx, vrest2, vs[i2]) /
                             (f_fun(ctx, vs[i], us[j]) * f_prod(ctx, vs[i], urest) *
                              f_prod(ctx, vrest, us[j])),
                         urest, vrest2.with_appended(wp.xi),
                         "pair u" + std::to_string(j) + " v" + std::to_string(i) + " swap v" +
                             std::to_string(i2));
                }
                // T_11(w) acting on B^{a-1,b-1}(u_rest; v_rest)
                F outer = detail::k1l(ctx, vs[i], us[j]) * detail::k1l(ctx, us[j], w) *
                          chain.r3(vs[i]) * f_prod(ctx, us[j], urest) *
                          f_prod(ctx, vs[i], vrest) / f_prod(ctx, vs[i], us);
                ActionResult<F> inner =
                    act_single_resolved(chain, Entry{1, 1}, wp, BetheLabel<F>{urest, vrest});
                for (auto& t : inner.terms)
                    push(outer * t.coeff, t.label.u, t.label.v,
                         "t11 u" + std::to_string(j) + " v" + std::to_string(i) + ":" +
                             t.partition_tag);
            }
        }
        return res;
    }

    throw ConfigError("act_single_resolved: unknown entry " + entry.to_string());
}

// tau(w; u, v) = lambda_1(w) f(u,w) + lambda_2(w) f(w,u) f(v,w) + lambda_3(w) f(w,v)
template <class F>
F transfer_eigenvalue(const ChainSpec<F>& chain, const F& w, const SpectralSet<F>& us,
                      const SpectralSet<F>& vs) {
    const FieldCtx<F>& ctx = chain.ctx;
    return chain.lambda1(w) * f_prod(ctx, us, w) +
           chain.lambda2(w) * f_prod(ctx, w, us) * f_prod(ctx, vs, w) +
           chain.lambda3(w) * f_prod(ctx, w, vs);
}

// Residuals of the two Bethe-equation families; exactly zero on shell.
template <class F>
std::vector<F> bethe_residuals(const ChainSpec<F>& chain, const SpectralSet<F>& us,
                               const SpectralSet<F>& vs) {
    const FieldCtx<F>& ctx = chain.ctx;
    std::vector<F> out;
    for (int j = 0; j < us.size(); ++j) {
        SpectralSet<F> urest = us.removed(j);
        F rhs = f_prod(ctx, us[j], urest) / f_prod(ctx, urest, us[j]) * f_prod(ctx, vs, us[j]);
        out.push_back(chain.r1(us[j]) - rhs);
    }
    for (int i = 0; i < vs.size(); ++i) {
        SpectralSet<F> vrest = vs.removed(i);
        F rhs = f_prod(ctx, vrest, vs[i]) / f_prod(ctx, vs[i], vrest) * f_prod(ctx, vs[i], us);
        out.push_back(chain.r3(vs[i]) - rhs);
    }
    return out;
}

// ---- regulated evaluation pipeline ----

// Two fixed multipliers per action parameter: the xi-derived copy gets
// (1 + cxi eps), the eta-derived copy (1 + ceta eps).  Re-running with the
// alternate plan checks direction independence of the limit.
struct RegulatorPlan {
    std::vector<Rational> cxi;
    std::vector<Rational> ceta;

    static RegulatorPlan standard(int n) {
        RegulatorPlan p;
        for (int m = 0; m < n; ++m) {
            p.cxi.emplace_back(2 * m + 1);
            p.ceta.emplace_back(2 * m + 2);
        }
        return p;
    }

    static RegulatorPlan alternate(int n) {
        RegulatorPlan p;
        for (int m = 0; m < n; ++m) {
            p.cxi.emplace_back(-(3 * m + 2));
            p.ceta.emplace_back(5 * m + 3);
        }
        return p;
    }
};

inline SpectralSet<RatFunc> lift_set(const SpectralSet<Rational>& s) {
    std::vector<RatFunc> r;
    r.reserve(s.size());
    for (const auto& x : s) r.emplace_back(x);
    return SpectralSet<RatFunc>(std::move(r));
}

inline ChainSpec<RatFunc> lift_chain(const ChainSpec<Rational>& chain) {
    ChainSpec<RatFunc> out;
    out.sites = chain.sites;
    out.z = lift_set(chain.z);
    out.ctx = FieldCtx<RatFunc>::make(RatFunc(chain.ctx.q));
    out.twist = RatFunc(chain.twist);
    return out;
}

inline BetheLabel<RatFunc> lift_label(const BetheLabel<Rational>& label) {
    return BetheLabel<RatFunc>{lift_set(label.u), lift_set(label.v)};
}

inline std::vector<ActionParam<RatFunc>> regulated_params(const std::vector<Rational>& w,
                                                          const RegulatorPlan& plan) {
    if (plan.cxi.size() < w.size() || plan.ceta.size() < w.size())
        throw ConfigError("regulated_params: plan shorter than w");
    std::vector<ActionParam<RatFunc>> out;
    RatFunc eps = RatFunc::epsilon();
    for (size_t m = 0; m < w.size(); ++m) {
        if (plan.cxi[m] == plan.ceta[m])
            throw ConfigError("regulated_params: coincident multipliers");
        RatFunc bare(w[m]);
        out.push_back(ActionParam<RatFunc>{bare, bare * (RatFunc(1) + RatFunc(plan.cxi[m]) * eps),
                                           bare * (RatFunc(1) + RatFunc(plan.ceta[m]) * eps)});
    }
    return out;
}

inline Vec<Rational> eval_at_zero(const Vec<RatFunc>& v) {
    Vec<Rational> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.eval_at_zero());
    return out;
}

// Full pipeline: act in the regulated field, sum every term, take the
// eps -> 0 limit of the summed vector.
inline Vec<Rational> regulated_action_vector(const ChainSpec<Rational>& chain, Entry entry,
                                             const std::vector<Rational>& w,
                                             const BetheLabel<Rational>& label,
                                             const RegulatorPlan& plan, bool resolved = false) {
    ChainSpec<RatFunc> rchain = lift_chain(chain);
    MonodromyCache<RatFunc> cache(rchain);
    auto params = regulated_params(w, plan);
    BetheLabel<RatFunc> rlabel = lift_label(label);
    ActionResult<RatFunc> res;
    if (resolved) {
        if (w.size() != 1) throw ConfigError("resolved action needs n = 1");
        res = act_single_resolved(rchain, entry, params[0], rlabel);
    } else {
        res = act_multiple(rchain, entry, params, rlabel);
    }
    return eval_at_zero(evaluate_result(res, cache));
}

// Sequential n = 1 actions (w[0] first, then w[1], ...), one joint limit at
// the end; the induction cross-check against the n-fold formula.
inline Vec<Rational> regulated_sequential_action_vector(const ChainSpec<Rational>& chain,
                                                        Entry entry,
                                                        const std::vector<Rational>& w,
                                                        const BetheLabel<Rational>& label,
                                                        const RegulatorPlan& plan) {
    ChainSpec<RatFunc> rchain = lift_chain(chain);
    MonodromyCache<RatFunc> cache(rchain);
    auto params = regulated_params(w, plan);
    std::vector<ActionTerm<RatFunc>> current;
    current.push_back(ActionTerm<RatFunc>{RatFunc(1), lift_label(label), ""});
    for (size_t m = 0; m < params.size(); ++m) {
        std::vector<ActionTerm<RatFunc>> next;
        for (const auto& t : current) {
            ActionResult<RatFunc> step = act_multiple(rchain, entry, {params[m]}, t.label);
            for (auto& s : step.terms)
                next.push_back(ActionTerm<RatFunc>{t.coeff * s.coeff, std::move(s.label),
                                                   t.partition_tag + ";" + s.partition_tag});
        }
        current = std::move(next);
    }
    Vec<RatFunc> acc = zero_vec<RatFunc>(rchain.dim());
    for (const auto& t : current)
        acc = vec_add(acc, vec_scale(build_bethe(t.label, cache), t.coeff));
    return eval_at_zero(acc);
}

} // namespace bgl3
