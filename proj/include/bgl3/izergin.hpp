#pragma once

#include <string>
#include <vector>

#include "bgl3/matrix.hpp"
#include "bgl3/regulated.hpp"
#include "bgl3/setcalc.hpp"

namespace bgl3 {

// K_k(x|y): prefactor prod_{i,j}(q x_i - q^{-1} y_j) over the two
// Vandermonde-type products, times det[ (q-q^{-1}) / ((x_i-y_j)(q x_i - q^{-1} y_j)) ].
// K_0 = 1 by convention.  The row factor prod_j (q x_i - q^{-1} y_j) is
// folded into row i of the determinant, so K evaluates at the
// q x_i = q^{-1} y_j loci where it is finite (the reduction points).
// Evaluated by Gaussian elimination with exact division; the first nonzero
// pivot in column order keeps it deterministic.
template <class F>
F izergin_k(const FieldCtx<F>& ctx, const SpectralSet<F>& xs, const SpectralSet<F>& ys) {
    if (xs.size() != ys.size()) throw SizeMismatchError("izergin_k: #x != #y");
    const int k = xs.size();
    if (k == 0) return FieldTraits<F>::one();
    F pref = FieldTraits<F>::one();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            F dx = xs[i] - xs[j];
            F dy = ys[j] - ys[i];
            if (FieldTraits<F>::is_zero(dx)) throw PoleError("izergin_k: coincident x arguments");
            if (FieldTraits<F>::is_zero(dy)) throw PoleError("izergin_k: coincident y arguments");
            pref = pref / (dx * dy);
        }
    Mat<F> m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            F d = xs[i] - ys[j];
            if (FieldTraits<F>::is_zero(d)) throw PoleError("izergin_k: x_i = y_j");
            F row = ctx.kappa;
            for (int j2 = 0; j2 < k; ++j2) {
                if (j2 == j) continue;
                row = row * (ctx.q * xs[i] - ctx.qinv * ys[j2]);
            }
            m(i, j) = row / d;
        }
    // determinant by elimination
    F det = FieldTraits<F>::one();
    bool negate = false;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (!FieldTraits<F>::is_zero(m(r, col))) {
                pivot = r;
                break;
            }
        if (pivot < 0) return FieldTraits<F>::zero();
        if (pivot != col) {
            for (int c = col; c < k; ++c) std::swap(m(pivot, c), m(col, c));
            negate = !negate;
        }
        det = det * m(col, col);
        for (int r = col + 1; r < k; ++r) {
            if (FieldTraits<F>::is_zero(m(r, col))) continue;
            F factor = m(r, col) / m(col, col);
            for (int c = col; c < k; ++c) m(r, c) = m(r, c) - factor * m(col, c);
        }
    }
    if (negate) det = -det;
    return pref * det;
}

template <class F>
F izergin_kl(const FieldCtx<F>& ctx, const SpectralSet<F>& xs, const SpectralSet<F>& ys) {
    F acc = izergin_k(ctx, xs, ys);
    for (const auto& x : xs) acc = acc * x;
    return acc;
}

template <class F>
F izergin_kr(const FieldCtx<F>& ctx, const SpectralSet<F>& xs, const SpectralSet<F>& ys) {
    F acc = izergin_k(ctx, xs, ys);
    for (const auto& y : ys) acc = acc * y;
    return acc;
}

// ---- determinant identity checks, all exact ----

template <class F>
bool check_izergin_initial(const FieldCtx<F>& ctx, const F& x, const F& y) {
    SpectralSet<F> xs({x}), ys({y});
    return izergin_k(ctx, xs, ys) == g_fun(ctx, x, y);
}

// K(alpha x | alpha y) = alpha^{-k} K(x|y)
template <class F>
bool check_izergin_rescaling(const FieldCtx<F>& ctx, const SpectralSet<F>& xs,
                             const SpectralSet<F>& ys, const F& alpha) {
    F lhs = izergin_k(ctx, xs.scaled(alpha), ys.scaled(alpha));
    F rhs = izergin_k(ctx, xs, ys);
    for (int i = 0; i < xs.size(); ++i) rhs = rhs / alpha;
    return lhs == rhs;
}

// K(x,z q^{-2} | y,z) = -(q/z) K(x|y)  and  K(x,z | y,z q^2) = -1/(q z) K(x|y);
// the appended sets on the left have one more element than the right.
template <class F>
bool check_izergin_reduction(const FieldCtx<F>& ctx, const SpectralSet<F>& xs,
                             const SpectralSet<F>& ys, const F& z) {
    F base = izergin_k(ctx, xs, ys);
    F lhs1 = izergin_k(ctx, xs.with_appended(ctx.qinv * ctx.qinv * z), ys.with_appended(z));
    F rhs1 = -(ctx.q / z) * base;
    F lhs2 = izergin_k(ctx, xs.with_appended(z), ys.with_appended(ctx.q * ctx.q * z));
    F rhs2 = -(FieldTraits<F>::one() / (ctx.q * z)) * base;
    return lhs1 == rhs1 && lhs2 == rhs2;
}

// K(x q^{-2}|y) = (-q)^k f^{-1}(y,x) K(y|x)  and  K(x|y q^2) = (-q)^{-k} f^{-1}(y,x) K(y|x)
template <class F>
bool check_izergin_inverse_order(const FieldCtx<F>& ctx, const SpectralSet<F>& xs,
                                 const SpectralSet<F>& ys) {
    const long k = xs.size();
    F finv = FieldTraits<F>::one() / f_prod(ctx, ys, xs);
    F swapped = izergin_k(ctx, ys, xs);
    F lhs1 = izergin_k(ctx, xs.scaled(ctx.qinv * ctx.qinv), ys);
    F lhs2 = izergin_k(ctx, xs, ys.scaled(ctx.q * ctx.q));
    return lhs1 == ctx.neg_q_pow(k) * finv * swapped && lhs2 == ctx.neg_q_pow(-k) * finv * swapped;
}

// modified versions: K^(r)(x q^{-2}|y) = (-q)^k f^{-1}(y,x) K^(l)(y|x)  and
// K^(l)(x|y q^2) = (-q)^{-k} f^{-1}(y,x) K^(r)(y|x)
template <class F>
bool check_izergin_inverse_order_modified(const FieldCtx<F>& ctx, const SpectralSet<F>& xs,
                                          const SpectralSet<F>& ys) {
    const long k = xs.size();
    F finv = FieldTraits<F>::one() / f_prod(ctx, ys, xs);
    F lhs1 = izergin_kr(ctx, xs.scaled(ctx.qinv * ctx.qinv), ys);
    F rhs1 = ctx.neg_q_pow(k) * finv * izergin_kl(ctx, ys, xs);
    F lhs2 = izergin_kl(ctx, xs, ys.scaled(ctx.q * ctx.q));
    F rhs2 = ctx.neg_q_pow(-k) * finv * izergin_kr(ctx, ys, xs);
    return lhs1 == rhs1 && lhs2 == rhs2;
}

// K_k(x|y) minus g(x_k,y_k) f(y_k,y_rest) f(x_rest,x_k) K_{k-1}(x_rest|y_rest)
// stays regular as x_k -> y_k.  Checked in the regulated field at
// x_k = y_k (1 + eps).
inline bool check_izergin_residue(const FieldCtx<Rational>& ctx,
                                  const SpectralSet<Rational>& xs_rest,
                                  const SpectralSet<Rational>& ys) {
    const int k = ys.size();
    if (xs_rest.size() != k - 1) throw SizeMismatchError("check_izergin_residue: #x_rest != k-1");
    FieldCtx<RatFunc> rctx = FieldCtx<RatFunc>::make(RatFunc(ctx.q));
    std::vector<RatFunc> xr, yr;
    for (const auto& x : xs_rest) xr.emplace_back(x);
    for (const auto& y : ys) yr.emplace_back(y);
    RatFunc yk(ys[k - 1]);
    RatFunc xk = yk * (RatFunc(1) + RatFunc::epsilon());
    SpectralSet<RatFunc> xs_restR(xr), ysR(yr);
    SpectralSet<RatFunc> xsR = xs_restR.with_appended(xk);
    SpectralSet<RatFunc> ys_restR = ysR.removed(k - 1);
    RatFunc full = izergin_k(rctx, xsR, ysR);
    RatFunc singular = g_fun(rctx, xk, yk) * f_prod(rctx, yk, ys_restR) *
                       f_prod(rctx, xs_restR, xk) * izergin_k(rctx, xs_restR, ys_restR);
    RatFunc diff = full - singular;
    return diff.regular_at_zero();
}

struct SummationLemmaReport {
    bool plain_q_down = false; // sum = (-q)^{-m1} f(gamma,alpha) K({alpha q^{-2}, beta}|gamma)
    bool plain_q_up = false;   // sum = (-q)^{m2} f(beta,gamma) K(gamma|{alpha, beta q^2})
    bool modified = false;     // K^(l)/K^(r) version of the q-up form
    bool ok() const { return plain_q_down && plain_q_up && modified; }
};

// Brute-force partition sum over gamma => {gamma_I, gamma_II} with
// #gamma_I = m1, compared against the three closed forms.
template <class F>
SummationLemmaReport summation_lemma_check(const FieldCtx<F>& ctx, const SpectralSet<F>& alpha,
                                           const SpectralSet<F>& beta,
                                           const SpectralSet<F>& gamma) {
    const int m1 = alpha.size();
    const int m2 = beta.size();
    if (gamma.size() != m1 + m2)
        throw SizeMismatchError("summation_lemma_check: #gamma != #alpha + #beta");
    F sum_plain = FieldTraits<F>::zero();
    F sum_mod = FieldTraits<F>::zero();
    for (const auto& p : enumerate_partitions(gamma.size(), {m1, m2})) {
        SpectralSet<F> gI = gamma.subset(p.parts[0]);
        SpectralSet<F> gII = gamma.subset(p.parts[1]);
        F ff = f_prod(ctx, gII, gI);
        sum_plain = sum_plain + izergin_k(ctx, gI, alpha) * izergin_k(ctx, beta, gII) * ff;
        sum_mod = sum_mod + izergin_kl(ctx, gI, alpha) * izergin_kr(ctx, beta, gII) * ff;
    }
    SpectralSet<F> alpha_down = alpha.scaled(ctx.qinv * ctx.qinv);
    SpectralSet<F> beta_up = beta.scaled(ctx.q * ctx.q);
    SummationLemmaReport rep;
    rep.plain_q_down = sum_plain == ctx.neg_q_pow(-m1) * f_prod(ctx, gamma, alpha) *
                                        izergin_k(ctx, disjoint_union(alpha_down, beta), gamma);
    rep.plain_q_up = sum_plain == ctx.neg_q_pow(m2) * f_prod(ctx, beta, gamma) *
                                      izergin_k(ctx, gamma, disjoint_union(alpha, beta_up));
    rep.modified = sum_mod == ctx.neg_q_pow(m2) * f_prod(ctx, beta, gamma) *
                                  izergin_kl(ctx, gamma, disjoint_union(alpha, beta_up));
    return rep;
}

// K^(r)_1(w|v) K^(r)_1(v|u) + K^(l)_1(u|w) K^(r)_1(w|v) + K^(l)_1(u|w) K^(l)_1(v|u) = 0
template <class F>
bool check_three_term_identity(const FieldCtx<F>& ctx, const F& u, const F& v, const F& w) {
    SpectralSet<F> su({u}), sv({v}), sw({w});
    F t1 = izergin_kr(ctx, sw, sv) * izergin_kr(ctx, sv, su);
    F t2 = izergin_kl(ctx, su, sw) * izergin_kr(ctx, sw, sv);
    F t3 = izergin_kl(ctx, su, sw) * izergin_kl(ctx, sv, su);
    return FieldTraits<F>::is_zero(t1 + t2 + t3);
}

} // namespace bgl3
