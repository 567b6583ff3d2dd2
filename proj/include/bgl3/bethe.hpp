#pragma once

#include <utility>
#include <vector>

#include "bgl3/chain.hpp"
#include "bgl3/izergin.hpp"

namespace bgl3 {

// Symbolic identification (a, b, u-set; v-set) of a Bethe vector.
template <class F>
struct BetheLabel {
    SpectralSet<F> u;
    SpectralSet<F> v;

    int a() const { return u.size(); }
    int b() const { return v.size(); }

    friend bool operator==(const BetheLabel& x, const BetheLabel& y) {
        return x.u == y.u && x.v == y.v;
    }
};

// Monodromy blocks are reused heavily across partition terms; arguments are
// compared exactly, the cache stays tiny.
template <class F>
class MonodromyCache {
public:
    explicit MonodromyCache(const ChainSpec<F>& chain) : chain_(chain) {}

    const Monodromy<F>& at(const F& arg) {
        for (const auto& e : entries_)
            if (e.first == arg) return e.second;
        entries_.emplace_back(arg, build_monodromy(chain_, arg));
        return entries_.back().second;
    }

    const ChainSpec<F>& chain() const { return chain_; }

private:
    const ChainSpec<F>& chain_;
    std::vector<std::pair<F, Monodromy<F>>> entries_;
};

// B^{a,b}(u;v) written through monodromy elements: the sum over partitions
// u => {u_I, u_II}, v => {v_I, v_II} with #u_I = #v_I = k of
//   K^(r)_k(v_I|u_I) / (lambda_2(u_II) lambda_2(v))
//   * f(v_II,v_I) f(u_I,u_II) / f(v,u) * T_13(v_I) T_23(v_II) T_12(u_II) |0>.
template <class F>
Vec<F> build_bethe(const BetheLabel<F>& label, MonodromyCache<F>& cache) {
    const ChainSpec<F>& chain = cache.chain();
    const FieldCtx<F>& ctx = chain.ctx;
    const int a = label.a();
    const int b = label.b();
    Vec<F> result = zero_vec<F>(chain.dim());
    F global = FieldTraits<F>::one() /
               (f_prod(ctx, label.v, label.u) * chain.lambda2_set(label.v));
    const int kmax = std::min(a, b);
    for (int k = 0; k <= kmax; ++k) {
        for (const auto& pu : enumerate_partitions(a, {k, a - k})) {
            SpectralSet<F> uI = label.u.subset(pu.parts[0]);
            SpectralSet<F> uII = label.u.subset(pu.parts[1]);
            for (const auto& pv : enumerate_partitions(b, {k, b - k})) {
                SpectralSet<F> vI = label.v.subset(pv.parts[0]);
                SpectralSet<F> vII = label.v.subset(pv.parts[1]);
                F coeff = global * izergin_kr(ctx, vI, uI) * f_prod(ctx, vII, vI) *
                          f_prod(ctx, uI, uII) / chain.lambda2_set(uII);
                Vec<F> term = vacuum(chain);
                for (const auto& x : uII) term = cache.at(x).T(1, 2).apply(term);
                for (const auto& x : vII) term = cache.at(x).T(2, 3).apply(term);
                for (const auto& x : vI) term = cache.at(x).T(1, 3).apply(term);
                result = vec_add(result, vec_scale(term, coeff));
            }
        }
    }
    return result;
}

// Dual form: K^(l)_k coefficients and <0| T_21(u_II) T_32(v_II) T_31(v_I),
// returned as a row vector.
template <class F>
Vec<F> build_dual_bethe(const BetheLabel<F>& label, MonodromyCache<F>& cache) {
    const ChainSpec<F>& chain = cache.chain();
    const FieldCtx<F>& ctx = chain.ctx;
    const int a = label.a();
    const int b = label.b();
    Vec<F> result = zero_vec<F>(chain.dim());
    F global = FieldTraits<F>::one() /
               (f_prod(ctx, label.v, label.u) * chain.lambda2_set(label.v));
    const int kmax = std::min(a, b);
    for (int k = 0; k <= kmax; ++k) {
        for (const auto& pu : enumerate_partitions(a, {k, a - k})) {
            SpectralSet<F> uI = label.u.subset(pu.parts[0]);
            SpectralSet<F> uII = label.u.subset(pu.parts[1]);
            for (const auto& pv : enumerate_partitions(b, {k, b - k})) {
                SpectralSet<F> vI = label.v.subset(pv.parts[0]);
                SpectralSet<F> vII = label.v.subset(pv.parts[1]);
                F coeff = global * izergin_kl(ctx, vI, uI) * f_prod(ctx, vII, vI) *
                          f_prod(ctx, uI, uII) / chain.lambda2_set(uII);
                Vec<F> term = dual_vacuum(chain);
                for (const auto& x : uII) term = cache.at(x).T(2, 1).apply_left(term);
                for (const auto& x : vII) term = cache.at(x).T(3, 2).apply_left(term);
                for (const auto& x : vI) term = cache.at(x).T(3, 1).apply_left(term);
                result = vec_add(result, vec_scale(term, coeff));
            }
        }
    }
    return result;
}

// Site-content census of a basis index: how many sites sit in states 1, 2, 3.
inline void basis_census(int index, int sites, int& ones, int& twos, int& threes) {
    ones = twos = threes = 0;
    for (int s = 0; s < sites; ++s) {
        int digit = index % 3;
        index /= 3;
        if (digit == 0) ++ones;
        else if (digit == 1) ++twos;
        else ++threes;
    }
}

// B^{a,b} lives entirely on basis states with (N-a) ones, (a-b) twos, b threes.
template <class F>
bool check_weight_support(const Vec<F>& vec, int sites, int a, int b) {
    for (size_t idx = 0; idx < vec.size(); ++idx) {
        if (FieldTraits<F>::is_zero(vec[idx])) continue;
        int ones, twos, threes;
        basis_census(static_cast<int>(idx), sites, ones, twos, threes);
        if (ones != sites - a || twos != a - b || threes != b) return false;
    }
    return true;
}

} // namespace bgl3
