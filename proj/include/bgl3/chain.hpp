#pragma once

#include <vector>

#include "bgl3/rmatrix.hpp"

namespace bgl3 {

// Inhomogeneous chain of fundamental evaluation representations.  The
// monodromy is the ordered product over sites of R-matrices on
// auxiliary x site, site 1 applied first (rightmost factor).  The optional
// twist multiplies every site operator by diag(1,1,c) in the auxiliary
// space, which leaves the vacuum triangular and turns lambda_3 into c^N.
template <class F>
struct ChainSpec {
    int sites = 0;
    SpectralSet<F> z;
    FieldCtx<F> ctx;
    F twist = FieldTraits<F>::one();

    int dim() const {
        int d = 1;
        for (int i = 0; i < sites; ++i) d *= 3;
        return d;
    }

    bool twisted() const { return !(twist == FieldTraits<F>::one()); }

    F lambda1(const F& u) const {
        F acc = FieldTraits<F>::one();
        for (const auto& zi : z) acc = acc * f_fun(ctx, u, zi);
        return acc;
    }
    F lambda2(const F&) const { return FieldTraits<F>::one(); }
    F lambda3(const F&) const {
        F acc = FieldTraits<F>::one();
        for (int i = 0; i < sites; ++i) acc = acc * twist;
        return acc;
    }
    F r1(const F& u) const { return lambda1(u) / lambda2(u); }
    F r3(const F& u) const { return lambda3(u) / lambda2(u); }

    F lambda2_set(const SpectralSet<F>& s) const {
        F acc = FieldTraits<F>::one();
        for (const auto& x : s) acc = acc * lambda2(x);
        return acc;
    }
    F r1_set(const SpectralSet<F>& s) const {
        F acc = FieldTraits<F>::one();
        for (const auto& x : s) acc = acc * r1(x);
        return acc;
    }
    F r3_set(const SpectralSet<F>& s) const {
        F acc = FieldTraits<F>::one();
        for (const auto& x : s) acc = acc * r3(x);
        return acc;
    }
};

template <class F>
ChainSpec<F> make_chain(int sites, std::vector<F> z, const FieldCtx<F>& ctx,
                        F twist = FieldTraits<F>::one()) {
    ChainSpec<F> c{sites, SpectralSet<F>(std::move(z)), ctx, std::move(twist)};
    if (static_cast<int>(c.z.size()) != sites)
        throw SizeMismatchError("ChainSpec: inhomogeneity count != sites");
    if (!c.z.pairwise_distinct()) throw ConfigError("ChainSpec: coincident inhomogeneities");
    return c;
}

// T_ij(u) blocks from the auxiliary-space indices of R_{0N}(u,z_N) ... R_{01}(u,z_1).
template <class F>
Monodromy<F> build_monodromy(const ChainSpec<F>& chain, const F& u) {
    Monodromy<F> T;
    T.sites = chain.sites;
    T.arg = u;
    // start from the identity on a zero-site chain
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            T.T(i, j) = (i == j) ? Mat<F>::identity(1) : Mat<F>(1, 1);
    for (int site = 1; site <= chain.sites; ++site) {
        RMatrix<F> R = build_r_matrix(chain.ctx, u, chain.z[site - 1]);
        std::array<Mat<F>, 9> next;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                int d = T.blocks[0].rows() * 3;
                Mat<F> acc(d, d);
                for (int m = 1; m <= 3; ++m) {
                    Mat<F> site_blk = R.site_block(i, m);
                    if (chain.twisted() && i == 3) site_blk = site_blk.scaled(chain.twist);
                    if (site_blk.is_zero() || T.T(m, j).is_zero()) continue;
                    acc = acc + kron(T.T(m, j), site_blk);
                }
                next[pair_index(i, j)] = std::move(acc);
            }
        T.blocks = std::move(next);
    }
    return T;
}

// |0> is the basis state with every site in state 1; with site 1 as the
// most significant tensor factor this is coordinate 0.
template <class F>
Vec<F> vacuum(const ChainSpec<F>& chain) {
    Vec<F> v = zero_vec<F>(chain.dim());
    v[0] = FieldTraits<F>::one();
    return v;
}

template <class F>
Vec<F> dual_vacuum(const ChainSpec<F>& chain) {
    return vacuum(chain);
}

template <class F>
struct VacuumEigenvalues {
    F lambda1, lambda2, lambda3, r1, r3;
};

template <class F>
VacuumEigenvalues<F> vacuum_eigenvalues(const ChainSpec<F>& chain, const F& u) {
    return VacuumEigenvalues<F>{chain.lambda1(u), chain.lambda2(u), chain.lambda3(u), chain.r1(u),
                                chain.r3(u)};
}

struct VacuumReport {
    bool lower_annihilate = true;  // T_{i>j}(u)|0> = 0
    bool upper_annihilate = true;  // <0|T_{i<j}(u) = 0
    bool eigenvalues_match = true; // diagonal action matches the closed forms
    bool ok() const { return lower_annihilate && upper_annihilate && eigenvalues_match; }
};

template <class F>
VacuumReport check_vacuum(const ChainSpec<F>& chain, const F& u) {
    Monodromy<F> T = build_monodromy(chain, u);
    Vec<F> vac = vacuum(chain);
    Vec<F> dvac = dual_vacuum(chain);
    VacuumReport rep;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i > j && !vec_is_zero(T.T(i, j).apply(vac))) rep.lower_annihilate = false;
            if (i < j && !vec_is_zero(T.T(i, j).apply_left(dvac))) rep.upper_annihilate = false;
        }
    VacuumEigenvalues<F> lam = vacuum_eigenvalues(chain, u);
    const F* lams[3] = {&lam.lambda1, &lam.lambda2, &lam.lambda3};
    for (int i = 1; i <= 3; ++i) {
        Vec<F> got = T.T(i, i).apply(vac);
        Vec<F> want = vec_scale(vac, *lams[i - 1]);
        if (!(got == want)) rep.eigenvalues_match = false;
        Vec<F> got_dual = T.T(i, i).apply_left(dvac);
        if (!(got_dual == want)) rep.eigenvalues_match = false;
    }
    return rep;
}

} // namespace bgl3
