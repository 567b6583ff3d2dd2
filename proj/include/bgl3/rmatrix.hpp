#pragma once

#include <array>

#include "bgl3/matrix.hpp"
#include "bgl3/setcalc.hpp"

namespace bgl3 {

// Tensor index flattening for C^3 x C^3 pairs: (i,k) -> 3(i-1)+(k-1),
// 1-based labels, 0-based storage.  Fixed project-wide.
inline int pair_index(int i, int k) { return 3 * (i - 1) + (k - 1); }

// The 9x9 trigonometric R-matrix in multiplicative variables: diagonal
// f(u,v) on (ii,ii), 1 on (ij,ij) for i != j, u g(u,v) on ((i,j),(j,i)) and
// v g(u,v) on ((j,i),(i,j)) for i < j.
template <class F>
struct RMatrix {
    std::array<F, 81> e;
    F u, v;

    const F& at(int r, int c) const { return e[r * 9 + c]; }
    F& at(int r, int c) { return e[r * 9 + c]; }

    int nonzero_count() const {
        int n = 0;
        for (const auto& x : e)
            if (!FieldTraits<F>::is_zero(x)) ++n;
        return n;
    }

    // the 3x3 site-space block <a|_aux R |b>_aux
    Mat<F> site_block(int a, int b) const {
        Mat<F> m(3, 3);
        for (int s = 1; s <= 3; ++s)
            for (int t = 1; t <= 3; ++t) m(s - 1, t - 1) = at(pair_index(a, s), pair_index(b, t));
        return m;
    }

    Mat<F> as_mat() const {
        Mat<F> m(9, 9);
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c) m(r, c) = e[r * 9 + c];
        return m;
    }
};

template <class F>
RMatrix<F> build_r_matrix(const FieldCtx<F>& ctx, const F& u, const F& v) {
    if (FieldTraits<F>::is_zero(u - v)) throw PoleError("R(u,v): u = v");
    RMatrix<F> R;
    R.u = u;
    R.v = v;
    R.e.fill(FieldTraits<F>::zero());
    F f = f_fun(ctx, u, v);
    F g = g_fun(ctx, u, v);
    for (int i = 1; i <= 3; ++i) R.at(pair_index(i, i), pair_index(i, i)) = f;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            R.at(pair_index(i, j), pair_index(i, j)) = FieldTraits<F>::one();
            R.at(pair_index(j, i), pair_index(j, i)) = FieldTraits<F>::one();
            R.at(pair_index(i, j), pair_index(j, i)) = u * g;
            R.at(pair_index(j, i), pair_index(i, j)) = v * g;
        }
    return R;
}

template <class F>
struct Monodromy {
    int sites = 0;
    F arg;
    // blocks[pair_index(i,j)] = T_ij(arg), D x D with D = 3^sites
    std::array<Mat<F>, 9> blocks;

    int dim() const { return blocks[0].rows(); }
    const Mat<F>& T(int i, int j) const { return blocks[pair_index(i, j)]; }
    Mat<F>& T(int i, int j) { return blocks[pair_index(i, j)]; }

    Mat<F> transfer() const {
        return blocks[pair_index(1, 1)] + blocks[pair_index(2, 2)] + blocks[pair_index(3, 3)];
    }
};

struct RttReport {
    bool ok = true;
    int mismatched_blocks = 0;
    int checked_blocks = 0;
};

// Both sides of R(u,v) (T(u) ox 1) (1 ox T(v)) = (1 ox T(v)) (T(u) ox 1) R(u,v)
// as 81 operator blocks on the quantum space, compared entrywise.
template <class F>
RttReport check_rtt(const Monodromy<F>& Tu, const Monodromy<F>& Tv, const RMatrix<F>& R) {
    if (Tu.dim() != Tv.dim()) throw DimensionError("check_rtt: chains of different dimension");
    const int D = Tu.dim();
    // P[(e,f),(c,d)] = T_ec(u) T_fd(v);  Q[(a,b),(g,h)] = T_bh(v) T_ag(u)
    std::array<Mat<F>, 81> P;
    std::array<Mat<F>, 81> Q;
    auto idx4 = [](int r, int c) { return r * 9 + c; };
    for (int e = 1; e <= 3; ++e)
        for (int c = 1; c <= 3; ++c)
            for (int fq = 1; fq <= 3; ++fq)
                for (int d = 1; d <= 3; ++d) {
                    P[idx4(pair_index(e, fq), pair_index(c, d))] = Tu.T(e, c) * Tv.T(fq, d);
                    Q[idx4(pair_index(e, fq), pair_index(c, d))] = Tv.T(fq, d) * Tu.T(e, c);
                }
    RttReport rep;
    for (int rc = 0; rc < 9; ++rc)
        for (int cc = 0; cc < 9; ++cc) {
            Mat<F> lhs(D, D), rhs(D, D);
            for (int k = 0; k < 9; ++k) {
                if (!FieldTraits<F>::is_zero(R.e[rc * 9 + k]))
                    lhs = lhs + P[idx4(k, cc)].scaled(R.e[rc * 9 + k]);
                if (!FieldTraits<F>::is_zero(R.e[k * 9 + cc]))
                    rhs = rhs + Q[idx4(rc, k)].scaled(R.e[k * 9 + cc]);
            }
            ++rep.checked_blocks;
            if (!(lhs == rhs)) {
                rep.ok = false;
                ++rep.mismatched_blocks;
            }
        }
    return rep;
}

} // namespace bgl3
