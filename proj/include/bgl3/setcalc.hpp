#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "bgl3/field.hpp"

namespace bgl3 {

// Ordered list of spectral parameters.  Order is fixed at construction and
// preserved by every derived set, which keeps all partition sums and
// reports reproducible.
template <class F>
class SpectralSet {
public:
    SpectralSet() = default;
    explicit SpectralSet(std::vector<F> elems) : e_(std::move(elems)) {}

    int size() const { return static_cast<int>(e_.size()); }
    bool empty() const { return e_.empty(); }
    const F& operator[](int i) const { return e_[i]; }
    const std::vector<F>& elements() const { return e_; }

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    bool contains(const F& x) const {
        for (const auto& y : e_)
            if (y == x) return true;
        return false;
    }

    bool pairwise_distinct() const {
        for (size_t i = 0; i < e_.size(); ++i)
            for (size_t j = i + 1; j < e_.size(); ++j)
                if (e_[i] == e_[j]) return false;
        return true;
    }

    // set minus one element, order preserved
    SpectralSet removed(int i) const {
        std::vector<F> r;
        r.reserve(e_.size() - 1);
        for (int k = 0; k < size(); ++k)
            if (k != i) r.push_back(e_[k]);
        return SpectralSet(std::move(r));
    }

    SpectralSet removed2(int i, int j) const {
        std::vector<F> r;
        r.reserve(e_.size() - 2);
        for (int k = 0; k < size(); ++k)
            if (k != i && k != j) r.push_back(e_[k]);
        return SpectralSet(std::move(r));
    }

    SpectralSet prefix(int count) const {
        return SpectralSet(std::vector<F>(e_.begin(), e_.begin() + count));
    }
    SpectralSet suffix(int from) const {
        return SpectralSet(std::vector<F>(e_.begin() + from, e_.end()));
    }

    SpectralSet subset(const std::vector<int>& idx) const {
        std::vector<F> r;
        r.reserve(idx.size());
        for (int i : idx) r.push_back(e_[i]);
        return SpectralSet(std::move(r));
    }

    SpectralSet with_appended(const F& x) const {
        std::vector<F> r = e_;
        r.push_back(x);
        return SpectralSet(std::move(r));
    }

    friend SpectralSet disjoint_union(const SpectralSet& a, const SpectralSet& b) {
        std::vector<F> r = a.e_;
        r.insert(r.end(), b.e_.begin(), b.e_.end());
        return SpectralSet(std::move(r));
    }

    SpectralSet scaled(const F& alpha) const {
        std::vector<F> r;
        r.reserve(e_.size());
        for (const auto& x : e_) r.push_back(alpha * x);
        return SpectralSet(std::move(r));
    }

    friend bool operator==(const SpectralSet& a, const SpectralSet& b) { return a.e_ == b.e_; }

private:
    std::vector<F> e_;
};

// f(u,v) = (q u - q^{-1} v) / (u - v)
template <class F>
F f_fun(const FieldCtx<F>& ctx, const F& u, const F& v) {
    F d = u - v;
    if (FieldTraits<F>::is_zero(d)) throw PoleError("f(u,v): u = v");
    return (ctx.q * u - ctx.qinv * v) / d;
}

// g(u,v) = (q - q^{-1}) / (u - v)
template <class F>
F g_fun(const FieldCtx<F>& ctx, const F& u, const F& v) {
    F d = u - v;
    if (FieldTraits<F>::is_zero(d)) throw PoleError("g(u,v): u = v");
    return ctx.kappa / d;
}

// Double-product convention: prod over x in xs, y in ys of f(x,y); an empty
// set on either side gives 1.
template <class F>
F f_prod(const FieldCtx<F>& ctx, const SpectralSet<F>& xs, const SpectralSet<F>& ys) {
    F acc = FieldTraits<F>::one();
    for (const auto& x : xs)
        for (const auto& y : ys) acc = acc * f_fun(ctx, x, y);
    return acc;
}

template <class F>
F g_prod(const FieldCtx<F>& ctx, const SpectralSet<F>& xs, const SpectralSet<F>& ys) {
    F acc = FieldTraits<F>::one();
    for (const auto& x : xs)
        for (const auto& y : ys) acc = acc * g_fun(ctx, x, y);
    return acc;
}

template <class F>
F f_prod(const FieldCtx<F>& ctx, const F& x, const SpectralSet<F>& ys) {
    return f_prod(ctx, SpectralSet<F>({x}), ys);
}

template <class F>
F f_prod(const FieldCtx<F>& ctx, const SpectralSet<F>& xs, const F& y) {
    return f_prod(ctx, xs, SpectralSet<F>({y}));
}

// One assignment of source indices into labeled parts of prescribed sizes;
// order within each part inherits the source order.
struct PartitionIndices {
    std::vector<std::vector<int>> parts;
};

// Every assignment of {0,...,n-1} into labeled parts with the given sizes,
// exactly once, in lexicographic order of the per-element part labels.
inline std::vector<PartitionIndices> enumerate_partitions(int n, const std::vector<int>& sizes) {
    long total = std::accumulate(sizes.begin(), sizes.end(), 0L);
    if (total != n)
        throw SizeMismatchError("enumerate_partitions: sizes sum to " + std::to_string(total) +
                                ", set has " + std::to_string(n));
    std::vector<PartitionIndices> out;
    std::vector<int> remaining(sizes.begin(), sizes.end());
    std::vector<int> label(n, -1);
    struct Rec {
        int n;
        const std::vector<int>& sizes;
        std::vector<int>& remaining;
        std::vector<int>& label;
        std::vector<PartitionIndices>& out;
        void go(int i) {
            if (i == n) {
                PartitionIndices p;
                p.parts.resize(sizes.size());
                for (int k = 0; k < n; ++k) p.parts[label[k]].push_back(k);
                out.push_back(std::move(p));
                return;
            }
            for (size_t part = 0; part < sizes.size(); ++part) {
                if (remaining[part] == 0) continue;
                --remaining[part];
                label[i] = static_cast<int>(part);
                go(i + 1);
                ++remaining[part];
            }
        }
    } rec{n, sizes, remaining, label, out};
    rec.go(0);
    return out;
}

template <class F>
std::vector<SpectralSet<F>> partition_parts(const SpectralSet<F>& s, const PartitionIndices& p) {
    std::vector<SpectralSet<F>> parts;
    parts.reserve(p.parts.size());
    for (const auto& idx : p.parts) parts.push_back(s.subset(idx));
    return parts;
}

} // namespace bgl3
