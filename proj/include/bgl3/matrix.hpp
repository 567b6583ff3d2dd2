#pragma once

#include <vector>

#include "bgl3/field.hpp"

namespace bgl3 {

template <class F>
using Vec = std::vector<F>;

template <class F>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, FieldTraits<F>::zero()) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = FieldTraits<F>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& operator()(int r, int c) { return a_[r * cols_ + c]; }
    const F& operator()(int r, int c) const { return a_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!FieldTraits<F>::is_zero(x)) return false;
        return true;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        check_same(a, b);
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        check_same(a, b);
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw DimensionError("Mat: product dimension mismatch");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (FieldTraits<F>::is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (FieldTraits<F>::is_zero(b(k, j))) continue;
                    r(i, j) = r(i, j) + aik * b(k, j);
                }
            }
        return r;
    }

    Mat scaled(const F& s) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }

    Vec<F> apply(const Vec<F>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw DimensionError("Mat: apply size mismatch");
        Vec<F> y(rows_, FieldTraits<F>::zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const F& m = (*this)(i, j);
                if (FieldTraits<F>::is_zero(m) || FieldTraits<F>::is_zero(x[j])) continue;
                y[i] = y[i] + m * x[j];
            }
        return y;
    }

    // row vector times matrix
    Vec<F> apply_left(const Vec<F>& x) const {
        if (static_cast<int>(x.size()) != rows_) throw DimensionError("Mat: apply_left size mismatch");
        Vec<F> y(cols_, FieldTraits<F>::zero());
        for (int i = 0; i < rows_; ++i) {
            if (FieldTraits<F>::is_zero(x[i])) continue;
            for (int j = 0; j < cols_; ++j) {
                if (FieldTraits<F>::is_zero((*this)(i, j))) continue;
                y[j] = y[j] + x[i] * (*this)(i, j);
            }
        }
        return y;
    }

    friend Mat kron(const Mat& a, const Mat& b) {
        Mat r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                if (FieldTraits<F>::is_zero(a(i, j))) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l) {
                        if (FieldTraits<F>::is_zero(b(k, l))) continue;
                        r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
                    }
            }
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    static void check_same(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionError("Mat: shape mismatch");
    }

    int rows_, cols_;
    std::vector<F> a_;
};

template <class F>
Vec<F> vec_add(const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) throw DimensionError("Vec: size mismatch");
    Vec<F> r(a.size(), FieldTraits<F>::zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class F>
Vec<F> vec_sub(const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) throw DimensionError("Vec: size mismatch");
    Vec<F> r(a.size(), FieldTraits<F>::zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class F>
Vec<F> vec_scale(const Vec<F>& a, const F& s) {
    Vec<F> r = a;
    for (auto& x : r) x = x * s;
    return r;
}

template <class F>
bool vec_is_zero(const Vec<F>& a) {
    for (const auto& x : a)
        if (!FieldTraits<F>::is_zero(x)) return false;
    return true;
}

template <class F>
Vec<F> zero_vec(int n) {
    return Vec<F>(n, FieldTraits<F>::zero());
}

} // namespace bgl3
