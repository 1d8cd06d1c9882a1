#pragma once

// Sparse matrices over an exact scalar ring. Row-major: row(i) maps column
// index to a nonzero entry. Matrices are treated as immutable once built;
// the elimination codes copy into their own working storage.

#include "artin/rings.hpp"

#include <map>
#include <vector>

namespace artin {

template <class R>
class SparseMatrix {
  public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::map<int, R>& row(int i) const { return data_[i]; }

    void set(int i, int j, R v) {
        if (ring_traits<R>::is_zero(v))
            data_[i].erase(j);
        else
            data_[i][j] = std::move(v);
    }
    void add(int i, int j, const R& v) {
        if (ring_traits<R>::is_zero(v)) return;
        auto it = data_[i].find(j);
        if (it == data_[i].end()) {
            data_[i].emplace(j, v);
        } else {
            it->second += v;
            if (ring_traits<R>::is_zero(it->second)) data_[i].erase(it);
        }
    }
    R get(int i, int j) const {
        auto it = data_[i].find(j);
        return it == data_[i].end() ? R(0) : it->second;
    }

    size_t nnz() const {
        size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }
    bool is_zero() const { return nnz() == 0; }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        SparseMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (const auto& [k, va] : a.data_[i])
                for (const auto& [j, vb] : b.data_[k]) r.add(i, j, va * vb);
        return r;
    }
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
        SparseMatrix r = a;
        for (int i = 0; i < b.rows_; ++i)
            for (const auto& [j, v] : b.data_[i]) r.add(i, j, v);
        return r;
    }
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
        SparseMatrix r = a;
        for (int i = 0; i < b.rows_; ++i)
            for (const auto& [j, v] : b.data_[i]) r.add(i, j, -v);
        return r;
    }
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    static SparseMatrix identity(int n) {
        SparseMatrix r(n, n);
        for (int i = 0; i < n; ++i) r.set(i, i, R(1));
        return r;
    }

    SparseMatrix transposed() const {
        SparseMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[i]) r.data_[j].emplace(i, v);
        return r;
    }

    /// matrix * dense column vector
    std::vector<R> apply(const std::vector<R>& x) const {
        std::vector<R> y(rows_, R(0));
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[i]) y[i] += v * x[j];
        return y;
    }

    /// map entries into another ring
    template <class S, class Fn>
    SparseMatrix<S> map(Fn&& f) const {
        SparseMatrix<S> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[i]) r.set(i, j, f(v));
        return r;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, R>> data_;
};

} // namespace artin
