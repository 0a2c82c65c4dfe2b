// Dense integer matrices with arbitrary-precision entries.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "corkal/errors.hpp"
#include "corkal/laurent.hpp"  // Int

namespace corkal {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ParseError("ragged matrix literal");
            for (long long v : r) a_.emplace_back(v);
        }
    }

    static IntMatrix identity(size_t n) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Int& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Int& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    IntMatrix transposed() const {
        IntMatrix m(cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
        return m;
    }

    bool is_zero() const {
        for (const Int& v : a_)
            if (v != 0) return false;
        return true;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in product");
        IntMatrix m(a.rows_, b.cols_);
        for (size_t r = 0; r < a.rows_; ++r)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Int& v = a.at(r, k);
                if (v == 0) continue;
                for (size_t c = 0; c < b.cols_; ++c) m.at(r, c) += v * b.at(k, c);
            }
        return m;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch");
        IntMatrix m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
        return m;
    }

    bool operator==(const IntMatrix&) const = default;

    void swap_rows(size_t i, size_t j) {
        for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(size_t i, size_t j) {
        for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }
    void negate_row(size_t i) {
        for (size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
    }
    void negate_col(size_t i) {
        for (size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
    }
    // row_i += k * row_j
    void add_row(size_t i, size_t j, const Int& k) {
        for (size_t c = 0; c < cols_; ++c) at(i, c) += k * at(j, c);
    }
    // col_i += k * col_j
    void add_col(size_t i, size_t j, const Int& k) {
        for (size_t r = 0; r < rows_; ++r) at(r, i) += k * at(r, j);
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Exact determinant over Z by fraction-free (Bareiss) elimination.
inline Int int_det(IntMatrix m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // exact by Sylvester's identity
            }
        prev = m.at(k, k);
    }
    return sign < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

}  // namespace corkal
