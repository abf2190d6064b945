/*
   Copyright 2026 the taftnet authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "taftnet/matrix.hpp"

namespace taftnet {

CycMatrix::CycMatrix(long level, long rows, long cols)
    : level_(level), rows_(rows), cols_(cols),
      entries_(static_cast<size_t>(rows) * cols, CycNumber::zero(level)) {}

CycMatrix CycMatrix::identity(long level, long n) {
    CycMatrix m(level, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = CycNumber::one(level);
    return m;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    return level_ == o.level_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           entries_ == o.entries_;
}

bool CycMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw RangeError("matrix shape mismatch in +");
    CycMatrix r = *this;
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
    return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw RangeError("matrix shape mismatch in -");
    CycMatrix r = *this;
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
    return r;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw RangeError("matrix shape mismatch in *");
    CycMatrix r(level_, rows_, o.cols_);
    for (long i = 0; i < rows_; ++i) {
        for (long k = 0; k < cols_; ++k) {
            const CycNumber& a = at(i, k);
            if (a.is_zero()) continue;  // generator matrices are sparse
            for (long j = 0; j < o.cols_; ++j) {
                const CycNumber& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

CycMatrix CycMatrix::scaled(const CycNumber& s) const {
    CycMatrix r = *this;
    for (auto& e : r.entries_) e *= s;
    return r;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix r(level_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

CycMatrix CycMatrix::pow(long e) const {
    if (rows_ != cols_) throw RangeError("pow of non-square matrix");
    if (e < 0) throw RangeError("pow with negative exponent");
    CycMatrix acc = identity(level_, rows_);
    CycMatrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

CycMatrix CycMatrix::kron(const CycMatrix& o) const {
    CycMatrix r(level_, rows_ * o.rows_, cols_ * o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) {
            const CycNumber& a = at(i, j);
            if (a.is_zero()) continue;
            for (long p = 0; p < o.rows_; ++p)
                for (long q = 0; q < o.cols_; ++q) {
                    const CycNumber& b = o.at(p, q);
                    if (b.is_zero()) continue;
                    r.at(i * o.rows_ + p, j * o.cols_ + q) = a * b;
                }
        }
    return r;
}

CycMatrix CycMatrix::vstack(const CycMatrix& o) const {
    if (cols_ != o.cols_) throw RangeError("vstack column mismatch");
    CycMatrix r(level_, rows_ + o.rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (long i = 0; i < o.rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

CycMatrix CycMatrix::hstack(const CycMatrix& o) const {
    if (rows_ != o.rows_) throw RangeError("hstack row mismatch");
    CycMatrix r(level_, rows_, cols_ + o.cols_);
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (long j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

CycMatrix CycMatrix::rref(std::vector<long>* pivot_cols) const {
    CycMatrix m = *this;
    long pivot_row = 0;
    for (long col = 0; col < cols_ && pivot_row < rows_; ++col) {
        long sel = -1;
        for (long r = pivot_row; r < rows_; ++r) {
            if (!m.at(r, col).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivot_row)
            for (long j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        const CycNumber inv = m.at(pivot_row, col).inverse();
        for (long j = col; j < cols_; ++j) m.at(pivot_row, j) *= inv;
        for (long r = 0; r < rows_; ++r) {
            if (r == pivot_row) continue;
            const CycNumber f = m.at(r, col);
            if (f.is_zero()) continue;
            for (long j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(pivot_row, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++pivot_row;
    }
    return m;
}

long CycMatrix::rank() const {
    std::vector<long> pivots;
    rref(&pivots);
    return static_cast<long>(pivots.size());
}

std::vector<std::vector<CycNumber>> kernel_basis(const CycMatrix& m) {
    std::vector<long> pivots;
    CycMatrix r = m.rref(&pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (long c : pivots) is_pivot[c] = true;

    std::vector<std::vector<CycNumber>> basis;
    for (long free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<CycNumber> v(m.cols(), CycNumber::zero(m.level()));
        v[free_col] = CycNumber::one(m.level());
        for (size_t pr = 0; pr < pivots.size(); ++pr) {
            v[pivots[pr]] = -r.at(static_cast<long>(pr), free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

CycMatrix matvec_as_column(long level, const std::vector<CycNumber>& v) {
    CycMatrix m(level, static_cast<long>(v.size()), 1);
    for (long i = 0; i < static_cast<long>(v.size()); ++i) m.at(i, 0) = v[i];
    return m;
}

}  // namespace taftnet
