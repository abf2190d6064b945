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

#ifndef TAFTNET_MATRIX_HPP
#define TAFTNET_MATRIX_HPP

#include <vector>

#include "taftnet/cyclotomic.hpp"

namespace taftnet {

/// Dense matrix over Q(zeta_N), row-major. All entries share one level.
class CycMatrix {
public:
    CycMatrix() : level_(1), rows_(0), cols_(0) {}
    CycMatrix(long level, long rows, long cols);  // zero matrix

    static CycMatrix identity(long level, long n);

    long level() const { return level_; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }

    CycNumber& at(long r, long c) { return entries_[r * cols_ + c]; }
    const CycNumber& at(long r, long c) const { return entries_[r * cols_ + c]; }

    bool operator==(const CycMatrix& o) const;
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix scaled(const CycNumber& s) const;
    CycMatrix transpose() const;
    CycMatrix pow(long e) const;  // square matrices, e >= 0
    CycMatrix kron(const CycMatrix& o) const;

    // Vertical stack: [this; o].
    CycMatrix vstack(const CycMatrix& o) const;
    // Horizontal concatenation: [this | o].
    CycMatrix hstack(const CycMatrix& o) const;

    long rank() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    // Reduced row-echelon form with leftmost pivots; pivot columns appended
    // to *pivot_cols if given.
    CycMatrix rref(std::vector<long>* pivot_cols = nullptr) const;

private:
    long level_;
    long rows_, cols_;
    std::vector<CycNumber> entries_;
};

// Canonical kernel basis: one vector per free column of the RREF, ordered by
// free column index. Each vector has a 1 at its free column. Deterministic.
std::vector<std::vector<CycNumber>> kernel_basis(const CycMatrix& m);

CycMatrix matvec_as_column(long level, const std::vector<CycNumber>& v);

}  // namespace taftnet

#endif
