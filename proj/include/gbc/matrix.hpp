/*
   Copyright 2026 The gbcrypt authors

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

// Dense matrices over F_q and exact reduced row echelon form.
//
// rref() runs the OpenMP kernel, rref_serial() the reference implementation;
// both produce the identical (unique) RREF.  tools/bench_kernels.cpp compares
// them.

#ifndef GBC_MATRIX_HPP
#define GBC_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gbc/field.hpp"

namespace gbc {

class DenseMatrix {
public:
    DenseMatrix(const PrimeField& f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static DenseMatrix identity(const PrimeField& f, std::size_t n);
    static DenseMatrix from_rows(const PrimeField& f, const std::vector<std::vector<u128>>& rows);

    const PrimeField& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    u128 at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, u128 v) { a_[r * cols_ + c] = v; }
    u128* row(std::size_t r) { return a_.data() + r * cols_; }
    const u128* row(std::size_t r) const { return a_.data() + r * cols_; }

    DenseMatrix mul(const DenseMatrix& o) const;
    std::vector<u128> mul_vec(const std::vector<u128>& v) const;
    std::optional<DenseMatrix> inverse() const;

    bool operator==(const DenseMatrix& o) const {
        return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    PrimeField f_;
    std::size_t rows_, cols_;
    std::vector<u128> a_;
};

struct RrefResult {
    DenseMatrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
};

RrefResult rref(const DenseMatrix& m);
RrefResult rref_serial(const DenseMatrix& m);

} // namespace gbc

#endif
