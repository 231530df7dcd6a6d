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

#include "gbc/matrix.hpp"

#include <utility>

namespace gbc {

DenseMatrix DenseMatrix::identity(const PrimeField& f, std::size_t n) {
    DenseMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

DenseMatrix DenseMatrix::from_rows(const PrimeField& f, const std::vector<std::vector<u128>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    DenseMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, f.reduce(rows[i][j]));
    return m;
}

DenseMatrix DenseMatrix::mul(const DenseMatrix& o) const {
    if (cols_ != o.rows_ || f_ != o.f_) throw RingMismatch("matrix product shape mismatch");
    DenseMatrix r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            u128 a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.set(i, j, f_.add(r.at(i, j), f_.mul(a, o.at(k, j))));
        }
    return r;
}

std::vector<u128> DenseMatrix::mul_vec(const std::vector<u128>& v) const {
    if (v.size() != cols_) throw RingMismatch("matrix-vector shape mismatch");
    std::vector<u128> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        u128 acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = f_.add(acc, f_.mul(at(i, j), v[j]));
        r[i] = acc;
    }
    return r;
}

std::optional<DenseMatrix> DenseMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    DenseMatrix aug(f_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_ + i, 1);
    }
    RrefResult r = rref_serial(aug);
    if (r.rank != rows_) return std::nullopt;
    for (std::size_t i = 0; i < rows_; ++i)
        if (r.pivots[i] != i) return std::nullopt;
    DenseMatrix inv(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.set(i, j, r.reduced.at(i, cols_ + j));
    return inv;
}

namespace {

template <bool Parallel>
RrefResult rref_impl(const DenseMatrix& in) {
    DenseMatrix m = in;
    const PrimeField& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0; // next pivot row
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t sel = rows;
        for (std::size_t i = pr; i < rows; ++i)
            if (m.at(i, pc) != 0) { sel = i; break; }
        if (sel == rows) continue;
        if (sel != pr)
            for (std::size_t j = pc; j < cols; ++j) std::swap(m.row(sel)[j], m.row(pr)[j]);
        u128 s = f.inv(m.at(pr, pc));
        if (s != 1) {
            u128* p = m.row(pr);
            for (std::size_t j = pc; j < cols; ++j)
                if (p[j] != 0) p[j] = f.mul(p[j], s);
        }
        const u128* p = m.row(pr);
        auto eliminate = [&](std::size_t i) {
            if (i == pr) return;
            u128 c = m.at(i, pc);
            if (c == 0) return;
            u128* t = m.row(i);
            t[pc] = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (p[j] != 0) t[j] = f.sub(t[j], f.mul(c, p[j]));
        };
        if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (long long i = 0; i < static_cast<long long>(rows); ++i)
                eliminate(static_cast<std::size_t>(i));
        } else {
            for (std::size_t i = 0; i < rows; ++i) eliminate(i);
        }
        pivots.push_back(pc);
        ++pr;
    }
    return RrefResult{std::move(m), pivots.size(), std::move(pivots)};
}

} // namespace

RrefResult rref(const DenseMatrix& m) {
#ifdef _OPENMP
    // small matrices are not worth the fork/join overhead
    if (m.rows() * m.cols() >= 1u << 14) return rref_impl<true>(m);
#endif
    return rref_impl<false>(m);
}

RrefResult rref_serial(const DenseMatrix& m) { return rref_impl<false>(m); }

} // namespace gbc
