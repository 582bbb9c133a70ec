/*
   Copyright 2026 The hkfun authors

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

#ifndef HK_FPMATRIX_HPP
#define HK_FPMATRIX_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "field.hpp"

namespace hk {

/// Dense rectangular matrix over one prime field, entries canonical in [0, p).
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, const PrimeField& f)
        : rows_(rows), cols_(cols), f_(f), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return f_; }

    std::uint64_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, std::int64_t v) { at(i, j) = f_.reduce(v); }

private:
    std::size_t rows_, cols_;
    PrimeField f_;
    std::vector<std::uint64_t> a_;
};

/**
 * Incremental row-echelon basis over F_p. Rows are inserted one at a time,
 * reduced against the stored pivots, and kept normalized (pivot entry 1).
 */
class RowReducer {
public:
    RowReducer(std::size_t width, const PrimeField& f) : width_(width), f_(f) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    /// Reduces v in place and stores it if independent; returns true if the
    /// rank grew.
    bool insert(std::vector<std::uint64_t>& v) {
        for (const auto& [pc, ridx] : pivots_) {
            std::uint64_t c = v[pc];
            if (c == 0) continue;
            const auto& row = rows_[ridx];
            for (std::size_t j = pc; j < width_; ++j)
                if (row[j] != 0) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
        }
        std::size_t lead = width_;
        for (std::size_t j = 0; j < width_; ++j)
            if (v[j] != 0) {
                lead = j;
                break;
            }
        if (lead == width_) return false;
        std::uint64_t inv = f_.inv(v[lead]);
        for (std::size_t j = lead; j < width_; ++j)
            if (v[j] != 0) v[j] = f_.mul(v[j], inv);
        pivots_.insert(
            std::lower_bound(pivots_.begin(), pivots_.end(),
                             std::pair<std::size_t, std::size_t>(lead, 0)),
            {lead, rows_.size()});
        rows_.push_back(std::move(v));
        return true;
    }

private:
    std::size_t width_;
    PrimeField f_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::pair<std::size_t, std::size_t>> pivots_;  // (pivot col, row index)
};

/// Row-echelon rank by Gaussian elimination; deterministic.
inline std::size_t rank(const FpMatrix& m) {
    RowReducer red(m.cols(), m.field());
    std::vector<std::uint64_t> row(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        auto tmp = row;
        red.insert(tmp);
    }
    return red.rank();
}

}  // namespace hk

#endif
