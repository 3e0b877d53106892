// Copyright 2026 The qadd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QADD_GF2_HPP
#define QADD_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qadd/gf4.hpp"

namespace qadd {

/// Bit vector over GF(2), packed into 64-bit words. Bits past the logical
/// length are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t n) : n_(n), words_((n + 63) / 64, 0) {}
    BitVector(std::initializer_list<int> bits);

    size_t size() const { return n_; }
    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        const uint64_t mask = uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    size_t popcount() const;
    bool is_zero() const;
    /// Index of the lowest set bit, or size() if none.
    size_t first_set() const;
    const std::vector<uint64_t> &words() const { return words_; }
    std::string str() const;

    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
    friend bool operator==(const BitVector &, const BitVector &) = default;

   private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense GF(2) matrix stored by rows.
class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    Gf2Matrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
    explicit Gf2Matrix(std::vector<BitVector> rows);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    const BitVector &row(size_t i) const { return rows_[i]; }
    BitVector &row(size_t i) { return rows_[i]; }
    const std::vector<BitVector> &row_vectors() const { return rows_; }
    bool get(size_t r, size_t c) const { return rows_[r].get(c); }
    void set(size_t r, size_t c, bool v) { rows_[r].set(c, v); }

    friend bool operator==(const Gf2Matrix &, const Gf2Matrix &) = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Row rank over GF(2).
size_t f2_rank(const Gf2Matrix &m);

/// Indices of a maximal set of independent rows, chosen greedily in order.
std::vector<size_t> independent_rows(const Gf2Matrix &m);

/// Maps (v_0..v_{n-1}, v_n..v_{2n-1}) to (v_0 + w v_n, ..., v_{n-1} + w v_{2n-1}).
Gf4Vector phi(const BitVector &v);
/// Inverse of phi.
BitVector phi_inv(const Gf4Vector &v);

/// Number of indices i with (v_i, v_{n+i}) != (0, 0).
size_t symplectic_weight(const BitVector &v);

/// tau(c_0, ..., c_{n-1}) = (c_{n-1}, c_0, ..., c_{n-2}).
BitVector cyclic_shift(const BitVector &v);
Gf4Vector cyclic_shift(const Gf4Vector &v);

}  // namespace qadd

#endif
