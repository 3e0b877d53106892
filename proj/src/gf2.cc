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

#include "qadd/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace qadd {

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    size_t i = 0;
    for (int b : bits) {
        set(i++, b != 0);
    }
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t BitVector::first_set() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return k * 64 + std::countr_zero(words_[k]);
        }
    }
    return n_;
}

std::string BitVector::str() const {
    std::string out;
    out.reserve(n_);
    for (size_t i = 0; i < n_; i++) {
        out.push_back(get(i) ? '1' : '0');
    }
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

Gf2Matrix::Gf2Matrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : rows_.front().size();
    for (const auto &r : rows_) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged GF(2) matrix rows");
        }
    }
}

std::vector<size_t> independent_rows(const Gf2Matrix &m) {
    // Reduced basis keyed by pivot column; each new row is reduced against it.
    std::vector<BitVector> basis;
    std::vector<size_t> pivots;
    std::vector<size_t> kept;
    for (size_t r = 0; r < m.rows(); r++) {
        BitVector v = m.row(r);
        for (size_t b = 0; b < basis.size(); b++) {
            if (v.get(pivots[b])) {
                v ^= basis[b];
            }
        }
        const size_t p = v.first_set();
        if (p == v.size()) {
            continue;
        }
        for (auto &existing : basis) {
            if (existing.get(p)) {
                existing ^= v;
            }
        }
        basis.push_back(std::move(v));
        pivots.push_back(p);
        kept.push_back(r);
    }
    return kept;
}

size_t f2_rank(const Gf2Matrix &m) { return independent_rows(m).size(); }

Gf4Vector phi(const BitVector &v) {
    if (v.size() % 2 != 0) {
        throw std::invalid_argument("phi: input length must be even");
    }
    const size_t n = v.size() / 2;
    Gf4Vector out(n);
    for (size_t i = 0; i < n; i++) {
        out[i] = Gf4::from_code(static_cast<uint8_t>(v.get(i) | (v.get(n + i) << 1)));
    }
    return out;
}

BitVector phi_inv(const Gf4Vector &v) {
    const size_t n = v.size();
    BitVector out(2 * n);
    for (size_t i = 0; i < n; i++) {
        out.set(i, v[i].real_bit());
        out.set(n + i, v[i].w_bit());
    }
    return out;
}

size_t symplectic_weight(const BitVector &v) {
    if (v.size() % 2 != 0) {
        throw std::invalid_argument("symplectic_weight: input length must be even");
    }
    const size_t n = v.size() / 2;
    size_t w = 0;
    for (size_t i = 0; i < n; i++) {
        w += v.get(i) || v.get(n + i);
    }
    return w;
}

BitVector cyclic_shift(const BitVector &v) {
    const size_t n = v.size();
    BitVector out(n);
    for (size_t i = 0; i < n; i++) {
        out.set((i + 1) % n, v.get(i));
    }
    return out;
}

Gf4Vector cyclic_shift(const Gf4Vector &v) {
    const size_t n = v.size();
    Gf4Vector out(n);
    for (size_t i = 0; i < n; i++) {
        out[(i + 1) % n] = v[i];
    }
    return out;
}

}  // namespace qadd
