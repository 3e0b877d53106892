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


#include "qadd/bounds.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace qadd {

uint64_t griesmer_g(size_t dim2, uint64_t d2) {
    if (dim2 < 1 || d2 < 2 || d2 % 2 != 0) {
        throw std::invalid_argument("griesmer_g: need dim2 >= 1 and even d2 >= 2");
    }
    uint64_t total = 0;
    for (size_t i = 0; i < dim2; i++) {
        total += i >= 64 ? 1 : (d2 + (uint64_t{1} << i) - 1) >> i;
    }
    return total;
}

OptimalityClass classify(size_t n, size_t dim2, size_t d) {
    const uint64_t here = griesmer_g(dim2, 2 * d);
    const uint64_t next = griesmer_g(dim2, 2 * d + 2);
    OptimalityClass out;
    out.meets_griesmer = 3 * n == here;
    out.gdo = 3 * n < next;
    out.gpo = 3 * n + 3 < next;
    return out;
}

int64_t griesmer_gap(size_t n, size_t dim2, size_t d) {
    return static_cast<int64_t>(3 * n) - static_cast<int64_t>(griesmer_g(dim2, 2 * d));
}

BinaryImage concat_binary(const AdditiveCode &c) {
    // Images of 0, 1, w, w^2; additive since 110 + 101 = 011.
    static constexpr std::array<std::array<bool, 3>, 4> kImage = {{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
    BinaryImage out;
    out.n = 3 * c.n();
    std::vector<BitVector> rows;
    for (const auto &r : c.generators().row_vectors()) {
        BitVector b(out.n);
        for (size_t i = 0; i < r.size(); i++) {
            for (size_t j = 0; j < 3; j++) {
                b.set(3 * i + j, kImage[r[i].code()][j]);
            }
        }
        rows.push_back(std::move(b));
    }
    out.generator = Gf2Matrix(std::move(rows));
    const std::vector<size_t> basis = independent_rows(out.generator);
    out.rank = basis.size();
    if (out.rank > kMaxEnumerationDim2) {
        throw std::length_error("concat_binary: enumeration guard exceeded");
    }
    BitVector cur(out.n);
    size_t best = 0;
    for (uint64_t i = 1; i < (uint64_t{1} << out.rank); i++) {
        cur ^= out.generator.row(basis[std::countr_zero(i)]);
        const size_t w = cur.popcount();
        if (best == 0 || w < best) {
            best = w;
        }
    }
    if (best) {
        out.d = best;
    }
    return out;
}

std::optional<NonexistenceFact> nonexistence(size_t n, size_t dim2, size_t d) {
    static const std::array<NonexistenceFact, 4> kFacts = {{
        {18, 7, 13, "no binary linear [54,7,26] code (Grassl code tables)"},
        {19, 7, 14, "no binary linear [57,7,28] code (Grassl code tables)"},
        {26, 7, 19, "no binary linear [78,7,38] code (Grassl code tables)"},
        {27, 7, 20, "no binary linear [81,7,40] code (Grassl code tables)"},
    }};
    for (const auto &f : kFacts) {
        if (f.n == n && f.dim2 == dim2 && f.d == d) {
            return f;
        }
    }
    return std::nullopt;
}

CodeParams period_shift(size_t n, size_t dim2, size_t d) {
    if (dim2 < 2 || dim2 > 40) {
        throw std::invalid_argument("period_shift: dim2 out of range");
    }
    if (!classify(n, dim2, d).gpo) {
        throw std::invalid_argument("period_shift: input parameters are not GPO");
    }
    return CodeParams{n + (size_t{1} << dim2) - 1, dim2, d + 3 * (size_t{1} << (dim2 - 2))};
}

}  // namespace qadd
