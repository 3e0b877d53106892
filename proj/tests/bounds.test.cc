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

#include <random>

#include "gtest/gtest.h"
#include "oracle.test.h"
#include "qadd/catalog.hpp"
#include "qadd/constructions.hpp"

using namespace qadd;

TEST(bounds, griesmer_g) {
    ASSERT_EQ(griesmer_g(3, 12), 21u);
    ASSERT_EQ(griesmer_g(7, 192), 381u);
    ASSERT_EQ(griesmer_g(7, 194), 389u);
    ASSERT_EQ(griesmer_g(7, 18), 39u);
    ASSERT_THROW(griesmer_g(3, 5), std::invalid_argument);
    ASSERT_THROW(griesmer_g(0, 4), std::invalid_argument);
}

TEST(bounds, griesmer_monotone) {
    for (size_t dim2 = 1; dim2 <= 12; dim2++) {
        for (uint64_t d2 = 2; d2 <= 200; d2 += 2) {
            ASSERT_LE(griesmer_g(dim2, d2), griesmer_g(dim2, d2 + 2));
            ASSERT_LT(griesmer_g(dim2, d2), griesmer_g(dim2 + 1, d2));
        }
    }
}

TEST(bounds, classify) {
    ASSERT_EQ(classify(127, 7, 96), (OptimalityClass{true, true, true}));
    OptimalityClass c = classify(43, 7, 32);
    ASSERT_TRUE(c.gpo);
    ASSERT_FALSE(c.meets_griesmer);
    ASSERT_TRUE(classify(12, 7, 8).gdo);
    ASSERT_EQ(griesmer_gap(7, 3, 6), 0);
}

TEST(bounds, gpo_implies_gdo) {
    for (size_t n = 4; n < 80; n++) {
        for (size_t d = 1; d < n; d++) {
            OptimalityClass c = classify(n, 7, d);
            if (c.gpo) {
                ASSERT_TRUE(c.gdo);
            }
        }
    }
}

TEST(bounds, concat_binary) {
    BinaryImage b = concat_binary(embedded_matrix("Eq6"));
    ASSERT_EQ(b.n, 21u);
    ASSERT_EQ(b.rank, 3u);
    ASSERT_EQ(b.d, 12u);
    BinaryImage e = concat_binary(embedded_matrix("Eq21"));
    ASSERT_EQ(e.n, 9u);
    ASSERT_EQ(e.rank, 3u);
    ASSERT_GE(*e.d, 4u);
    BinaryImage z = concat_binary(make_code({Gf4Vector(3)}));
    ASSERT_TRUE(z.generator.row(0).is_zero());
    ASSERT_EQ(z.d, std::nullopt);
}

TEST(bounds, concat_binary_doubles_weights) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; trial++) {
        AdditiveCode c = qadd_test::random_code(rng, 1 + rng() % 6, 2 + rng() % 12);
        if (!params(c).d) {
            continue;
        }
        BinaryImage b = concat_binary(c);
        ASSERT_EQ(b.rank, c.dim2());
        ASSERT_EQ(*b.d, 2 * *params(c).d);
    }
}

TEST(bounds, nonexistence) {
    ASSERT_TRUE(nonexistence(18, 7, 13).has_value());
    ASSERT_TRUE(nonexistence(26, 7, 19).has_value());
    ASSERT_FALSE(nonexistence(17, 7, 12).has_value());
    ASSERT_FALSE(nonexistence(18, 6, 13).has_value());
}

TEST(bounds, period_shift) {
    ASSERT_EQ(period_shift(43, 7, 32), (CodeParams{170, 7, 128}));
    ASSERT_EQ(period_shift(127, 7, 96), (CodeParams{254, 7, 192}));
    ASSERT_EQ(period_shift(32, 7, 24), (CodeParams{159, 7, 120}));
    ASSERT_THROW(period_shift(40, 7, 20), std::invalid_argument);
}

TEST(bounds, period_shift_preserves_gpo) {
    Table2Builder b;
    for (const auto &row : table2_rows()) {
        if (row.external || row.n_max + 127 > 254) {
            continue;
        }
        const size_t d = row.n_max - static_cast<size_t>(row.t);
        ASSERT_TRUE(classify(row.n_max, 7, d).gpo) << row.t;
        CodeParams p = period_shift(row.n_max, 7, d);
        ASSERT_TRUE(classify(p.n, 7, *p.d).gpo) << row.t;
    }
}

TEST(bounds, griesmer_identities) {
    for (size_t k = 3; k <= 13; k++) {
        const uint64_t p = uint64_t{1} << k;
        ASSERT_EQ(griesmer_g(k, 3 * p / 2), 3 * (p - 1));
        for (size_t k1 = 2; k1 < k; k1++) {
            ASSERT_EQ(griesmer_g(k, p / 2 - (uint64_t{1} << (k1 - 1))), p - (uint64_t{1} << k1));
        }
    }
    // Anticode removal of m blocks of size 2^k2 / 3 from an ASEP code.
    for (size_t k = 7; k <= 13; k++) {
        for (size_t k2 = 4; k2 + 3 <= k; k2 += 2) {
            for (uint64_t m = 1; m <= 3; m++) {
                const uint64_t d2 = 3 * (uint64_t{1} << (k - 1)) - m * (uint64_t{1} << (k2 - 1)) + 2;
                const uint64_t rhs = 3 * (uint64_t{1} << k) - m * (uint64_t{1} << k2) + k2 + (m + 1) / 2 - 2;
                ASSERT_EQ(griesmer_g(k, d2), rhs + (m == 2 ? 1 : 0)) << k << " " << k2 << " " << m;
            }
        }
    }
}
