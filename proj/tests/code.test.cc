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


#include "qadd/code.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracle.test.h"
#include "qadd/catalog.hpp"
#include "qadd/constructions.hpp"

using namespace qadd;
using qadd_test::as_map;
using qadd_test::brute_distribution;

namespace {

AdditiveCode eq6() { return embedded_matrix("Eq6"); }
AdditiveCode eq21() { return embedded_matrix("Eq21"); }

}  // namespace

TEST(code, make_code) {
    AdditiveCode c = eq6();
    ASSERT_EQ(c.n(), 7u);
    ASSERT_EQ(c.dim2(), 3u);
    AdditiveCode twice = make_code({Gf4Vector::parse("1w0"), Gf4Vector::parse("1w0")});
    ASSERT_EQ(twice.dim2(), 1u);
    ASSERT_EQ(twice.row_count(), 2u);
    ASSERT_EQ(embedded_matrix("A16").n(), 16u);
    ASSERT_EQ(embedded_matrix("A16").dim2(), 7u);
    ASSERT_THROW(make_code({Gf4Vector::parse("1w"), Gf4Vector::parse("1")}), std::invalid_argument);
    ASSERT_THROW(make_code({Gf4Vector()}), std::invalid_argument);
    ASSERT_THROW(make_code(std::vector<Gf4Vector>{}), std::invalid_argument);
}

TEST(code, weight_distribution_examples) {
    ASSERT_EQ(weight_distribution(eq21()).polynomial(), "1+3z^2+4z^3");
    ASSERT_EQ(weight_distribution(one_third(5)).polynomial(), "1+15z^8+16z^9");
    ASSERT_EQ(weight_distribution(eq6()).polynomial(), "1+7z^6");
    ASSERT_EQ(weight_distribution(eq6()).min_distance(), 6u);
    ASSERT_EQ(weight_distribution(make_code({Gf4Vector(4)})).min_distance(), std::nullopt);
}

TEST(code, weight_distribution_matches_brute_force) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; trial++) {
        AdditiveCode c = qadd_test::random_code(rng, 1 + rng() % 8, 1 + rng() % 20);
        WeightDistribution w = weight_distribution(c);
        ASSERT_EQ(as_map(w), brute_distribution(c));
        ASSERT_EQ(w.total(), uint64_t{1} << c.dim2());
        ASSERT_EQ(qadd_test::brute_span(c).size(), uint64_t{1} << c.dim2());
    }
}

TEST(code, enumeration_guard) {
    std::vector<Gf4Vector> rows;
    for (size_t i = 0; i < 13; i++) {
        Gf4Vector r(13);
        r[i] = Gf4::one();
        rows.push_back(r);
        r[i] = Gf4::w();
        rows.push_back(r);
    }
    AdditiveCode big = make_code(rows);
    ASSERT_EQ(big.dim2(), 26u);
    ASSERT_THROW(weight_distribution(big), std::length_error);
}

TEST(code, is_asep) {
    ASSERT_TRUE(is_asep(eq6()));
    ASSERT_TRUE(is_asep(make_code({Gf4Vector(5)})));
    ASSERT_FALSE(is_asep(eq21()));
}

TEST(code, juxtapose) {
    AdditiveCode c8 = augment(asep(5), true);
    AdditiveCode c9 = anticode_family(3, 4, AnticodeMode::third_both);
    AdditiveCode j = juxtapose(c8, c9);
    ASSERT_EQ(params(j), (CodeParams{67, 7, 50}));
    AdditiveCode c31 = asep(7);
    ASSERT_EQ(params(juxtapose(c31, c31)), (CodeParams{254, 7, 192}));
    AdditiveCode zeros = make_code(std::vector<Gf4Vector>(3, Gf4Vector(4)));
    ASSERT_THROW(juxtapose(eq6(), zeros), std::invalid_argument);
    ASSERT_THROW(juxtapose(eq6(), c8), std::invalid_argument);
}

TEST(code, puncture_and_extend) {
    for (size_t i = 0; i < 7; i++) {
        ASSERT_EQ(params(puncture(eq6(), i)), (CodeParams{6, 3, 5}));
    }
    ASSERT_THROW(puncture(eq6(), 7), std::out_of_range);
    AdditiveCode ext = extend_parity(eq21());
    ASSERT_EQ(puncture(ext, 3), eq21());
    for (const auto &cw : codewords(ext)) {
        ASSERT_EQ(cw.coordinate_sum(), Gf4::zero());
    }
}

TEST(code, extend_augmented_asep) {
    for (int k = 3; k <= 7; k++) {
        AdditiveCode aug = stack_rows(asep(k), {Gf4Vector((1u << k) - 1, Gf4::one()),
                                                Gf4Vector((1u << k) - 1, Gf4::w())});
        const size_t n = (size_t{1} << k) - 1, d = 3 * (size_t{1} << (k - 2));
        ASSERT_EQ(params(aug), (CodeParams{n, static_cast<size_t>(k + 2), d - 1}));
        ASSERT_EQ(params(extend_parity(aug)), (CodeParams{n + 1, static_cast<size_t>(k + 2), d}));
    }
}

TEST(code, multiset_subtract) {
    AdditiveCode combined = asep_combine(3, 4);
    std::vector<size_t> block;
    for (size_t j = 105; j < 112; j++) {
        block.push_back(j);
    }
    AdditiveCode sub = multiset_subtract(combined, block);
    ASSERT_EQ(params(sub), (CodeParams{120, 7, 90}));
    ASSERT_EQ(multiset_subtract(eq6(), {}), eq6());
    ASSERT_EQ(multiset_subtract(eq6(), {0, 1, 2, 3, 4, 5}).n(), 1u);
    ASSERT_THROW(multiset_subtract(eq6(), {7}), std::out_of_range);
    ASSERT_THROW(multiset_subtract(eq6(), {1, 1}), std::invalid_argument);
}

TEST(code, multiset_subtract_anticode_bound) {
    // The removed columns, as a code, have maximum weight 3 * 2^(k1-2) = 6.
    AdditiveCode combined = asep_combine(3, 4);
    std::vector<size_t> block;
    for (size_t j = 105; j < 112; j++) {
        block.push_back(j);
    }
    AdditiveCode removed = make_code(combined.generators().select_columns(block));
    const auto terms = weight_distribution(removed).terms();
    const size_t dmax = terms.back().first;
    ASSERT_GE(*params(multiset_subtract(combined, block)).d, 96 - dmax);
}

TEST(code, stack_rows) {
    AdditiveCode aug = stack_rows(eq6(), {Gf4Vector(7, Gf4::one()), Gf4Vector(7, Gf4::w())});
    ASSERT_EQ(params(aug), (CodeParams{7, 5, 5}));
    ASSERT_EQ(stack_rows(eq6(), {eq6().row(0) + eq6().row(1)}).dim2(), 3u);
    ASSERT_EQ(params(extend_parity(aug)), (CodeParams{8, 5, 6}));
    ASSERT_THROW(stack_rows(eq6(), {Gf4Vector(6)}), std::invalid_argument);
}

TEST(code, invariant_split) {
    InvariantSplit s = invariant_split_check(eq21(), 1);
    ASSERT_EQ(s.delta1, 2u);
    ASSERT_EQ(s.delta2, 3u);
    ASSERT_TRUE(s.is_invariant);
    s = invariant_split_check(one_third(5), 1);
    ASSERT_EQ(s.delta1, 8u);
    ASSERT_EQ(s.delta2, 9u);
    ASSERT_TRUE(s.is_invariant);
    // Constant-weight code: every mixed sum weighs 6, as does the lower part.
    s = invariant_split_check(eq6(), 1);
    ASSERT_FALSE(s.is_invariant);
    ASSERT_FALSE(s.dominates);
    ASSERT_THROW(invariant_split_check(eq6(), 0), std::invalid_argument);
    ASSERT_THROW(invariant_split_check(eq6(), 3), std::invalid_argument);
}

TEST(code, invariant_split_weak_form) {
    // Mixed sums weigh 29 and 33: dominating but not constant.
    InvariantSplit s = invariant_split_check(embedded_matrix("A38"), 1);
    ASSERT_EQ(s.delta1, 28u);
    ASSERT_EQ(s.delta2, 29u);
    ASSERT_EQ(s.delta2_max, 33u);
    ASSERT_TRUE(s.dominates);
    ASSERT_FALSE(s.is_invariant);
}

TEST(code, params_str) {
    ASSERT_EQ((CodeParams{7, 3, 6}).str(), "[7,1.5,6]");
    ASSERT_EQ((CodeParams{16, 6, 12}).str(), "[16,3,12]");
    ASSERT_EQ(dimension_str(7), "3.5");
}
