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


#include "qadd/gf4.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "qadd/gf2.hpp"
#include "qadd/polynomial.hpp"

using namespace qadd;

TEST(gf4, arithmetic_examples) {
    ASSERT_EQ(gf4_arith(Gf4::w(), Gf4::w(), Gf4Op::add), Gf4::zero());
    ASSERT_EQ(gf4_arith(Gf4::w(), Gf4::w(), Gf4Op::mul), Gf4::w2());
    ASSERT_EQ(gf4_arith(Gf4::one(), Gf4::w(), Gf4Op::add), Gf4::w2());
    ASSERT_EQ(Gf4::w2() * Gf4::w(), Gf4::one());
    ASSERT_EQ(Gf4::w2() + Gf4::w() + Gf4::one(), Gf4::zero());
}

TEST(gf4, field_axioms) {
    for (Gf4 a : kGf4Elements) {
        ASSERT_EQ(a + a, Gf4::zero());
        ASSERT_EQ(a * Gf4::one(), a);
        ASSERT_EQ(a * Gf4::zero(), Gf4::zero());
        if (!a.is_zero()) {
            int inverses = 0;
            for (Gf4 b : kGf4Elements) {
                inverses += a * b == Gf4::one();
            }
            ASSERT_EQ(inverses, 1);
        }
        for (Gf4 b : kGf4Elements) {
            ASSERT_EQ(a + b, b + a);
            ASSERT_EQ(a * b, b * a);
            for (Gf4 c : kGf4Elements) {
                ASSERT_EQ((a + b) + c, a + (b + c));
                ASSERT_EQ((a * b) * c, a * (b * c));
                ASSERT_EQ(a * (b + c), a * b + a * c);
            }
        }
    }
}

TEST(gf4, char_round_trip) {
    for (char c : std::string("01wW")) {
        ASSERT_EQ(Gf4::from_char(c).to_char(), c);
    }
    ASSERT_THROW(Gf4::from_char('2'), std::invalid_argument);
    ASSERT_EQ(Gf4Vector::parse("01wW").str(), "01wW");
}

TEST(gf4, weights) {
    SymbolCounts s = weights(Gf4Vector{Gf4::one(), Gf4::w(), Gf4::w2()});
    ASSERT_EQ(s.hamming, 3u);
    ASSERT_EQ(s.per_symbol, (std::array<size_t, 4>{0, 1, 1, 1}));
    ASSERT_EQ(weights(Gf4Vector(7)).hamming, 0u);
    for (auto row : {"1w0W1wW", "01w1wWW", "ww10WW1"}) {
        s = weights(Gf4Vector::parse(row));
        ASSERT_EQ(s.hamming, 6u);
        ASSERT_EQ(s.per_symbol, (std::array<size_t, 4>{1, 2, 2, 2}));
    }
}

TEST(gf4, vector_length_mismatch) {
    Gf4Vector a(3);
    ASSERT_THROW(a += Gf4Vector(4), std::invalid_argument);
}

TEST(gf4, matrix_shape) {
    Gf4Matrix m = Gf4Matrix::parse({"1w0", "0W1"});
    ASSERT_EQ(m.rows(), 2u);
    ASSERT_EQ(m.cols(), 3u);
    ASSERT_EQ(m.column(1).str(), "wW");
    ASSERT_EQ(Gf4Matrix::from_columns(m.columns()), m);
    ASSERT_EQ(m.select_columns({2, 0}).row(0).str(), "01");
    ASSERT_THROW(m.select_columns({3}), std::out_of_range);
    ASSERT_THROW(Gf4Matrix::parse({"1w", "0"}), std::invalid_argument);
    ASSERT_EQ(m.hconcat(m).cols(), 6u);
    ASSERT_EQ(m.vconcat(m).rows(), 4u);
}

TEST(gf4, additive_form_vectors) {
    auto one = additive_form_vectors(1);
    ASSERT_EQ(one.size(), 3u);
    ASSERT_EQ(one[0].str(), "1w");
    auto two = additive_form_vectors(2);
    ASSERT_EQ(two.size(), 15u);
    std::set<std::string> distinct;
    std::vector<BitVector> pre;
    for (const auto &c : two) {
        ASSERT_EQ(c.size(), 4u);
        distinct.insert(c.str());
        pre.push_back(phi_inv(c));
    }
    ASSERT_EQ(distinct.size(), 15u);
    // Columns of height 4 as Phi-preimages of length 8; their span has rank 4.
    Gf2Matrix cols(pre);
    ASSERT_EQ(f2_rank(cols), 4u);
    for (int m = 1; m <= 4; m++) {
        std::vector<BitVector> bits;
        for (const auto &c : additive_form_vectors(m)) {
            bits.push_back(phi_inv(c));
        }
        ASSERT_EQ(f2_rank(Gf2Matrix(bits)), static_cast<size_t>(2 * m));
    }
}

TEST(gf2, rank) {
    ASSERT_EQ(f2_rank(Gf2Matrix(std::vector<BitVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3u);
    ASSERT_EQ(f2_rank(Gf2Matrix(std::vector<BitVector>{{1, 1, 0}, {1, 1, 0}})), 1u);
    ASSERT_EQ(f2_rank(Gf2Matrix()), 0u);
    ASSERT_EQ(f2_rank(Gf2Matrix(std::vector<BitVector>{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})), 2u);
}

TEST(gf2, phi) {
    ASSERT_EQ(phi(BitVector{1, 0, 1, 0, 1, 1}).str(), "1wW");
    ASSERT_TRUE(phi(BitVector(8)).is_zero());
    ASSERT_EQ(phi_inv(Gf4Vector::parse("1wW")), (BitVector{1, 0, 1, 0, 1, 1}));
    ASSERT_THROW(phi(BitVector(5)), std::invalid_argument);
}

TEST(gf2, phi_round_trip_random) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; trial++) {
        const size_t n = 1 + rng() % 90;
        BitVector v(2 * n);
        for (size_t i = 0; i < 2 * n; i++) {
            v.set(i, rng() & 1);
        }
        const Gf4Vector p = phi(v);
        ASSERT_EQ(phi_inv(p), v);
        ASSERT_EQ(weights(p).hamming, symplectic_weight(v));
    }
}

TEST(gf2, cyclic_shift) {
    ASSERT_EQ(cyclic_shift(BitVector{1, 0, 0}), (BitVector{0, 1, 0}));
    Gf4Vector v = Gf4Vector::parse("1w0Ww");
    Gf4Vector u = v;
    for (int i = 0; i < 5; i++) {
        u = cyclic_shift(u);
    }
    ASSERT_EQ(u, v);
    ASSERT_EQ(cyclic_shift(v).str(), "w1w0W");
}

TEST(polynomial, find) {
    ASSERT_EQ(find_polynomial(3, PolyKind::irreducible).str(), "x^3 + x + 1");
    ASSERT_EQ(find_polynomial(1, PolyKind::irreducible).str(), "x + 1");
    ASSERT_EQ(find_polynomial(4, PolyKind::primitive).str(), "x^4 + x + 1");
    ASSERT_EQ(find_polynomial(2, PolyKind::irreducible).str(), "x^2 + x + 1");
    // x^4+x^3+x^2+x+1 is irreducible but has order 5.
    ASSERT_TRUE(is_irreducible(0b11111));
    ASSERT_FALSE(is_primitive(0b11111));
    ASSERT_THROW(find_polynomial(1, PolyKind::primitive), std::invalid_argument);
    ASSERT_THROW(find_polynomial(17, PolyKind::irreducible), std::invalid_argument);
}

TEST(polynomial, irreducible_properties) {
    for (int k = 1; k <= 16; k++) {
        const uint64_t f = find_polynomial(k, PolyKind::irreducible).bits();
        ASSERT_EQ(find_polynomial(k, PolyKind::irreducible).degree(), k);
        ASSERT_TRUE(f & 1);
        if (k >= 2) {
            // No root in GF(2).
            ASSERT_EQ(__builtin_popcountll(f) % 2, 1);
        }
        // f divides x^(2^k) - x: square x k times modulo f.
        uint64_t x = 2;
        for (int i = 0; i < k; i++) {
            uint64_t sq = 0;
            for (int b = 0; b < 32; b++) {
                if ((x >> b) & 1) {
                    sq ^= uint64_t{1} << (2 * b);
                }
            }
            x = poly_mod(sq, f);
        }
        ASSERT_EQ(x, poly_mod(2, f)) << "k=" << k;
        // Smallest: no smaller monic degree-k candidate is irreducible.
        for (uint64_t g = uint64_t{1} << k; g < f; g++) {
            ASSERT_FALSE(is_irreducible(g));
        }
    }
}
