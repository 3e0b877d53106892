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


#ifndef QADD_CODE_HPP
#define QADD_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qadd/gf4.hpp"

namespace qadd {

/// Largest dim2 the exhaustive routines will enumerate.
inline constexpr size_t kMaxEnumerationDim2 = 24;

/// Codeword counts indexed by Hamming weight 0..n.
struct WeightDistribution {
    std::vector<uint64_t> counts;

    uint64_t total() const;
    /// Smallest nonzero weight with a nonzero count; absent for the zero code.
    std::optional<size_t> min_distance() const;
    /// (weight, count) pairs with count > 0, ascending weight.
    std::vector<std::pair<size_t, uint64_t>> terms() const;
    /// Renders e.g. "1+7z^6".
    std::string polynomial() const;

    /// Builds a distribution of length n+1 from (weight, count) pairs.
    static WeightDistribution from_terms(size_t n, const std::vector<std::pair<size_t, uint64_t>> &terms);

    friend bool operator==(const WeightDistribution &, const WeightDistribution &) = default;
};

struct CodeParams {
    size_t n = 0;
    size_t dim2 = 0;
    std::optional<size_t> d;

    /// "[n,k,d]" with k = dim2/2 printed as e.g. 3.5.
    std::string str() const;
    friend bool operator==(const CodeParams &, const CodeParams &) = default;
};

/// "3.5" for dim2 = 7, "3" for dim2 = 6.
std::string dimension_str(size_t dim2);

/// An additive code over GF(4): the GF(2)-span of its generator rows. Rows are
/// kept exactly as given, including dependent ones.
class AdditiveCode {
   public:
    AdditiveCode() = default;
    explicit AdditiveCode(Gf4Matrix generators);

    size_t n() const { return gen_.cols(); }
    size_t dim2() const { return basis_.size(); }
    size_t row_count() const { return gen_.rows(); }
    const Gf4Matrix &generators() const { return gen_; }
    const Gf4Vector &row(size_t i) const { return gen_.row(i); }
    /// Indices of the rows that form a GF(2) basis, chosen greedily.
    const std::vector<size_t> &basis_rows() const { return basis_; }
    bool full_rank() const { return basis_.size() == gen_.rows(); }

    friend bool operator==(const AdditiveCode &a, const AdditiveCode &b) { return a.gen_ == b.gen_; }

   private:
    Gf4Matrix gen_;
    std::vector<size_t> basis_;
};

/// Throws std::invalid_argument on ragged rows, no rows, or zero length.
AdditiveCode make_code(std::vector<Gf4Vector> rows);
AdditiveCode make_code(const Gf4Matrix &m);

/// Exhaustive weight distribution. Throws std::length_error past the guard.
WeightDistribution weight_distribution(const AdditiveCode &c);
CodeParams params(const AdditiveCode &c);

/// True iff every codeword has as many 1s as ws as w^2s.
bool is_asep(const AdditiveCode &c);

/// Some codeword of minimum nonzero weight (the first met in enumeration order).
Gf4Vector min_weight_codeword(const AdditiveCode &c);

/// Every codeword of the code, in Gray-code enumeration order. Testing aid.
std::vector<Gf4Vector> codewords(const AdditiveCode &c);

/// Row-aligned concatenation. Both codes need equal row counts and full rank.
AdditiveCode juxtapose(const AdditiveCode &c1, const AdditiveCode &c2);

/// Deletes coordinate `index`.
AdditiveCode puncture(const AdditiveCode &c, size_t index);

/// Appends to each row the GF(4)-sum of its coordinates.
AdditiveCode extend_parity(const AdditiveCode &c);

/// Deletes the listed (distinct, in range) columns.
AdditiveCode multiset_subtract(const AdditiveCode &c, const std::vector<size_t> &columns);

/// Appends generator rows.
AdditiveCode stack_rows(const AdditiveCode &c, const std::vector<Gf4Vector> &extra);

struct InvariantSplit {
    /// Minimum weight over the nonzero span of rows [split, end).
    size_t delta1 = 0;
    /// Minimum weight of u + v, u != 0 in the span of rows [0, split), v in the lower span.
    size_t delta2 = 0;
    /// Maximum weight of the same mixed sums.
    size_t delta2_max = 0;
    /// All mixed sums share one weight, and it exceeds delta1.
    bool is_invariant = false;
    /// Every mixed sum weighs more than delta1.
    bool dominates = false;
};

/// Requires 0 < split < row_count and all rows independent.
InvariantSplit invariant_split_check(const AdditiveCode &c, size_t split);

}  // namespace qadd

#endif
