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


#ifndef QADD_CONSTRUCTIONS_HPP
#define QADD_CONSTRUCTIONS_HPP

#include <optional>

#include "qadd/code.hpp"
#include "qadd/gf2.hpp"
#include "qadd/gf4.hpp"

namespace qadd {

/// k x (2^k - 1); column j (1-based) holds the bits of j, row 0 least significant.
Gf2Matrix binary_simplex(int k);

/// k x (2^k - 1) with row i+1 = tau(row i), row 0 the m-sequence of the
/// smallest primitive polynomial of degree k.
Gf2Matrix cyclic_binary_simplex(int k);

/// l x (4^l - 1)/3 over GF(4); one column per projective point (first nonzero
/// entry 1), in lexicographic order with the top entry most significant.
Gf4Matrix quaternary_simplex(int l);

enum class AsepMethod {
    /// Phi(S | A_f S) with A_f the companion matrix of the smallest irreducible f.
    companion,
    /// Rows r_i + w tau(r_i) of the cyclic binary simplex.
    cyclic,
    /// [G wG w^2G; wG w^2G G] from the quaternary simplex; k even.
    integer,
    /// Repeated block lifting from asep(3, companion); k odd.
    iterate,
    /// Star-product layout of iterate(k1) and integer(k2), k1 = 3, k2 = k - 3.
    combine,
};

/// An ASEP [2^k - 1, k/2, 3 * 2^(k-2)] code.
AdditiveCode asep(int k, AsepMethod method = AsepMethod::companion);

/// The combined layout (A1 * A2 | [A1; 0] | [0; A2]) with A1 = asep(k1, iterate)
/// and A2 = asep(k2, integer). k1 >= 3 odd, k2 >= 4 even.
AdditiveCode asep_combine(int k1, int k2);

/// Column (i, j) is column i of a over column j of b, i-major.
Gf4Matrix star(const Gf4Matrix &a, const Gf4Matrix &b);

/// Stacks rows 1_n and w_n; with `extended`, also appends the coordinate sum.
AdditiveCode augment(const AdditiveCode &c, bool extended);

/// Lengthening by an auxiliary code. The last `subcode_rows` rows of `base` span the
/// distinguished subcode; the others are joined with the rows of `aux`, the
/// subcode rows with zeros. An absent aux leaves the base unchanged.
AdditiveCode construction_x(const AdditiveCode &base, size_t subcode_rows, const std::optional<AdditiveCode> &aux);

/// s copies of augment(asep(k), true) side by side, lengthened by c_a on the
/// non-repetition rows. Needs s >= ceil(d(c_a) / 2^(k-2)).
AdditiveCode combination_x(const std::optional<AdditiveCode> &c_a, int s, int k);

enum class AnticodeMode { remove_k1, remove_both, blocks, third_k1, third_both };

/// Codes obtained from asep_combine(k1, k2) by deleting column blocks. `m`
/// (1..3) is only read for `blocks`.
AdditiveCode anticode_family(int k1, int k2, AnticodeMode mode, int m = 1);

/// [(2^k + 1)/3, k/2, 2^(k-2)] for odd k >= 3, with an invariant first row.
AdditiveCode one_third(int k);

/// [(2^k - 2^k2 + 2)/3, k/2, 2^(k-2) - 2^(k2-2)], k odd >= 7, 4 <= k2 <= k - 3 even.
AdditiveCode one_third_minus(int k, int k2);

/// Joins (1_{2^(k-1)-1}; asep(k-1, integer)) to the right of a k-row code.
AdditiveCode enlarge(const AdditiveCode &c, int k);

/// A code whose first `split` rows are the non-subcode part.
struct SplitCode {
    AdditiveCode code;
    size_t split = 0;
};

/// Row-aligned (C1 | C2 | aux) with aux padded by zero rows. Without aux the
/// two-code form is built and c2 must have a dominating split matching c1's.
/// With aux, aux.code must have c1.split rows and a dominating split at
/// c2.split < c1.split. Throws std::invalid_argument on any violation.
AdditiveCode generalized_x(const SplitCode &c1, const SplitCode &c2, const std::optional<SplitCode> &aux);

}  // namespace qadd

#endif
