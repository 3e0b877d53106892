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


#include "qadd/constructions.hpp"

#include <stdexcept>
#include <string>

#include "qadd/polynomial.hpp"

namespace qadd {

namespace {

void require(bool ok, const std::string &msg) {
    if (!ok) {
        throw std::invalid_argument(msg);
    }
}

Gf4Matrix zeros(size_t rows, size_t cols) { return Gf4Matrix(rows, cols); }

// Row i of the result is phi(top_i | bottom_i) = top_i + w bottom_i.
Gf4Matrix combine_planes(const std::vector<BitVector> &top, const std::vector<BitVector> &bottom) {
    std::vector<Gf4Vector> rows;
    for (size_t i = 0; i < top.size(); i++) {
        const size_t n = top[i].size();
        Gf4Vector r(n);
        for (size_t j = 0; j < n; j++) {
            r[j] = Gf4::from_code(static_cast<uint8_t>(top[i].get(j) | (bottom[i].get(j) << 1)));
        }
        rows.push_back(std::move(r));
    }
    return Gf4Matrix(std::move(rows));
}

Gf4Matrix asep_companion(int k) {
    const BinaryPolynomial f = find_polynomial(k, PolyKind::irreducible);
    const Gf2Matrix s = binary_simplex(k);
    std::vector<BitVector> top = s.row_vectors(), bottom;
    for (int i = 0; i + 1 < k; i++) {
        bottom.push_back(s.row(i + 1));
    }
    BitVector last(s.cols());
    for (int i = 0; i < k; i++) {
        if (f.coefficient(i)) {
            last ^= s.row(i);
        }
    }
    bottom.push_back(last);
    return combine_planes(top, bottom);
}

Gf4Matrix asep_cyclic(int k) {
    const Gf2Matrix s = cyclic_binary_simplex(k);
    std::vector<BitVector> bottom;
    for (const auto &r : s.row_vectors()) {
        bottom.push_back(cyclic_shift(r));
    }
    return combine_planes(s.row_vectors(), bottom);
}

Gf4Matrix asep_integer(int k) {
    require(k >= 2 && k % 2 == 0, "asep integer: k must be even and >= 2");
    const Gf4Matrix g = quaternary_simplex(k / 2);
    std::vector<Gf4Vector> rows;
    for (size_t i = 0; i < g.rows(); i++) {
        const Gf4Vector &r = g.row(i);
        rows.push_back(r.concat(r.scaled(Gf4::w())).concat(r.scaled(Gf4::w2())));
    }
    for (size_t i = 0; i < g.rows(); i++) {
        const Gf4Vector &r = g.row(i);
        rows.push_back(r.scaled(Gf4::w()).concat(r.scaled(Gf4::w2())).concat(r));
    }
    return Gf4Matrix(std::move(rows));
}

// [A A A A 000; 0 1 w w^2 | 1 w w^2; 0 w w^2 1 | w w^2 1].
Gf4Matrix lift(const Gf4Matrix &a) {
    const size_t n = a.cols();
    std::vector<Gf4Vector> rows;
    for (const auto &r : a.row_vectors()) {
        rows.push_back(r.concat(r).concat(r).concat(r).concat(Gf4Vector(3)));
    }
    const Gf4 one = Gf4::one(), w = Gf4::w(), w2 = Gf4::w2();
    rows.push_back(Gf4Vector(n)
                       .concat(Gf4Vector(n, one))
                       .concat(Gf4Vector(n, w))
                       .concat(Gf4Vector(n, w2))
                       .concat(Gf4Vector{one, w, w2}));
    rows.push_back(Gf4Vector(n)
                       .concat(Gf4Vector(n, w))
                       .concat(Gf4Vector(n, w2))
                       .concat(Gf4Vector(n, one))
                       .concat(Gf4Vector{w, w2, one}));
    return Gf4Matrix(std::move(rows));
}

Gf4Matrix asep_iterate(int k) {
    require(k >= 3 && k % 2 == 1, "asep iterate: k must be odd and >= 3");
    Gf4Matrix a = asep_companion(3);
    for (int j = 3; j < k; j += 2) {
        a = lift(a);
    }
    return a;
}

struct CombinedLayout {
    Gf4Matrix matrix;
    size_t n1 = 0;  // columns of the k1 part
    size_t n2 = 0;  // columns of the k2 part
};

CombinedLayout combined_layout(int k1, int k2) {
    require(k1 >= 3 && k1 % 2 == 1, "combine: k1 must be odd and >= 3");
    require(k2 >= 4 && k2 % 2 == 0, "combine: k2 must be even and >= 4");
    const Gf4Matrix a = asep_iterate(k1);
    const Gf4Matrix b = asep_integer(k2);
    CombinedLayout out;
    out.n1 = a.cols();
    out.n2 = b.cols();
    out.matrix = star(a, b)
                     .hconcat(a.vconcat(zeros(b.rows(), a.cols())))
                     .hconcat(zeros(a.rows(), b.cols()).vconcat(b));
    return out;
}

// The first third [G; wG] of the integer ASEP of dimension k2.
Gf4Matrix first_third(int k2) {
    const Gf4Matrix b = asep_integer(k2);
    std::vector<size_t> cols;
    for (size_t j = 0; j < b.cols() / 3; j++) {
        cols.push_back(j);
    }
    return b.select_columns(cols);
}

Gf4Matrix append_zero_column(const Gf4Matrix &a) { return a.hconcat(zeros(a.rows(), 1)); }

std::vector<size_t> range_complement(size_t n, size_t first, size_t count) {
    std::vector<size_t> out;
    for (size_t j = 0; j < n; j++) {
        if (j < first || j >= first + count) {
            out.push_back(j);
        }
    }
    return out;
}

}  // namespace

Gf2Matrix binary_simplex(int k) {
    require(k >= 1 && k <= 20, "binary simplex: k out of range");
    const size_t n = (size_t{1} << k) - 1;
    Gf2Matrix m(static_cast<size_t>(k), n);
    for (size_t j = 1; j <= n; j++) {
        for (int i = 0; i < k; i++) {
            m.set(static_cast<size_t>(i), j - 1, (j >> i) & 1);
        }
    }
    return m;
}

Gf2Matrix cyclic_binary_simplex(int k) {
    require(k >= 2 && k <= 16, "cyclic simplex: k out of range");
    const BinaryPolynomial f = find_polynomial(k, PolyKind::primitive);
    const size_t n = (size_t{1} << k) - 1;
    // s_{j+k} = sum_i f_i s_{j+i}, seeded with (1, 0, ..., 0).
    BitVector seq(n);
    seq.set(0, true);
    for (size_t j = 0; j + static_cast<size_t>(k) < n; j++) {
        bool next = false;
        for (int i = 0; i < k; i++) {
            next ^= f.coefficient(i) && seq.get(j + static_cast<size_t>(i));
        }
        seq.set(j + static_cast<size_t>(k), next);
    }
    std::vector<BitVector> rows{seq};
    for (int i = 1; i < k; i++) {
        rows.push_back(cyclic_shift(rows.back()));
    }
    return Gf2Matrix(std::move(rows));
}

Gf4Matrix quaternary_simplex(int l) {
    require(l >= 1 && l <= 10, "quaternary simplex: l out of range");
    std::vector<Gf4Vector> cols;
    const size_t count = size_t{1} << (2 * l);
    for (size_t x = 1; x < count; x++) {
        Gf4Vector col(static_cast<size_t>(l));
        for (int i = 0; i < l; i++) {
            col[static_cast<size_t>(i)] = Gf4::from_code(static_cast<uint8_t>((x >> (2 * (l - 1 - i))) & 3));
        }
        for (Gf4 s : col) {
            if (!s.is_zero()) {
                if (s == Gf4::one()) {
                    cols.push_back(col);
                }
                break;
            }
        }
    }
    return Gf4Matrix::from_columns(cols);
}

AdditiveCode asep(int k, AsepMethod method) {
    require(k >= 2, "asep: k must be >= 2");
    switch (method) {
        case AsepMethod::companion:
            require(k >= 3 && k <= 20, "asep companion: k out of range");
            return make_code(asep_companion(k));
        case AsepMethod::cyclic:
            require(k >= 3 && k <= 16, "asep cyclic: k out of range");
            return make_code(asep_cyclic(k));
        case AsepMethod::integer:
            return make_code(asep_integer(k));
        case AsepMethod::iterate:
            return make_code(asep_iterate(k));
        case AsepMethod::combine:
            return asep_combine(3, k - 3);
    }
    throw std::invalid_argument("asep: unknown method");
}

AdditiveCode asep_combine(int k1, int k2) { return make_code(combined_layout(k1, k2).matrix); }

Gf4Matrix star(const Gf4Matrix &a, const Gf4Matrix &b) {
    std::vector<Gf4Vector> cols;
    cols.reserve(a.cols() * b.cols());
    const auto bc = b.columns();
    for (const auto &ca : a.columns()) {
        for (const auto &cb : bc) {
            cols.push_back(ca.concat(cb));
        }
    }
    if (cols.empty()) {
        return zeros(a.rows() + b.rows(), 0);
    }
    return Gf4Matrix::from_columns(cols);
}

AdditiveCode augment(const AdditiveCode &c, bool extended) {
    const size_t n = c.n();
    require(n >= 3 && ((n + 1) & n) == 0, "augment: length must be 2^k - 1");
    require(c.full_rank() && (size_t{1} << c.dim2()) == n + 1, "augment: input must have 2^dim2 = n + 1");
    require(is_asep(c), "augment: input must be ASEP");
    AdditiveCode out = stack_rows(c, {Gf4Vector(n, Gf4::one()), Gf4Vector(n, Gf4::w())});
    return extended ? extend_parity(out) : out;
}

AdditiveCode construction_x(const AdditiveCode &base, size_t subcode_rows, const std::optional<AdditiveCode> &aux) {
    require(subcode_rows < base.row_count(), "construction_x: subcode must leave non-subcode rows");
    require(base.full_rank(), "construction_x: base rows must be independent");
    if (!aux) {
        return base;
    }
    const size_t top = base.row_count() - subcode_rows;
    require(aux->row_count() == top, "construction_x: auxiliary row count must match non-subcode rows");
    require(aux->full_rank(), "construction_x: auxiliary rows must be independent");
    const Gf4Matrix upper = base.generators().select_rows(0, top).hconcat(aux->generators());
    const Gf4Matrix lower = base.generators().select_rows(top, subcode_rows).hconcat(zeros(subcode_rows, aux->n()));
    return make_code(upper.vconcat(lower));
}

AdditiveCode combination_x(const std::optional<AdditiveCode> &c_a, int s, int k) {
    require(s >= 1, "combination_x: s must be positive");
    require(k >= 3, "combination_x: k must be >= 3");
    if (c_a) {
        const size_t d = weight_distribution(*c_a).min_distance().value_or(0);
        const size_t unit = size_t{1} << (k - 2);
        require(static_cast<size_t>(s) >= (d + unit - 1) / unit, "combination_x: s below ceil(d / 2^(k-2))");
    }
    const AdditiveCode block = augment(asep(k), true);
    AdditiveCode base = block;
    for (int i = 1; i < s; i++) {
        base = juxtapose(base, block);
    }
    return construction_x(base, 2, c_a);
}

AdditiveCode anticode_family(int k1, int k2, AnticodeMode mode, int m) {
    switch (mode) {
        case AnticodeMode::remove_k1: {
            const CombinedLayout l = combined_layout(k1, k2);
            return make_code(l.matrix.select_columns(range_complement(l.matrix.cols(), l.n1 * l.n2, l.n1)));
        }
        case AnticodeMode::remove_both: {
            const CombinedLayout l = combined_layout(k1, k2);
            return make_code(l.matrix.select_columns(range_complement(l.matrix.cols(), l.n1 * l.n2, l.n1 + l.n2)));
        }
        case AnticodeMode::blocks: {
            require(m >= 1 && m <= 3, "anticode blocks: m must be in 1..3");
            const CombinedLayout l = combined_layout(k1, k2);
            const size_t third = l.n2 / 3;
            const size_t start = l.n1 * l.n2 + l.n1;
            return make_code(
                l.matrix.select_columns(range_complement(l.matrix.cols(), start, third * static_cast<size_t>(m))));
        }
        case AnticodeMode::third_k1:
            require(k1 >= 3 && k1 % 2 == 1, "anticode: k1 must be odd and >= 3");
            return make_code(star(append_zero_column(asep_iterate(k1)), first_third(k2)));
        case AnticodeMode::third_both:
            require(k1 >= 3 && k1 % 2 == 1, "anticode: k1 must be odd and >= 3");
            require(k2 >= 4 && k2 % 2 == 0, "anticode: k2 must be even and >= 4");
            return make_code(star(asep_iterate(k1), first_third(k2)));
    }
    throw std::invalid_argument("anticode: unknown mode");
}

AdditiveCode one_third(int k) {
    require(k >= 3 && k % 2 == 1 && k <= 15, "one_third: k must be odd in 3..15");
    if (k == 3) {
        return make_code(Gf4Matrix::parse({"www", "110", "011"}));
    }
    return construction_x(augment(asep(k - 2), true), 2, one_third(k - 2));
}

AdditiveCode one_third_minus(int k, int k2) {
    require(k >= 7 && k % 2 == 1, "one_third_minus: k must be odd and >= 7");
    require(k2 >= 4 && k2 % 2 == 0 && k2 <= k - 3, "one_third_minus: k2 must be even in 4..k-3");
    const int k1 = k - k2;
    return construction_x(anticode_family(k1, k2, AnticodeMode::third_both), static_cast<size_t>(k2), one_third(k1));
}

AdditiveCode enlarge(const AdditiveCode &c, int k) {
    require(k >= 3 && k % 2 == 1, "enlarge: k must be odd and >= 3");
    require(c.row_count() == static_cast<size_t>(k), "enlarge: code must have k rows");
    const Gf4Matrix a = asep_integer(k - 1);
    const Gf4Matrix block = Gf4Matrix(std::vector<Gf4Vector>{Gf4Vector(a.cols(), Gf4::one())}).vconcat(a);
    return make_code(c.generators().hconcat(block));
}

AdditiveCode generalized_x(const SplitCode &c1, const SplitCode &c2, const std::optional<SplitCode> &aux) {
    const size_t k = c1.code.row_count();
    require(c2.code.row_count() == k, "generalized_x: codes must have equal row counts");
    require(c1.code.full_rank() && c2.code.full_rank(), "generalized_x: rows must be independent");
    require(c1.split > 0 && c1.split < k, "generalized_x: c1 split out of range");
    require(c2.split > 0 && c2.split < k, "generalized_x: c2 split out of range");
    if (!aux) {
        require(c2.split == c1.split, "generalized_x: invariant part must match c1's non-subcode rows");
        require(invariant_split_check(c2.code, c2.split).dominates, "generalized_x: c2 split is not invariant");
        return make_code(c1.code.generators().hconcat(c2.code.generators()));
    }
    require(c1.split > c2.split, "generalized_x: need k1 > k2");
    require(aux->code.row_count() == c1.split, "generalized_x: auxiliary must have k1 rows");
    require(aux->split == c2.split, "generalized_x: auxiliary invariant part must have k2 rows");
    require(aux->code.full_rank(), "generalized_x: auxiliary rows must be independent");
    require(invariant_split_check(aux->code, aux->split).dominates, "generalized_x: auxiliary split is not invariant");
    const Gf4Matrix padded = aux->code.generators().vconcat(zeros(k - c1.split, aux->code.n()));
    return make_code(c1.code.generators().hconcat(c2.code.generators()).hconcat(padded));
}

}  // namespace qadd
