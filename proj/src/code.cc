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

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "qadd/gf2.hpp"

namespace qadd {

namespace {

// A GF(4) vector as two bitplanes: bit i of lo/hi is the 1/w coefficient of
// coordinate i.
struct Packed {
    std::vector<uint64_t> lo, hi;

    explicit Packed(size_t n) : lo((n + 63) / 64, 0), hi((n + 63) / 64, 0) {}
    explicit Packed(const Gf4Vector &v) : Packed(v.size()) {
        for (size_t i = 0; i < v.size(); i++) {
            lo[i >> 6] |= uint64_t{v[i].real_bit()} << (i & 63);
            hi[i >> 6] |= uint64_t{v[i].w_bit()} << (i & 63);
        }
    }
    void add(const Packed &o) {
        for (size_t k = 0; k < lo.size(); k++) {
            lo[k] ^= o.lo[k];
            hi[k] ^= o.hi[k];
        }
    }
    size_t weight() const {
        size_t w = 0;
        for (size_t k = 0; k < lo.size(); k++) {
            w += std::popcount(lo[k] | hi[k]);
        }
        return w;
    }
    Gf4Vector unpack(size_t n) const {
        Gf4Vector v(n);
        for (size_t i = 0; i < n; i++) {
            const auto b0 = static_cast<uint8_t>((lo[i >> 6] >> (i & 63)) & 1);
            const auto b1 = static_cast<uint8_t>((hi[i >> 6] >> (i & 63)) & 1);
            v[i] = Gf4::from_code(static_cast<uint8_t>(b0 | (b1 << 1)));
        }
        return v;
    }
};

void check_guard(size_t dim2) {
    if (dim2 > kMaxEnumerationDim2) {
        throw std::length_error("enumeration guard exceeded: dim2 = " + std::to_string(dim2));
    }
}

// Visits every nonzero combination of `gens` along a Gray code. The callback
// receives the running codeword and the bitmask of generators in it.
template <typename F>
void gray_walk(const std::vector<Packed> &gens, size_t n, F &&visit) {
    check_guard(gens.size());
    Packed cur(n);
    const uint64_t count = uint64_t{1} << gens.size();
    for (uint64_t i = 1; i < count; i++) {
        cur.add(gens[std::countr_zero(i)]);
        visit(cur, i ^ (i >> 1));
    }
}

std::vector<Packed> packed_basis(const AdditiveCode &c) {
    std::vector<Packed> out;
    for (size_t r : c.basis_rows()) {
        out.emplace_back(c.row(r));
    }
    return out;
}

}  // namespace

uint64_t WeightDistribution::total() const {
    uint64_t t = 0;
    for (uint64_t x : counts) {
        t += x;
    }
    return t;
}

std::optional<size_t> WeightDistribution::min_distance() const {
    for (size_t w = 1; w < counts.size(); w++) {
        if (counts[w]) {
            return w;
        }
    }
    return std::nullopt;
}

std::vector<std::pair<size_t, uint64_t>> WeightDistribution::terms() const {
    std::vector<std::pair<size_t, uint64_t>> out;
    for (size_t w = 0; w < counts.size(); w++) {
        if (counts[w]) {
            out.emplace_back(w, counts[w]);
        }
    }
    return out;
}

std::string WeightDistribution::polynomial() const {
    std::string out;
    for (auto [w, c] : terms()) {
        if (!out.empty()) {
            out += "+";
        }
        if (w == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) {
            out += std::to_string(c);
        }
        out += "z^" + std::to_string(w);
    }
    return out;
}

WeightDistribution WeightDistribution::from_terms(size_t n,
                                                  const std::vector<std::pair<size_t, uint64_t>> &terms) {
    WeightDistribution out;
    out.counts.assign(n + 1, 0);
    for (auto [w, c] : terms) {
        if (w > n) {
            throw std::out_of_range("weight exceeds length");
        }
        out.counts[w] += c;
    }
    return out;
}

std::string dimension_str(size_t dim2) {
    return std::to_string(dim2 / 2) + (dim2 % 2 ? ".5" : "");
}

std::string CodeParams::str() const {
    return "[" + std::to_string(n) + "," + dimension_str(dim2) + "," + (d ? std::to_string(*d) : "-") + "]";
}

AdditiveCode::AdditiveCode(Gf4Matrix generators) : gen_(std::move(generators)) {
    if (gen_.rows() == 0) {
        throw std::invalid_argument("additive code needs at least one row");
    }
    if (gen_.cols() == 0) {
        throw std::invalid_argument("additive code needs positive length");
    }
    std::vector<BitVector> pre;
    pre.reserve(gen_.rows());
    for (const auto &r : gen_.row_vectors()) {
        pre.push_back(phi_inv(r));
    }
    basis_ = independent_rows(Gf2Matrix(std::move(pre)));
}

AdditiveCode make_code(std::vector<Gf4Vector> rows) { return AdditiveCode(Gf4Matrix(std::move(rows))); }

AdditiveCode make_code(const Gf4Matrix &m) { return AdditiveCode(m); }

WeightDistribution weight_distribution(const AdditiveCode &c) {
    WeightDistribution out;
    out.counts.assign(c.n() + 1, 0);
    out.counts[0] = 1;
    gray_walk(packed_basis(c), c.n(), [&](const Packed &cw, uint64_t) { out.counts[cw.weight()]++; });
    return out;
}

CodeParams params(const AdditiveCode &c) {
    return CodeParams{c.n(), c.dim2(), weight_distribution(c).min_distance()};
}

bool is_asep(const AdditiveCode &c) {
    bool ok = true;
    gray_walk(packed_basis(c), c.n(), [&](const Packed &cw, uint64_t) {
        if (!ok) {
            return;
        }
        size_t ones = 0, ws = 0, w2s = 0;
        for (size_t k = 0; k < cw.lo.size(); k++) {
            ones += std::popcount(cw.lo[k] & ~cw.hi[k]);
            ws += std::popcount(cw.hi[k] & ~cw.lo[k]);
            w2s += std::popcount(cw.lo[k] & cw.hi[k]);
        }
        ok = ones == ws && ws == w2s;
    });
    return ok;
}

Gf4Vector min_weight_codeword(const AdditiveCode &c) {
    size_t best = std::numeric_limits<size_t>::max();
    std::optional<Gf4Vector> found;
    gray_walk(packed_basis(c), c.n(), [&](const Packed &cw, uint64_t) {
        const size_t w = cw.weight();
        if (w > 0 && w < best) {
            best = w;
            found = cw.unpack(c.n());
        }
    });
    if (!found) {
        throw std::invalid_argument("zero code has no minimum-weight codeword");
    }
    return *found;
}

std::vector<Gf4Vector> codewords(const AdditiveCode &c) {
    std::vector<Gf4Vector> out{Gf4Vector(c.n())};
    gray_walk(packed_basis(c), c.n(), [&](const Packed &cw, uint64_t) { out.push_back(cw.unpack(c.n())); });
    return out;
}

AdditiveCode juxtapose(const AdditiveCode &c1, const AdditiveCode &c2) {
    if (c1.row_count() != c2.row_count()) {
        throw std::invalid_argument("juxtapose: row count mismatch");
    }
    if (!c1.full_rank() || !c2.full_rank()) {
        throw std::invalid_argument("juxtapose: inputs must have independent rows");
    }
    return AdditiveCode(c1.generators().hconcat(c2.generators()));
}

AdditiveCode puncture(const AdditiveCode &c, size_t index) {
    if (index >= c.n()) {
        throw std::out_of_range("puncture: index out of range");
    }
    std::vector<size_t> keep;
    for (size_t j = 0; j < c.n(); j++) {
        if (j != index) {
            keep.push_back(j);
        }
    }
    return AdditiveCode(c.generators().select_columns(keep));
}

AdditiveCode extend_parity(const AdditiveCode &c) {
    std::vector<Gf4Vector> rows;
    for (const auto &r : c.generators().row_vectors()) {
        Gf4Vector e = r;
        e.push_back(r.coordinate_sum());
        rows.push_back(std::move(e));
    }
    return make_code(std::move(rows));
}

AdditiveCode multiset_subtract(const AdditiveCode &c, const std::vector<size_t> &columns) {
    std::vector<bool> drop(c.n(), false);
    for (size_t j : columns) {
        if (j >= c.n()) {
            throw std::out_of_range("multiset_subtract: column out of range");
        }
        if (drop[j]) {
            throw std::invalid_argument("multiset_subtract: repeated column");
        }
        drop[j] = true;
    }
    std::vector<size_t> keep;
    for (size_t j = 0; j < c.n(); j++) {
        if (!drop[j]) {
            keep.push_back(j);
        }
    }
    return AdditiveCode(c.generators().select_columns(keep));
}

AdditiveCode stack_rows(const AdditiveCode &c, const std::vector<Gf4Vector> &extra) {
    return AdditiveCode(c.generators().vconcat(Gf4Matrix(extra)));
}

InvariantSplit invariant_split_check(const AdditiveCode &c, size_t split) {
    if (split == 0 || split >= c.row_count()) {
        throw std::invalid_argument("invariant_split_check: split out of range");
    }
    if (!c.full_rank()) {
        throw std::invalid_argument("invariant_split_check: rows are not independent");
    }
    std::vector<Packed> gens;
    for (const auto &r : c.generators().row_vectors()) {
        gens.emplace_back(r);
    }
    const uint64_t upper = (uint64_t{1} << split) - 1;
    InvariantSplit out;
    out.delta1 = std::numeric_limits<size_t>::max();
    out.delta2 = std::numeric_limits<size_t>::max();
    gray_walk(gens, c.n(), [&](const Packed &cw, uint64_t mask) {
        const size_t w = cw.weight();
        if (mask & upper) {
            out.delta2 = std::min(out.delta2, w);
            out.delta2_max = std::max(out.delta2_max, w);
        } else {
            out.delta1 = std::min(out.delta1, w);
        }
    });
    out.dominates = out.delta2 > out.delta1;
    out.is_invariant = out.dominates && out.delta2 == out.delta2_max;
    return out;
}

}  // namespace qadd
