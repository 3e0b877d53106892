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


#ifndef QADD_TESTS_ORACLE_TEST_H
#define QADD_TESTS_ORACLE_TEST_H

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qadd/code.hpp"

namespace qadd_test {

/// Closure of the rows under addition, kept as strings. Independent of the
/// library's Gray-code walk and rank computation.
inline std::set<std::string> brute_span(const qadd::AdditiveCode &c) {
    std::set<std::string> span{qadd::Gf4Vector(c.n()).str()};
    for (const auto &r : c.generators().row_vectors()) {
        std::set<std::string> next = span;
        for (const auto &s : span) {
            next.insert((qadd::Gf4Vector::parse(s) + r).str());
        }
        span = std::move(next);
    }
    return span;
}

inline std::map<size_t, uint64_t> brute_distribution(const qadd::AdditiveCode &c) {
    std::map<size_t, uint64_t> out;
    for (const auto &s : brute_span(c)) {
        size_t w = 0;
        for (char ch : s) {
            w += ch != '0';
        }
        out[w]++;
    }
    return out;
}

inline std::map<size_t, uint64_t> as_map(const qadd::WeightDistribution &w) {
    std::map<size_t, uint64_t> out;
    for (auto [k, v] : w.terms()) {
        out[k] = v;
    }
    return out;
}

inline qadd::Gf4Vector random_vector(std::mt19937_64 &rng, size_t n) {
    qadd::Gf4Vector v(n);
    for (size_t i = 0; i < n; i++) {
        v[i] = qadd::Gf4::from_code(static_cast<uint8_t>(rng() & 3));
    }
    return v;
}

inline qadd::AdditiveCode random_code(std::mt19937_64 &rng, size_t rows, size_t n) {
    std::vector<qadd::Gf4Vector> out;
    for (size_t i = 0; i < rows; i++) {
        out.push_back(random_vector(rng, n));
    }
    return qadd::make_code(std::move(out));
}

}  // namespace qadd_test

#endif
