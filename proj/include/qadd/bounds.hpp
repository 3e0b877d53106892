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


#ifndef QADD_BOUNDS_HPP
#define QADD_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qadd/code.hpp"
#include "qadd/gf2.hpp"

namespace qadd {

/// Sum over i in [0, dim2) of ceil(d2 / 2^i). dim2 >= 1, d2 even >= 2.
uint64_t griesmer_g(size_t dim2, uint64_t d2);

struct OptimalityClass {
    bool meets_griesmer = false;
    bool gdo = false;
    bool gpo = false;
    friend bool operator==(const OptimalityClass &, const OptimalityClass &) = default;
};

OptimalityClass classify(size_t n, size_t dim2, size_t d);

/// 3n - g(dim2, 2d); negative values mean the bound is violated.
int64_t griesmer_gap(size_t n, size_t dim2, size_t d);

struct BinaryImage {
    Gf2Matrix generator;  // one row per generator of the source code
    size_t n = 0;
    size_t rank = 0;
    std::optional<size_t> d;
};

/// Replaces every symbol by 0->000, 1->110, w->101, w^2->011 and enumerates the image.
BinaryImage concat_binary(const AdditiveCode &c);

struct NonexistenceFact {
    size_t n = 0;
    size_t dim2 = 0;
    size_t d = 0;
    std::string source;
};

/// One of the four embedded length-18/19/26/27 facts for dim2 = 7, if it matches.
std::optional<NonexistenceFact> nonexistence(size_t n, size_t dim2, size_t d);

/// (n + 2^dim2 - 1, dim2, d + 3 * 2^(dim2-2)); the input must be GPO.
CodeParams period_shift(size_t n, size_t dim2, size_t d);

}  // namespace qadd

#endif
