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


#ifndef QADD_POLYNOMIAL_HPP
#define QADD_POLYNOMIAL_HPP

#include <cstdint>
#include <string>

namespace qadd {

/// Monic polynomial over GF(2). Bit i of `bits` is the coefficient of x^i.
class BinaryPolynomial {
   public:
    explicit BinaryPolynomial(uint64_t bits);

    int degree() const;
    bool coefficient(int i) const { return (bits_ >> i) & 1; }
    uint64_t bits() const { return bits_; }
    /// e.g. "x^3 + x + 1".
    std::string str() const;

    friend bool operator==(const BinaryPolynomial &, const BinaryPolynomial &) = default;

   private:
    uint64_t bits_;
};

enum class PolyKind { irreducible, primitive };

/// Smallest (by integer value of the coefficient bits) monic polynomial of
/// degree k with the requested property. Degree-1 irreducible is x + 1.
/// Supports 1 <= k <= 16; primitive needs k >= 2.
BinaryPolynomial find_polynomial(int k, PolyKind kind);

/// Remainder of a modulo b over GF(2).
uint64_t poly_mod(uint64_t a, uint64_t b);
bool is_irreducible(uint64_t f);
bool is_primitive(uint64_t f);

}  // namespace qadd

#endif
