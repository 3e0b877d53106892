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


#include "qadd/polynomial.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace qadd {

namespace {

int deg(uint64_t p) { return p ? 63 - std::countl_zero(p) : -1; }

// a*b mod f, all over GF(2).
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t f) {
    const int k = deg(f);
    uint64_t acc = 0;
    while (b) {
        if (b & 1) {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if ((a >> k) & 1) {
            a ^= f;
        }
    }
    return acc;
}

}  // namespace

BinaryPolynomial::BinaryPolynomial(uint64_t bits) : bits_(bits) {
    if (bits == 0) {
        throw std::invalid_argument("zero polynomial");
    }
}

int BinaryPolynomial::degree() const { return deg(bits_); }

std::string BinaryPolynomial::str() const {
    std::string out;
    for (int i = degree(); i >= 0; i--) {
        if (!coefficient(i)) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (i == 0) {
            out += "1";
        } else if (i == 1) {
            out += "x";
        } else {
            out += "x^" + std::to_string(i);
        }
    }
    return out;
}

uint64_t poly_mod(uint64_t a, uint64_t b) {
    const int db = deg(b);
    if (db < 0) {
        throw std::invalid_argument("poly_mod by zero");
    }
    for (int da = deg(a); da >= db; da = deg(a)) {
        a ^= b << (da - db);
    }
    return a;
}

bool is_irreducible(uint64_t f) {
    const int k = deg(f);
    if (k < 1 || !(f & 1)) {
        return false;
    }
    // Trial division by every polynomial of degree 1 .. k/2.
    for (uint64_t d = 2; deg(d) <= k / 2; d++) {
        if (poly_mod(f, d) == 0) {
            return false;
        }
    }
    return true;
}

bool is_primitive(uint64_t f) {
    const int k = deg(f);
    if (k < 2 || !is_irreducible(f)) {
        return false;
    }
    const uint64_t order = (uint64_t{1} << k) - 1;
    // x has order dividing 2^k - 1; primitive iff x^(order/p) != 1 for each prime p | order.
    std::vector<uint64_t> primes;
    uint64_t rest = order;
    for (uint64_t p = 2; p * p <= rest; p++) {
        if (rest % p == 0) {
            primes.push_back(p);
            while (rest % p == 0) {
                rest /= p;
            }
        }
    }
    if (rest > 1) {
        primes.push_back(rest);
    }
    for (uint64_t p : primes) {
        uint64_t e = order / p, base = 2 % f, acc = 1;
        while (e) {
            if (e & 1) {
                acc = mulmod(acc, base, f);
            }
            base = mulmod(base, base, f);
            e >>= 1;
        }
        if (acc == 1) {
            return false;
        }
    }
    return true;
}

BinaryPolynomial find_polynomial(int k, PolyKind kind) {
    if (k < 1 || k > 16 || (kind == PolyKind::primitive && k < 2)) {
        throw std::invalid_argument("find_polynomial: degree out of range");
    }
    for (uint64_t f = (uint64_t{1} << k) | 1; f < (uint64_t{2} << k); f += 2) {
        if (kind == PolyKind::irreducible ? is_irreducible(f) : is_primitive(f)) {
            return BinaryPolynomial(f);
        }
    }
    throw std::logic_error("no polynomial found");
}

}  // namespace qadd
