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

#ifndef QADD_GF4_HPP
#define QADD_GF4_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qadd {

/// An element of GF(4) = {0, 1, w, w^2} with w^2 = w + 1.
///
/// The integer code is 0, 1, 2, 3 for 0, 1, w, w^2. Bit 0 of the code is the
/// coefficient of 1 and bit 1 the coefficient of w, so field addition is XOR
/// of codes.
class Gf4 {
   public:
    constexpr Gf4() = default;

    static constexpr Gf4 from_code(uint8_t code) {
        Gf4 r;
        r.code_ = code & 3;
        return r;
    }
    static constexpr Gf4 zero() { return from_code(0); }
    static constexpr Gf4 one() { return from_code(1); }
    static constexpr Gf4 w() { return from_code(2); }
    static constexpr Gf4 w2() { return from_code(3); }

    /// Parses one of '0', '1', 'w', 'W' (W is w^2).
    static Gf4 from_char(char c);

    constexpr uint8_t code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }
    /// Coefficient of 1 in the {1, w} basis.
    constexpr bool real_bit() const { return code_ & 1; }
    /// Coefficient of w in the {1, w} basis.
    constexpr bool w_bit() const { return (code_ >> 1) & 1; }
    char to_char() const;

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return from_code(a.code_ ^ b.code_); }
    friend constexpr Gf4 operator-(Gf4 a, Gf4 b) { return a + b; }
    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) {
        // (a0 + w a1)(b0 + w b1) = a0 b0 + a1 b1 + w (a0 b1 + a1 b0 + a1 b1)
        const uint8_t a0 = a.code_ & 1, a1 = a.code_ >> 1;
        const uint8_t b0 = b.code_ & 1, b1 = b.code_ >> 1;
        const uint8_t lo = (a0 & b0) ^ (a1 & b1);
        const uint8_t hi = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        return from_code(static_cast<uint8_t>(lo | (hi << 1)));
    }
    constexpr Gf4 &operator+=(Gf4 other) {
        code_ ^= other.code_;
        return *this;
    }
    friend constexpr bool operator==(Gf4, Gf4) = default;

   private:
    uint8_t code_ = 0;
};

enum class Gf4Op { add, mul };

constexpr Gf4 gf4_arith(Gf4 a, Gf4 b, Gf4Op op) { return op == Gf4Op::add ? a + b : a * b; }

/// The four field elements in code order.
inline constexpr std::array<Gf4, 4> kGf4Elements = {Gf4::zero(), Gf4::one(), Gf4::w(), Gf4::w2()};

/// Fixed-length vector over GF(4).
class Gf4Vector {
   public:
    Gf4Vector() = default;
    explicit Gf4Vector(size_t n, Gf4 fill = Gf4::zero()) : symbols_(n, fill) {}
    explicit Gf4Vector(std::vector<Gf4> symbols) : symbols_(std::move(symbols)) {}
    Gf4Vector(std::initializer_list<Gf4> symbols) : symbols_(symbols) {}

    /// Parses a string over the alphabet {0, 1, w, W}.
    static Gf4Vector parse(std::string_view text);

    size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Gf4 operator[](size_t i) const { return symbols_[i]; }
    Gf4 &operator[](size_t i) { return symbols_[i]; }
    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }
    const std::vector<Gf4> &symbols() const { return symbols_; }

    bool is_zero() const;
    Gf4 coordinate_sum() const;
    Gf4Vector scaled(Gf4 factor) const;
    Gf4Vector concat(const Gf4Vector &tail) const;
    void push_back(Gf4 s) { symbols_.push_back(s); }
    std::string str() const;

    Gf4Vector &operator+=(const Gf4Vector &other);
    friend Gf4Vector operator+(Gf4Vector a, const Gf4Vector &b) { return a += b; }
    friend bool operator==(const Gf4Vector &, const Gf4Vector &) = default;
    friend auto operator<=>(const Gf4Vector &a, const Gf4Vector &b) {
        return std::lexicographical_compare_three_way(
            a.symbols_.begin(), a.symbols_.end(), b.symbols_.begin(), b.symbols_.end(),
            [](Gf4 x, Gf4 y) { return x.code() <=> y.code(); });
    }

   private:
    std::vector<Gf4> symbols_;
};

struct SymbolCounts {
    size_t hamming = 0;
    /// Indexed by symbol code: 0, 1, w, w^2.
    std::array<size_t, 4> per_symbol{};
};

SymbolCounts weights(const Gf4Vector &v);

/// Dense matrix over GF(4) stored by rows.
class Gf4Matrix {
   public:
    Gf4Matrix() = default;
    Gf4Matrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, Gf4Vector(cols)) {}
    /// Rows must share one length.
    explicit Gf4Matrix(std::vector<Gf4Vector> rows);

    static Gf4Matrix from_columns(const std::vector<Gf4Vector> &columns);
    static Gf4Matrix parse(std::initializer_list<std::string_view> rows);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    const Gf4Vector &row(size_t i) const { return rows_[i]; }
    const std::vector<Gf4Vector> &row_vectors() const { return rows_; }
    Gf4 at(size_t r, size_t c) const { return rows_[r][c]; }
    void set(size_t r, size_t c, Gf4 v) { rows_[r][c] = v; }

    Gf4Vector column(size_t c) const;
    std::vector<Gf4Vector> columns() const;
    Gf4Matrix select_columns(const std::vector<size_t> &indices) const;
    Gf4Matrix select_rows(size_t first, size_t count) const;

    /// Horizontal join; row counts must agree.
    Gf4Matrix hconcat(const Gf4Matrix &right) const;
    /// Vertical join; column counts must agree.
    Gf4Matrix vconcat(const Gf4Matrix &below) const;

    friend bool operator==(const Gf4Matrix &, const Gf4Matrix &) = default;

   private:
    size_t cols_ = 0;
    std::vector<Gf4Vector> rows_;
};

/// The additive forms of all nonzero vectors of GF(4)^m, in lexicographic
/// order of the source vector (first coordinate most significant). The
/// additive form of (m_0, ..., m_{m-1}) is (m_0, w m_0, m_1, w m_1, ...).
std::vector<Gf4Vector> additive_form_vectors(int m);

}  // namespace qadd

#endif
