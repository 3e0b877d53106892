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

#include <stdexcept>

namespace qadd {

Gf4 Gf4::from_char(char c) {
    switch (c) {
        case '0':
            return zero();
        case '1':
            return one();
        case 'w':
            return w();
        case 'W':
            return w2();
        default:
            throw std::invalid_argument(std::string("not a GF(4) symbol: '") + c + "'");
    }
}

char Gf4::to_char() const { return "01wW"[code_]; }

Gf4Vector Gf4Vector::parse(std::string_view text) {
    std::vector<Gf4> out;
    out.reserve(text.size());
    for (char c : text) {
        out.push_back(Gf4::from_char(c));
    }
    return Gf4Vector(std::move(out));
}

bool Gf4Vector::is_zero() const {
    for (Gf4 s : symbols_) {
        if (!s.is_zero()) {
            return false;
        }
    }
    return true;
}

Gf4 Gf4Vector::coordinate_sum() const {
    Gf4 acc;
    for (Gf4 s : symbols_) {
        acc += s;
    }
    return acc;
}

Gf4Vector Gf4Vector::scaled(Gf4 factor) const {
    Gf4Vector out(*this);
    for (auto &s : out.symbols_) {
        s = s * factor;
    }
    return out;
}

Gf4Vector Gf4Vector::concat(const Gf4Vector &tail) const {
    Gf4Vector out(*this);
    out.symbols_.insert(out.symbols_.end(), tail.symbols_.begin(), tail.symbols_.end());
    return out;
}

std::string Gf4Vector::str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Gf4 s : symbols_) {
        out.push_back(s.to_char());
    }
    return out;
}

Gf4Vector &Gf4Vector::operator+=(const Gf4Vector &other) {
    if (other.size() != size()) {
        throw std::invalid_argument("GF(4) vector length mismatch");
    }
    for (size_t i = 0; i < symbols_.size(); i++) {
        symbols_[i] += other.symbols_[i];
    }
    return *this;
}

SymbolCounts weights(const Gf4Vector &v) {
    SymbolCounts out;
    for (Gf4 s : v) {
        out.per_symbol[s.code()]++;
    }
    out.hamming = v.size() - out.per_symbol[0];
    return out;
}

Gf4Matrix::Gf4Matrix(std::vector<Gf4Vector> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : rows_.front().size();
    for (const auto &r : rows_) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged GF(4) matrix rows");
        }
    }
}

Gf4Matrix Gf4Matrix::from_columns(const std::vector<Gf4Vector> &columns) {
    if (columns.empty()) {
        return {};
    }
    const size_t height = columns.front().size();
    Gf4Matrix out(height, columns.size());
    for (size_t c = 0; c < columns.size(); c++) {
        if (columns[c].size() != height) {
            throw std::invalid_argument("ragged GF(4) matrix columns");
        }
        for (size_t r = 0; r < height; r++) {
            out.rows_[r][c] = columns[c][r];
        }
    }
    return out;
}

Gf4Matrix Gf4Matrix::parse(std::initializer_list<std::string_view> rows) {
    std::vector<Gf4Vector> out;
    for (auto r : rows) {
        out.push_back(Gf4Vector::parse(r));
    }
    return Gf4Matrix(std::move(out));
}

Gf4Vector Gf4Matrix::column(size_t c) const {
    Gf4Vector out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        out[r] = rows_[r][c];
    }
    return out;
}

std::vector<Gf4Vector> Gf4Matrix::columns() const {
    std::vector<Gf4Vector> out;
    out.reserve(cols_);
    for (size_t c = 0; c < cols_; c++) {
        out.push_back(column(c));
    }
    return out;
}

Gf4Matrix Gf4Matrix::select_columns(const std::vector<size_t> &indices) const {
    Gf4Matrix out(rows_.size(), indices.size());
    for (size_t j = 0; j < indices.size(); j++) {
        if (indices[j] >= cols_) {
            throw std::out_of_range("column index out of range");
        }
        for (size_t r = 0; r < rows_.size(); r++) {
            out.rows_[r][j] = rows_[r][indices[j]];
        }
    }
    return out;
}

Gf4Matrix Gf4Matrix::select_rows(size_t first, size_t count) const {
    if (first + count > rows_.size()) {
        throw std::out_of_range("row range out of range");
    }
    Gf4Matrix out;
    out.cols_ = cols_;
    out.rows_.assign(rows_.begin() + first, rows_.begin() + first + count);
    return out;
}

Gf4Matrix Gf4Matrix::hconcat(const Gf4Matrix &right) const {
    if (right.rows() != rows()) {
        throw std::invalid_argument("hconcat: row count mismatch");
    }
    Gf4Matrix out;
    out.cols_ = cols_ + right.cols_;
    out.rows_.reserve(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        out.rows_.push_back(rows_[r].concat(right.rows_[r]));
    }
    return out;
}

Gf4Matrix Gf4Matrix::vconcat(const Gf4Matrix &below) const {
    if (rows_.empty()) {
        return below;
    }
    if (below.rows_.empty()) {
        return *this;
    }
    if (below.cols_ != cols_) {
        throw std::invalid_argument("vconcat: column count mismatch");
    }
    Gf4Matrix out(*this);
    out.rows_.insert(out.rows_.end(), below.rows_.begin(), below.rows_.end());
    return out;
}

std::vector<Gf4Vector> additive_form_vectors(int m) {
    if (m < 1 || m > 10) {
        throw std::invalid_argument("additive_form_vectors: m out of range");
    }
    const size_t count = size_t{1} << (2 * m);
    std::vector<Gf4Vector> out;
    out.reserve(count - 1);
    for (size_t x = 1; x < count; x++) {
        Gf4Vector col(2 * static_cast<size_t>(m));
        for (int i = 0; i < m; i++) {
            // First coordinate is the most significant base-4 digit.
            const auto digit = static_cast<uint8_t>((x >> (2 * (m - 1 - i))) & 3);
            const Gf4 s = Gf4::from_code(digit);
            col[2 * i] = s;
            col[2 * i + 1] = Gf4::w() * s;
        }
        out.push_back(std::move(col));
    }
    return out;
}

}  // namespace qadd
