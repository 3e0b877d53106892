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


#include "qadd/qam_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qadd {

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

size_t header_field(const std::string &token, const std::string &key) {
    if (!token.starts_with(key + "=")) {
        throw std::invalid_argument("qam header: expected " + key + "=<count>");
    }
    const std::string digits = token.substr(key.size() + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("qam header: bad " + key);
    }
    return std::stoul(digits);
}

}  // namespace

AdditiveCode read_qam(std::istream &in) {
    std::string line;
    bool have_header = false;
    size_t n = 0, r = 0;
    std::vector<Gf4Vector> rows;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!have_header) {
            std::istringstream hs(line);
            std::string magic, nf, rf, extra;
            hs >> magic >> nf >> rf;
            if (magic != "qam" || (hs >> extra)) {
                throw std::invalid_argument("qam header must be 'qam n=<n> rows=<r>'");
            }
            n = header_field(nf, "n");
            r = header_field(rf, "rows");
            have_header = true;
            continue;
        }
        if (line.size() != n) {
            throw std::invalid_argument("qam row " + std::to_string(rows.size()) + " has length " +
                                        std::to_string(line.size()) + ", expected " + std::to_string(n));
        }
        rows.push_back(Gf4Vector::parse(line));
    }
    if (!have_header) {
        throw std::invalid_argument("qam: missing header");
    }
    if (rows.size() != r) {
        throw std::invalid_argument("qam: expected " + std::to_string(r) + " rows, found " +
                                    std::to_string(rows.size()));
    }
    return make_code(std::move(rows));
}

AdditiveCode read_qam_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    return read_qam(in);
}

void write_qam(std::ostream &out, const AdditiveCode &c) {
    out << "qam n=" << c.n() << " rows=" << c.row_count() << "\n";
    for (const auto &r : c.generators().row_vectors()) {
        out << r.str() << "\n";
    }
}

std::string to_qam(const AdditiveCode &c) {
    std::ostringstream s;
    write_qam(s, c);
    return s.str();
}

}  // namespace qadd
