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


#ifndef QADD_QAM_IO_HPP
#define QADD_QAM_IO_HPP

#include <iosfwd>
#include <string>

#include "qadd/code.hpp"

namespace qadd {

/// Reads the text matrix format: a `qam n=<n> rows=<r>` header, then r rows
/// of n symbols over {0,1,w,W}. Lines starting with '#' and blank lines are
/// skipped. Throws std::invalid_argument on malformed input.
AdditiveCode read_qam(std::istream &in);
AdditiveCode read_qam_file(const std::string &path);

void write_qam(std::ostream &out, const AdditiveCode &c);
std::string to_qam(const AdditiveCode &c);

}  // namespace qadd

#endif
