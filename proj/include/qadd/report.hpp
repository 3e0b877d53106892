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


#ifndef QADD_REPORT_HPP
#define QADD_REPORT_HPP

#include <json.hpp>

#include "qadd/catalog.hpp"

namespace qadd {

/// {n, dim2, d, weight_distribution, asep, meets_griesmer, gdo, gpo, griesmer_gap, notes}.
nlohmann::ordered_json report_json(const VerificationReport &r);

}  // namespace qadd

#endif
