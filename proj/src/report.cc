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


#include "qadd/report.hpp"

namespace qadd {

nlohmann::ordered_json report_json(const VerificationReport &r) {
    nlohmann::ordered_json j;
    j["n"] = r.params.n;
    j["dim2"] = r.params.dim2;
    j["d"] = r.params.d ? nlohmann::ordered_json(*r.params.d) : nlohmann::ordered_json(nullptr);
    auto wd = nlohmann::ordered_json::array();
    for (auto [w, c] : r.distribution.terms()) {
        wd.push_back({w, c});
    }
    j["weight_distribution"] = wd;
    j["asep"] = r.asep;
    j["meets_griesmer"] = r.optimality.meets_griesmer;
    j["gdo"] = r.optimality.gdo;
    j["gpo"] = r.optimality.gpo;
    j["griesmer_gap"] = r.griesmer_gap;
    j["notes"] = r.notes;
    return j;
}

}  // namespace qadd
