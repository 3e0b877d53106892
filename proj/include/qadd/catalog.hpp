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


#ifndef QADD_CATALOG_HPP
#define QADD_CATALOG_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qadd/bounds.hpp"
#include "qadd/code.hpp"

namespace qadd {

struct FamilyArgs {
    int k = 0;
    int k1 = 0;
    int k2 = 0;
    int m = 0;
    std::string str() const;
};

/// What a few-weight family row promises for one parameter choice.
struct FamilyExpectation {
    CodeParams params;
    /// The distribution as tabulated.
    WeightDistribution printed;
    /// Set only where the tabulated coefficient is a known misprint.
    std::optional<WeightDistribution> corrected;
    bool griesmer = false;
};

/// Builds family `id` (1..10). Throws std::invalid_argument outside the row's range.
AdditiveCode build_family(int id, const FamilyArgs &args);
FamilyExpectation family_expectation(int id, const FamilyArgs &args);

/// All parameter choices of the sweep: k <= max_k (rows 3-10), k <= max_k_simplex (rows 1-2).
std::vector<std::pair<int, FamilyArgs>> table1_cases(int max_k = 11, int max_k_simplex = 13);

enum class FamilyStatus { match, documented_misprint, mismatch };

struct FamilyCheck {
    int id = 0;
    FamilyArgs args;
    FamilyExpectation expected;
    CodeParams observed;
    WeightDistribution distribution;
    OptimalityClass optimality;
    FamilyStatus status = FamilyStatus::mismatch;
    std::vector<std::string> notes;
};

/// Builds the family code and compares it with its expectation. A documented
/// misprint passes only if the enumeration matches the corrected polynomial,
/// sums to 2^dim2 and differs from the printed one in a single coefficient.
FamilyCheck check_family(int id, const FamilyArgs &args);
const char *status_name(FamilyStatus s);

/// One row of the length-4..254 chain of 3.5-dimensional codes, keyed by t = n - d.
struct CtRow {
    int t = 0;
    size_t n_min = 0;
    size_t n_max = 0;
    bool external = false;
    std::string construction;
};

const std::vector<CtRow> &table2_rows();
/// Throws std::invalid_argument if there is no row for t.
const CtRow &table2_row(int t);

struct CtEntry {
    size_t n = 0;
    /// Absent for external rows.
    std::optional<AdditiveCode> code;
};

/// Evaluates a row's recipe at its maximum length, then punctures down to n_min.
/// Intermediate rows are memoised per Table2Builder.
class Table2Builder {
   public:
    const AdditiveCode &max_code(int t);
    std::vector<CtEntry> build(int t);

   private:
    std::map<int, AdditiveCode> cache_;
};

std::vector<CtEntry> build_ct(int t);

struct CtCheck {
    CtRow row;
    /// (n, d, gpo) for every built length, longest first.
    struct Length {
        size_t n = 0;
        std::optional<size_t> d;
        size_t dim2 = 0;
        bool gpo = false;
    };
    std::vector<Length> lengths;
    bool ok = true;
    std::vector<std::string> notes;
};

/// Builds row t and checks d = n - t at every length, dim2 = 7 and GPO at the
/// maximum length. External rows pass trivially with no lengths.
CtCheck check_ct(Table2Builder &builder, int t);

/// Drops a coordinate in the support of a minimum-weight codeword.
AdditiveCode puncture_min_weight(const AdditiveCode &c);

/// Names: A16, A38, A43, Eq6, Eq21.
AdditiveCode embedded_matrix(const std::string &name);
const std::vector<std::string> &embedded_matrix_names();

/// The [16,3,12] lower six rows of A16 span its distinguished subcode.
AdditiveCode example2_code(bool with_a43);

struct VerificationReport {
    CodeParams params;
    WeightDistribution distribution;
    bool asep = false;
    OptimalityClass optimality;
    int64_t griesmer_gap = 0;
    std::vector<std::string> notes;
    /// False when an expectation attached to the report was not met.
    bool ok = true;
};

VerificationReport analyze(const AdditiveCode &c);

/// The [54,3.5,40] and [59,3.5,44] codes with their expected distributions checked.
std::vector<VerificationReport> verify_example2();

/// A construction cross-check: label, built code and the parameters it should have.
struct CrossCheck {
    std::string label;
    CodeParams expected;
    std::function<AdditiveCode()> build;
};

const std::vector<CrossCheck> &remark3_list();

}  // namespace qadd

#endif
