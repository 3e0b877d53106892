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


#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "qadd/bounds.hpp"
#include "qadd/catalog.hpp"
#include "qadd/constructions.hpp"
#include "qadd/qam_io.hpp"
#include "qadd/report.hpp"

using json = nlohmann::ordered_json;
using namespace qadd;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInvalid = 2;

json rows_json(const AdditiveCode &c) {
    json rows = json::array();
    for (const auto &r : c.generators().row_vectors()) {
        rows.push_back(r.str());
    }
    return rows;
}

json params_json(const CodeParams &p) {
    json j;
    j["n"] = p.n;
    j["dim2"] = p.dim2;
    j["d"] = p.d ? json(*p.d) : json(nullptr);
    return j;
}

json terms_json(const WeightDistribution &w) {
    json out = json::array();
    for (auto [wt, c] : w.terms()) {
        out.push_back({wt, c});
    }
    return out;
}

json family_json(const FamilyCheck &fc) {
    json j;
    j["row"] = fc.id;
    j["args"] = fc.args.str();
    j["expected"] = params_json(fc.expected.params);
    j["observed"] = params_json(fc.observed);
    j["weight_distribution"] = terms_json(fc.distribution);
    j["tabulated"] = terms_json(fc.expected.printed);
    j["meets_griesmer"] = fc.optimality.meets_griesmer;
    j["gpo"] = fc.optimality.gpo;
    j["status"] = status_name(fc.status);
    j["notes"] = fc.notes;
    return j;
}

struct Options {
    std::string out;
    int family = 0, k = 0, k1 = 0, k2 = 0, m = 0, ct = 0;
    size_t n = 0;
    std::string format = "json";
    std::string file;
    int max_k = 11;
    size_t dim2 = 0, d = 0;
};

int emit(const Options &o, const std::string &text) {
    if (o.out.empty()) {
        std::cout << text;
        return kOk;
    }
    std::ofstream f(o.out);
    if (!f) {
        throw std::invalid_argument("cannot write " + o.out);
    }
    f << text;
    return kOk;
}

int emit_json(const Options &o, const json &j) { return emit(o, j.dump(2) + "\n"); }

int run_construct(const Options &o) {
    if ((o.family == 0) == (o.ct == 0)) {
        throw std::invalid_argument("construct needs exactly one of --family or --ct");
    }
    AdditiveCode code;
    json j;
    int status = kOk;
    if (o.family) {
        const FamilyArgs args{o.k, o.k1, o.k2, o.m};
        const FamilyCheck fc = check_family(o.family, args);
        code = build_family(o.family, args);
        j = family_json(fc);
        status = fc.status == FamilyStatus::mismatch ? kMismatch : kOk;
    } else {
        Table2Builder builder;
        const CtRow &row = table2_row(o.ct);
        if (row.external) {
            throw std::invalid_argument("row t=" + std::to_string(o.ct) + " is " + row.construction);
        }
        const size_t n = o.n ? o.n : row.n_max;
        if (n < row.n_min || n > row.n_max) {
            throw std::invalid_argument("n outside the row's length range");
        }
        for (const auto &e : builder.build(o.ct)) {
            if (e.n == n) {
                code = *e.code;
            }
        }
        const VerificationReport r = analyze(code);
        j = report_json(r);
        j["t"] = o.ct;
        j["construction"] = row.construction;
        if (!r.params.d || *r.params.d + static_cast<size_t>(o.ct) != n) {
            status = kMismatch;
        }
    }
    if (o.format == "qam") {
        emit(o, to_qam(code));
        return status;
    }
    j["rows"] = rows_json(code);
    emit_json(o, j);
    return status;
}

int run_analyze(const Options &o) {
    const AdditiveCode c = read_qam_file(o.file);
    const VerificationReport r = analyze(c);
    emit_json(o, report_json(r));
    return r.ok ? kOk : kMismatch;
}

int run_table1(const Options &o) {
    json arr = json::array();
    int status = kOk;
    for (const auto &[id, args] : table1_cases(o.max_k, std::max(o.max_k, 13))) {
        const FamilyCheck fc = check_family(id, args);
        if (fc.status == FamilyStatus::mismatch) {
            status = kMismatch;
        }
        arr.push_back(family_json(fc));
    }
    emit_json(o, arr);
    return status;
}

int run_table2(const Options &o) {
    json arr = json::array();
    int status = kOk;
    Table2Builder builder;
    for (const auto &row : table2_rows()) {
        const CtCheck cc = check_ct(builder, row.t);
        json j;
        j["t"] = row.t;
        j["n_min"] = row.n_min;
        j["n_max"] = row.n_max;
        j["construction"] = row.construction;
        j["external"] = row.external;
        json lens = json::array();
        for (const auto &l : cc.lengths) {
            lens.push_back({{"n", l.n}, {"d", l.d ? json(*l.d) : json(nullptr)}, {"gpo", l.gpo}});
        }
        j["lengths"] = lens;
        j["ok"] = cc.ok;
        j["notes"] = cc.notes;
        if (!cc.ok) {
            status = kMismatch;
        }
        arr.push_back(j);
    }
    emit_json(o, arr);
    return status;
}

int run_concat(const Options &o) {
    const AdditiveCode c = read_qam_file(o.file);
    const BinaryImage b = concat_binary(c);
    const auto d4 = weight_distribution(c).min_distance();
    json j;
    j["n"] = b.n;
    j["dim"] = b.rank;
    j["d"] = b.d ? json(*b.d) : json(nullptr);
    j["source"] = params_json(CodeParams{c.n(), c.dim2(), d4});
    json rows = json::array();
    for (const auto &r : b.generator.row_vectors()) {
        rows.push_back(r.str());
    }
    j["rows"] = rows;
    emit_json(o, j);
    const bool doubled = (b.d && d4 && *b.d == 2 * *d4) || (!b.d && !d4);
    return doubled && b.rank == c.dim2() ? kOk : kMismatch;
}

int run_griesmer(const Options &o) {
    json j;
    j["dim2"] = o.dim2;
    j["d"] = o.d;
    const uint64_t g = griesmer_g(o.dim2, 2 * o.d);
    j["g"] = g;
    j["min_length"] = (g + 2) / 3;
    if (o.n) {
        const OptimalityClass c = classify(o.n, o.dim2, o.d);
        j["n"] = o.n;
        j["griesmer_gap"] = griesmer_gap(o.n, o.dim2, o.d);
        j["meets_griesmer"] = c.meets_griesmer;
        j["gdo"] = c.gdo;
        j["gpo"] = c.gpo;
    }
    return emit_json(o, j);
}

int run_verify(const Options &o) {
    json j;
    int status = kOk;
    const AdditiveCode a = asep(3);
    const VerificationReport r1 = analyze(a);
    json e1 = report_json(r1);
    const bool ok1 = r1.params == CodeParams{7, 3, 6};
    e1["ok"] = ok1 && r1.asep && r1.distribution.polynomial() == "1+7z^6";
    if (!e1["ok"].get<bool>()) {
        status = kMismatch;
    }
    j["example1"] = e1;
    json e2 = json::array();
    for (const auto &r : verify_example2()) {
        json x = report_json(r);
        x["ok"] = r.ok;
        if (!r.ok) {
            status = kMismatch;
        }
        e2.push_back(x);
    }
    j["example2"] = e2;
    emit_json(o, j);
    return status;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quaternary additive code constructions and checks"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--out", o.out, "Write output to this path instead of stdout");

    auto *construct = app.add_subcommand("construct", "Build a family code or a length-chain code");
    construct->add_option("--family", o.family, "Family id 1..10")->check(CLI::Range(1, 10));
    construct->add_option("--k", o.k);
    construct->add_option("--k1", o.k1);
    construct->add_option("--k2", o.k2);
    construct->add_option("--m", o.m);
    construct->add_option("--ct", o.ct, "Row t = n - d of the length chain");
    construct->add_option("--n", o.n, "Length within the row's range (default: longest)");
    construct->add_option("--format", o.format, "json or qam")->check(CLI::IsMember({"json", "qam"}));

    auto *analyze_cmd = app.add_subcommand("analyze", "Enumerate a .qam code");
    analyze_cmd->add_option("file", o.file)->required();

    auto *table1 = app.add_subcommand("table1", "Check every few-weight family");
    table1->add_option("--max-k", o.max_k)->check(CLI::Range(7, 13));

    auto *table2 = app.add_subcommand("table2", "Check the 3.5-dimensional length chain");

    auto *concat = app.add_subcommand("concat-binary", "Concatenate with the [3,2,2] binary code");
    concat->add_option("file", o.file)->required();

    auto *gries = app.add_subcommand("griesmer", "Evaluate the additive Griesmer bound");
    gries->add_option("--dim2", o.dim2)->required()->check(CLI::PositiveNumber);
    gries->add_option("--d", o.d)->required()->check(CLI::PositiveNumber);
    gries->add_option("--n", o.n, "Also classify a code of this length");

    auto *verify = app.add_subcommand("verify-examples", "Rebuild the two worked examples");

    for (auto *sub : {construct, analyze_cmd, table1, table2, concat, gries, verify}) {
        sub->add_option("--out", o.out, "Write output to this path instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    try {
        if (*construct) return run_construct(o);
        if (*analyze_cmd) return run_analyze(o);
        if (*table1) return run_table1(o);
        if (*table2) return run_table2(o);
        if (*concat) return run_concat(o);
        if (*gries) return run_griesmer(o);
        if (*verify) return run_verify(o);
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::length_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
