// Copyright 2026 The c3perm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "c3perm/cli.hpp"

#include <bit>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "c3perm/anf.hpp"
#include "c3perm/circuit.hpp"
#include "c3perm/dense.hpp"
#include "c3perm/desc_mult.hpp"
#include "c3perm/error.hpp"
#include "c3perm/family.hpp"
#include "c3perm/hierarchy.hpp"
#include "c3perm/search.hpp"
#include "c3perm/semi_clifford.hpp"
#include "c3perm/staircase.hpp"
#include "json.hpp"

namespace c3perm {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string circuit;
    std::string table;
    std::string mult;
    int n = 0;
    int k = 0;
    int witness_n = 7;
    int shards = 1;
    int workers = 0;
    std::string checkpoint;
    uint64_t sample = 0;
    uint64_t seed = 1;
    bool pretty = false;
};

struct Outcome {
    std::string claim;
    Json inputs;
    bool verdict = false;
    Json evidence;
};

std::string read_source(const std::string& path, std::istream& in) {
    std::stringstream s;
    if (path == "-") {
        s << in.rdbuf();
        return s.str();
    }
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    s << f.rdbuf();
    return s.str();
}

std::vector<uint32_t> parse_table(std::string text) {
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream ss(text);
    std::vector<uint32_t> t;
    std::string tok;
    while (ss >> tok) {
        size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || v > UINT32_MAX) throw UsageError("bad table entry '" + tok + "'");
        t.push_back(static_cast<uint32_t>(v));
    }
    return t;
}

Json degree_json(int d) { return d == kZeroPolyDegree ? Json(nullptr) : Json(d); }

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json toffolis_json(const ToffoliCircuit& c) {
    Json a = Json::array();
    for (const auto& g : c) a.push_back({g.c1, g.c2, g.target});
    return a;
}

Json affine_json(const AffineMap& a) {
    Json rows = Json::array();
    for (int i = 1; i <= a.dim(); ++i) rows.push_back(a.m.row(i).to_string());
    return {{"matrix", rows}, {"shift", a.w.to_string()}};
}

struct Input {
    Circuit circuit;
    bool is_perm = true;
    PermGate perm;
    Json echo;
};

Input load_input(const Options& o, std::istream& in, bool allow_dense) {
    if (o.circuit.empty() == o.table.empty()) throw UsageError("give exactly one of --circuit or --table");
    Input x;
    if (!o.table.empty()) {
        std::vector<uint32_t> t = parse_table(o.table);
        if (t.empty() || !std::has_single_bit(t.size())) throw UsageError("table length must be a power of two");
        const int n = std::countr_zero(t.size());
        if (o.n != 0 && o.n != n) throw UsageError("table length does not match -n");
        x.echo = {{"n", n}, {"table", t}};
        x.perm = PermGate::from_table(n, std::move(t));
        return x;
    }
    x.circuit = parse_circuit(read_source(o.circuit, in), o.n);
    x.echo = {{"n", x.circuit.n}, {"circuit", format_circuit(x.circuit)}};
    x.is_perm = std::all_of(x.circuit.gates.begin(), x.circuit.gates.end(),
                            [](const Gate& g) { return is_permutation_kind(g.kind); });
    if (x.is_perm) {
        x.perm = circuit_to_perm(x.circuit);
    } else if (!allow_dense) {
        throw UsageError("only X, CNOT and TOF gates are allowed for this subcommand");
    }
    return x;
}

Outcome cmd_poly(const Options& o, std::istream& in) {
    const Input x = load_input(o, in, false);
    const PermPolyRep rep = perm_coords(x.perm);
    const PermPolyRep inv = perm_coords(invert_perm(x.perm));
    Json coords = Json::array();
    Json inv_coords = Json::array();
    for (const auto& c : rep.coords) coords.push_back(c.to_string());
    for (const auto& c : inv.coords) inv_coords.push_back(c.to_string());
    Json ev = {{"coordinates", coords},
               {"max_degree", degree_json(rep.max_degree())},
               {"inverse_coordinates", inv_coords},
               {"inverse_max_degree", degree_json(inv.max_degree())}};
    return {"anf_coordinates", x.echo, true, ev};
}

Outcome cmd_staircase(const Options& o, std::istream& in) {
    const Input x = load_input(o, in, false);
    const StaircaseOutcome s = to_staircase(x.perm);
    if (const auto* c = std::get_if<ToffoliCircuit>(&s)) {
        Json ev = {{"gates", toffolis_json(*c)}, {"circuit", format_toffolis(*c)}};
        return {"staircase_form", x.echo, true, ev};
    }
    const auto& bad = std::get<NotStaircase>(s);
    Json ev = {{"inverse_coordinate", bad.coordinate}, {"offending_term", bad.term}};
    return {"staircase_form", x.echo, false, ev};
}

Outcome cmd_reduce(const Options& o, std::istream& in) {
    const Input x = load_input(o, in, false);
    if (auto w = is_c3_perm(x.perm)) {
        Json ev = {{"in_c3", false}, {"witness", w->generator}, {"reason", w->reason}};
        return {"staircase_reduction", x.echo, false, ev};
    }
    const ReductionResult r = reduce_to_staircase(x.perm);
    const bool exact = recompose(r) == x.perm;
    const bool staircase = is_staircase(r.mu);
    const bool associative = is_associative(from_staircase(r.mu, x.perm.num_qubits()));
    Json ev = {{"in_c3", true},
               {"phi1", affine_json(r.phi1)},
               {"mu", toffolis_json(r.mu)},
               {"mu_circuit", format_toffolis(r.mu)},
               {"phi2", affine_json(r.phi2)},
               {"recomposition_exact", exact},
               {"mu_is_staircase", staircase},
               {"mu_associative", associative}};
    return {"staircase_reduction", x.echo, exact && staircase && associative, ev};
}

Outcome cmd_mult(const Options& o, std::istream& in) {
    DescMult m;
    Json echo;
    if (!o.mult.empty() && o.circuit.empty()) {
        m = parse_mult(read_source(o.mult, in), o.n);
        echo = {{"mult", format_mult(m)}};
    } else if (o.mult.empty() && !o.circuit.empty()) {
        const Circuit c = parse_circuit(read_source(o.circuit, in), o.n);
        m = from_staircase(toffolis_of(c), c.n);
        echo = {{"n", c.n}, {"circuit", format_circuit(c)}};
    } else {
        throw UsageError("give exactly one of --mult or --circuit");
    }
    Json ev = {{"n", m.dim()}, {"table", format_mult(m)}};
    const auto violation = find_associativity_violation(m);
    ev["associative"] = !violation.has_value();
    if (violation) {
        ev["witness"] = {{"i", violation->i},
                         {"j", violation->j},
                         {"k", violation->k},
                         {"regrouped", violation->lhs.to_string()},
                         {"left_nested", violation->rhs.to_string()}};
        return {"descending_multiplication_associative", echo, false, ev};
    }
    ev["all_triples_zero"] = all_triples_zero(m);
    ev["max_nonzero_product_size"] = max_nonzero_product_size(m);
    if (m.dim() <= 16) {
        const PermGate p = mult_to_perm(m);
        ev["permutation_round_trip"] = perm_to_mult(p) == m;
    }
    return {"descending_multiplication_associative", echo, true, ev};
}

Outcome cmd_uk(const Options& o, std::istream&) {
    const UkCertificate c = verify_uk(o.k);
    Json ev = {{"k", c.k},
               {"n", c.n},
               {"gate_count", c.gate_count},
               {"in_c3", c.in_c3},
               {"inverse_refuted_at", c.inverse_refuted_at},
               {"top_coordinate", c.top_coordinate},
               {"max_nonzero_product_size", c.max_product_size},
               {"truth_table_checked", c.truth_table_checked},
               {"truth_table_agrees", c.truth_table_checked ? Json(c.truth_table_agrees) : Json(nullptr)},
               {"circuit", format_toffolis(uk_circuit(o.k))}};
    const bool ok = c.in_c3 && c.inverse_refuted_at == c.k && (!c.truth_table_checked || c.truth_table_agrees);
    return {"uk_in_c3_inverse_refuted", {{"k", o.k}}, ok, ev};
}

Outcome cmd_survey(const Options& o, std::istream&) {
    const char* note = "in_c3 and semi_clifford_c3 are derived by this tool; no published reference values exist";
    if (o.sample > 0 || o.n == kMaxEnumerationQubits) {
        if (o.sample == 0) throw UsageError("n = 7 needs a --sample budget");
        const SampleReport r = sample_survey(o.n, o.sample, o.seed);
        Json example = nullptr;
        if (r.non_sc_mask) example = format_toffolis(mask_to_circuit(o.n, *r.non_sc_mask));
        Json ev = {{"mode", "sample"},
                   {"n", r.n},
                   {"samples", r.samples},
                   {"seed", r.seed},
                   {"in_c3", r.in_c3},
                   {"semi_clifford_c3", r.semi_clifford_c3},
                   {"non_sc_c3", r.in_c3 - r.semi_clifford_c3},
                   {"non_sc_example", example},
                   {"note", note}};
        Json echo = {{"n", o.n}, {"sample", o.sample}, {"seed", o.seed}};
        return {"staircase_c3_all_semi_clifford", echo, r.in_c3 == r.semi_clifford_c3, ev};
    }
    SurveyOptions so;
    so.n = o.n;
    so.shards = o.shards;
    so.workers = o.workers > 0 ? o.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    so.checkpoint = o.checkpoint;
    const SurveyReport r = survey(so);
    Json ev = Json::parse(survey_report_json(r));
    ev["mode"] = "exhaustive";
    ev["expected_total"] = uint64_t{1} << staircase_triples(o.n).size();
    ev["note"] = note;
    const bool ok = r.complete && r.non_sc_c3 == 0 && r.total == ev["expected_total"].get<uint64_t>();
    return {"staircase_c3_all_semi_clifford", {{"n", o.n}, {"shards", o.shards}}, ok, ev};
}

Outcome cmd_verify_gm(const Options&, std::istream&) {
    const GottesmanMochonCertificate c = verify_gottesman_mochon();
    Json ev = {{"g_in_c3", c.g_in_c3},
               {"conjugate_not_clifford", c.conjugate_not_clifford},
               {"fgf_equals_u3", c.fgf_equals_u3},
               {"g_circuit", std::string(gottesman_mochon_g_circuit())},
               {"f_circuit", std::string(gottesman_mochon_f_circuit())}};
    return {"gottesman_mochon", Json::object(), c.all(), ev};
}

Outcome cmd_classify(const Options& o, std::istream& in) {
    const Input x = load_input(o, in, true);
    if (!x.is_perm) {
        const DenseUnitary u = DenseUnitary::build(x.circuit);
        const bool c3 = is_c3_dense(u);
        Json ev = {{"route", "dense"}, {"pauli", is_pauli(u)}, {"clifford", is_clifford(u)}, {"in_c3", c3}};
        ev["in_c4"] = x.circuit.n <= kMaxC4Qubits ? Json(is_c4_dense(u)) : Json(nullptr);
        return {"in_c3", x.echo, c3, ev};
    }
    const PermGate& p = x.perm;
    const int n = p.num_qubits();
    const auto w = is_c3_perm(p);
    Json ev = {{"route", "permutation"}, {"clifford", as_affine(p).has_value()}, {"in_c3", !w.has_value()}};
    ev["witness"] = w ? Json(w->generator) : Json(nullptr);
    ev["witness_reason"] = w ? Json(w->reason) : Json(nullptr);
    ev["not_in_level"] = optional_json(refute_level(p));
    ev["inverse_not_in_level"] = optional_json(refute_level(invert_perm(p)));
    ev["staircase_form"] = std::holds_alternative<ToffoliCircuit>(to_staircase(p));
    ev["semi_clifford"] = !w && n <= kMaxSemiCliffordQubits ? Json(is_semi_clifford_perm(p)) : Json(nullptr);
    return {"in_c3", x.echo, !w.has_value(), ev};
}

Outcome cmd_witness(const Options& o, std::istream&) {
    const int n = o.witness_n;
    const auto w = find_witness(n);
    Json echo = {{"n", n}};
    if (!w) {
        Json ev = {{"found", false}, {"searched", uint64_t{1} << staircase_triples(n).size()}};
        return {"non_semi_clifford_staircase_c3_exists", echo, false, ev};
    }
    const DescMult m = from_staircase(*w, n);
    Json triple = nullptr;
    for (int k = 3; k <= n && triple.is_null(); ++k) {
        for (int i = 1; i < k && triple.is_null(); ++i) {
            for (int j = i + 1; j < k && triple.is_null(); ++j) {
                const uint64_t set = component_bit(n, i) | component_bit(n, j) | component_bit(n, k);
                const uint64_t prod = product_of_set(m, set);
                if (prod != 0) triple = {{"factors", {i, j, k}}, {"product", F2Vec::from_bits(n, prod).to_string()}};
            }
        }
    }
    Json ev = {{"found", true},
               {"gates", toffolis_json(*w)},
               {"circuit", format_toffolis(*w)},
               {"associative", is_associative(m)},
               {"nonzero_triple", triple}};
    if (n <= 12) {
        const PermGate p = circuit_to_perm(*w, n);
        ev["in_c3"] = !is_c3_perm(p).has_value();
        ev["inverse_not_in_level"] = optional_json(refute_level(invert_perm(p)));
    }
    return {"non_semi_clifford_staircase_c3_exists", echo, true, ev};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"Classify permutation gates in the Clifford hierarchy", "c3perm"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    Options o;

    auto common = [&](CLI::App* s) { s->add_flag("--pretty", o.pretty, "Indent the JSON output"); };
    auto perm_input = [&](CLI::App* s) {
        s->add_option("--circuit", o.circuit, "Circuit file, or - for standard input");
        s->add_option("--table", o.table, "Permutation table, comma separated");
        s->add_option("-n", o.n, "Qubit count")->check(CLI::NonNegativeNumber);
        common(s);
    };

    std::map<std::string, std::function<Outcome(const Options&, std::istream&)>> handlers;
    perm_input(app.add_subcommand("poly", "ANF coordinates of a permutation and its inverse"));
    handlers["poly"] = cmd_poly;
    perm_input(app.add_subcommand("staircase", "Staircase Toffoli circuit of a permutation"));
    handlers["staircase"] = cmd_staircase;
    perm_input(app.add_subcommand("reduce", "Reduce a C3 permutation to affine, staircase, affine"));
    handlers["reduce"] = cmd_reduce;
    perm_input(app.add_subcommand("classify", "Hierarchy membership of a circuit or permutation"));
    handlers["classify"] = cmd_classify;

    CLI::App* mult = app.add_subcommand("mult", "Check a descending multiplication table");
    mult->add_option("--mult", o.mult, "Multiplication table file, or - for standard input");
    mult->add_option("--circuit", o.circuit, "Staircase circuit file, or - for standard input");
    mult->add_option("-n", o.n, "Qubit count")->check(CLI::NonNegativeNumber);
    common(mult);
    handlers["mult"] = cmd_mult;

    CLI::App* uk = app.add_subcommand("uk", "Certificate for the U_k family member");
    uk->add_option("k", o.k, "Family index")->required();
    common(uk);
    handlers["uk"] = cmd_uk;

    CLI::App* sv = app.add_subcommand("survey", "Classify every staircase circuit on n qubits");
    sv->add_option("-n", o.n, "Qubit count")->required();
    sv->add_option("--shards", o.shards, "Power-of-two shard count");
    sv->add_option("--workers", o.workers, "Worker threads (default: hardware concurrency)");
    sv->add_option("--checkpoint", o.checkpoint, "Checkpoint file for resuming");
    sv->add_option("--sample", o.sample, "Random sample budget instead of enumeration");
    sv->add_option("--seed", o.seed, "Sampling seed");
    common(sv);
    handlers["survey"] = cmd_survey;

    common(app.add_subcommand("verify-gm", "Verify the Gottesman-Mochon construction"));
    handlers["verify-gm"] = cmd_verify_gm;

    CLI::App* wt = app.add_subcommand("witness", "Search for a non-semi-Clifford staircase C3 circuit");
    wt->add_option("-n", o.witness_n, "Qubit count");
    common(wt);
    handlers["witness"] = cmd_witness;

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitTrue : kExitUsage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    Outcome r;
    try {
        r = handlers.at(name)(o, in);
    } catch (const std::exception& e) {
        err << "c3perm " << name << ": " << e.what() << '\n';
        return kExitUsage;
    }

    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    Json cert = {{"schema_version", kSchemaVersion},
                 {"claim", r.claim},
                 {"inputs", r.inputs},
                 {"verdict", r.verdict},
                 {"evidence", r.evidence},
                 {"tool_version", kToolVersion},
                 {"wall_time_ms", ms.count()}};
    out << (o.pretty ? cert.dump(2) : cert.dump()) << '\n';
    return r.verdict ? kExitTrue : kExitFalse;
}

}  // namespace c3perm
