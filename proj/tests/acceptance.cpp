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

// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit if any
// criterion fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "c3perm/anf.hpp"
#include "c3perm/cli.hpp"
#include "c3perm/dense.hpp"
#include "c3perm/desc_mult.hpp"
#include "c3perm/error.hpp"
#include "c3perm/family.hpp"
#include "c3perm/hierarchy.hpp"
#include "c3perm/search.hpp"
#include "c3perm/semi_clifford.hpp"
#include "c3perm/staircase.hpp"
#include "json.hpp"

using namespace c3perm;
using Json = nlohmann::json;

namespace {

// Collects failed checks for one criterion.
class Checker {
   public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        failed_ += !ok;
    }
    bool ok() const { return failed_ == 0; }
    long checks() const { return checks_; }
    std::string summary() const {
        std::string s = std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed";
        for (const auto& f : failures_) s += "; " + f;
        return s;
    }

   private:
    long checks_ = 0;
    long failed_ = 0;
    std::vector<std::string> failures_;
};

struct CliResult {
    int code;
    Json json;
};

CliResult cli(const std::vector<std::string>& args) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str().empty() ? Json() : Json::parse(out.str())};
}

AffineMap random_affine(int n, std::mt19937_64& rng) {
    for (;;) {
        F2Mat m(n);
        for (int i = 1; i <= n; ++i) m.set_row(i, F2Vec::from_bits(n, rng() & dim_mask(n)));
        if (rank(m) == n) return {m, F2Vec::from_bits(n, rng() & dim_mask(n))};
    }
}

// Random staircase circuit whose table is associative, by rejection with a
// random density.
ToffoliCircuit random_associative_circuit(int n, std::mt19937_64& rng) {
    const auto triples = staircase_triples(n);
    for (;;) {
        ToffoliCircuit c;
        const uint64_t density = 1 + rng() % 16;
        for (const auto& t : triples) {
            if (rng() % 64 < density) c.push_back(t);
        }
        if (is_associative(from_staircase(c, n))) return c;
    }
}

// Additivity, the v_ij identities and the subset-sum inversion, over all
// v, w for n <= 4 and sampled pairs otherwise.
void check_laws(Checker& ck, const DescMult& m, const PermGate& p, std::mt19937_64& rng, const std::string& tag) {
    const int n = m.dim();
    const uint64_t size = uint64_t{1} << n;
    bool additive = true;
    auto law = [&](uint64_t v, uint64_t w) {
        additive &= p(v ^ w) == (p(v) ^ p(w) ^ product(m, p(v), p(w)));
    };
    if (n <= 4) {
        for (uint64_t v = 0; v < size; ++v) {
            for (uint64_t w = 0; w < size; ++w) law(v, w);
        }
    } else {
        for (int s = 0; s < 512; ++s) law(rng() & (size - 1), rng() & (size - 1));
    }
    ck.expect(additive, tag + ": additivity law");

    const PermGate pinv = invert_perm(p);
    std::vector<uint64_t> v(n * n, 0);
    bool vij = true;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const uint64_t eij = component_bit(n, i) | component_bit(n, j);
            v[(i - 1) * n + (j - 1)] = pinv(eij) ^ eij;
            vij &= p(v[(i - 1) * n + (j - 1)]) == m.get_bits(i, j);
        }
    }
    ck.expect(vij, tag + ": pi(v_ij) = e_i e_j");

    bool inversion = true;
    for (uint64_t s = 0; s < size; ++s) {
        uint64_t arg = s;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                if ((s & component_bit(n, i)) && (s & component_bit(n, j))) arg ^= v[(i - 1) * n + (j - 1)];
            }
        }
        inversion &= p(arg) == s;
    }
    ck.expect(inversion, tag + ": subset-sum inversion law");
}

bool criterion1(Checker& ck) {
    const CliResult r = cli({"uk", "3"});
    ck.expect(r.code == kExitTrue, "uk 3 exit code");
    ck.expect(r.json["evidence"]["in_c3"] == true, "uk 3 in_c3");
    ck.expect(r.json["evidence"]["inverse_refuted_at"] == 3, "uk 3 inverse_refuted_at");
    ck.expect(r.json["evidence"]["top_coordinate"] == "a7 + a1*a6 + a2*a5 + a3*a4 + a1*a2*a4", "top coordinate");
    const PermGate u3 = circuit_to_perm(uk_circuit(3), 7);
    ck.expect(perm_coordinate(u3, 7).to_string() == "a7 + a1*a6 + a2*a5 + a3*a4 + a1*a2*a4",
              "truth-table coordinate 7");
    ck.expect(is_c3_dense(DenseUnitary::from_perm(u3)), "dense U3 in C3");
    ck.expect(!is_c3_dense(DenseUnitary::from_perm(invert_perm(u3))), "dense U3^-1 not in C3");
    return ck.ok();
}

bool criterion2(Checker& ck) {
    for (int k : {4, 5}) {
        const CliResult r = cli({"uk", std::to_string(k)});
        const std::string tag = "uk " + std::to_string(k);
        ck.expect(r.code == kExitTrue, tag + " exit code");
        ck.expect(r.json["evidence"]["in_c3"] == true, tag + " in_c3");
        ck.expect(r.json["evidence"]["inverse_refuted_at"] == k, tag + " inverse_refuted_at");
        ck.expect(r.json["evidence"]["n"] == (1 << k) - 1, tag + " width");
    }
    const UkCertificate c4 = verify_uk(4);
    ck.expect(c4.truth_table_checked && c4.truth_table_agrees, "uk 4 truth-table route");
    const UkCertificate c5 = verify_uk(5);
    ck.expect(!c5.truth_table_checked, "uk 5 analytic route");
    return ck.ok();
}

bool criterion3(Checker& ck) {
    const GottesmanMochonCertificate c = verify_gottesman_mochon();
    ck.expect(c.g_in_c3, "G in C3");
    ck.expect(c.conjugate_not_clifford, "G^-1 X7 G not Clifford");
    ck.expect(c.fgf_equals_u3, "F G F^-1 = U3");
    return ck.ok();
}

bool criterion4(Checker& ck) {
    const CliResult s = cli({"survey", "-n", "6", "--shards", "16"});
    ck.expect(s.code == kExitTrue, "survey exit code");
    ck.expect(s.json["evidence"]["total"] == 1048576, "survey total");
    ck.expect(s.json["evidence"]["non_sc_c3"] == 0, "survey non_sc_c3");
    const CliResult w = cli({"witness", "-n", "7"});
    ck.expect(w.code == kExitTrue, "witness exit code");
    const auto circuit = find_witness(7);
    ck.expect(circuit.has_value() && *circuit == uk_circuit(3), "witness is U3");
    if (circuit) ck.expect(!all_triples_zero(from_staircase(*circuit, 7)), "witness has a nonzero triple product");
    ck.expect(!w.json["evidence"]["nonzero_triple"].is_null(), "witness evidence names a triple");
    return ck.ok();
}

bool criterion5(Checker& ck) {
    std::mt19937_64 rng(2024);
    for (int n = 3; n <= 4; ++n) {
        for (const ToffoliCircuit& c : enumerate_staircase(n)) {
            const std::string tag = "n=" + std::to_string(n) + " mask " + std::to_string(circuit_to_mask(n, c));
            const DescMult m = from_staircase(c, n);
            const PermGate p = circuit_to_perm(c, n);
            ck.expect(to_staircase_circuit(m) == c, tag + ": table to circuit");
            if (!is_associative(m)) {
                bool threw = false;
                try {
                    perm_to_mult(p);
                } catch (const NotStaircaseC3&) {
                    threw = true;
                }
                ck.expect(threw, tag + ": non-C3 permutation rejected");
                continue;
            }
            ck.expect(mult_to_perm(m) == p, tag + ": mult to perm");
            ck.expect(perm_to_mult(p) == m, tag + ": perm to mult");
            check_laws(ck, m, p, rng, tag);
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const ToffoliCircuit c = random_associative_circuit(8, rng);
        const DescMult m = from_staircase(c, 8);
        const PermGate p = mult_to_perm(m);
        const std::string tag = "n=8 trial " + std::to_string(trial);
        ck.expect(p == circuit_to_perm(c, 8), tag + ": mult to perm");
        ck.expect(perm_to_mult(p) == m, tag + ": perm to mult");
        check_laws(ck, m, p, rng, tag);
    }
    return ck.ok();
}

bool criterion6(Checker& ck) {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const ToffoliCircuit c = random_associative_circuit(n, rng);
        const PermGate p = random_affine(n, rng).to_perm() * circuit_to_perm(c, n) * random_affine(n, rng).to_perm();
        const ReductionResult r = reduce_to_staircase(p);
        const std::string tag = "trial " + std::to_string(trial);
        ck.expect(recompose(r) == p, tag + ": recomposition");
        ck.expect(is_staircase(r.mu), tag + ": staircase");
        ck.expect(is_associative(from_staircase(r.mu, n)), tag + ": associative");
    }
    return ck.ok();
}

bool criterion7(Checker& ck) {
    auto predicates = [](const PermGate& p, const DescMult& m) {
        return std::vector<bool>{is_semi_clifford_perm(p), is_semi_clifford_general(p),
                                 !is_c3_perm(invert_perm(p)).has_value(), perm_coords(p).max_degree() <= 2,
                                 all_triples_zero(m)};
    };
    long instances = 0;
    for (int n = 3; n <= 5; ++n) {
        for (const ToffoliCircuit& c : enumerate_staircase(n)) {
            const DescMult m = from_staircase(c, n);
            if (!is_associative(m)) continue;
            const PermGate p = circuit_to_perm(c, n);
            const auto v = predicates(p, m);
            const bool agree = std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; });
            ck.expect(agree, "n=" + std::to_string(n) + " mask " + std::to_string(circuit_to_mask(n, c)));
            if (v[0]) ck.expect(!is_c3_perm(invert_perm(p)).has_value(), "inverse of a semi-Clifford gate in C3");
            ++instances;
        }
    }
    ck.expect(instances > 0, "nonempty family");
    const PermGate u3 = circuit_to_perm(uk_circuit(3), 7);
    const auto v = predicates(u3, from_staircase(uk_circuit(3), 7));
    ck.expect(std::none_of(v.begin(), v.end(), [](bool b) { return b; }), "U3: all predicates false");
    return ck.ok();
}

bool criterion8(Checker& ck) {
    for (int n = 3; n <= 6; ++n) {
        const uint64_t count = uint64_t{1} << staircase_triples(n).size();
        long bad = 0;
        for (uint64_t mask = 0; mask < count; ++mask) {
            const DescMult m = from_staircase(mask_to_circuit(n, mask), n);
            if (!is_associative(m)) continue;
            bad += !all_triples_zero(m) || max_nonzero_product_size(m) > 2;
        }
        ck.expect(bad == 0, "n=" + std::to_string(n) + ": associative table with a nonzero triple product");
    }
    for (int k = 3; k <= 5; ++k) {
        const DescMult m = uk_mult(k);
        ck.expect(m.dim() == (1 << k) - 1, "uk_mult width");
        ck.expect(max_nonzero_product_size(m) == k, "uk_mult(" + std::to_string(k) + ") product size");
    }
    return ck.ok();
}

bool criterion9(Checker& ck) {
    for (int n = 2; n <= 5; ++n) {
        std::vector<McxGate> gates;
        for (int t = 1; t <= n; ++t) {
            for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
                if (s >> (t - 1) & 1) continue;
                McxGate g{{}, t};
                for (int q = 1; q <= n; ++q) {
                    if (s >> (q - 1) & 1) g.controls.push_back(q);
                }
                gates.push_back(g);
            }
        }
        for (const auto& a : gates) {
            for (const auto& b : gates) {
                const auto [commute, mismatch_free] = commute_iff_mismatch_free(n, a, b);
                ck.expect(commute == mismatch_free, "n=" + std::to_string(n) + " commutation pair");
            }
        }
    }

    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        // Split qubits into targets and controls so no gate targets a control.
        std::vector<int> targets, controls;
        for (int q = 1; q <= n; ++q) (rng() % 3 == 0 ? targets : controls).push_back(q);
        if (targets.empty()) targets.push_back(controls.back()), controls.pop_back();
        std::vector<McxGate> gates;
        const int count = 1 + static_cast<int>(rng() % 5);
        for (int g = 0; g < count; ++g) {
            McxGate gate{{}, targets[rng() % targets.size()]};
            for (int q : controls) {
                if (rng() & 1) gate.controls.push_back(q);
            }
            gates.push_back(gate);
        }
        const PermGate mu = mcx_to_perm(n, gates);
        const std::string tag = "trial " + std::to_string(trial);
        ck.expect(is_semi_clifford_perm(mu), tag + ": mismatch-free product is semi-Clifford");
        const PermGate p = random_affine(n, rng).to_perm() * mu * random_affine(n, rng).to_perm();
        const SemiCliffordDecomposition d = semi_clifford_decompose(p);
        ck.expect(recompose(d) == p, tag + ": recomposition");
        bool free = true;
        try {
            mismatch_free_level(d.mu);
        } catch (const HasMismatch&) {
            free = false;
        }
        ck.expect(free, tag + ": recovered circuit is mismatch-free");
    }

    const PermGate c3x = mcx_to_perm(4, {{{1, 2, 3}, 4}});
    const DenseUnitary u = DenseUnitary::from_perm(c3x);
    ck.expect(is_c4_dense(u), "C3X in C4");
    ck.expect(!is_c3_dense(u), "C3X not in C3 (dense)");
    ck.expect(is_c3_perm(c3x).has_value(), "C3X not in C3 (permutation)");
    ck.expect(mismatch_free_level({4, {{{1, 2, 3}, 4}}}) == 4, "C3X level");
    return ck.ok();
}

bool criterion10(Checker& ck) {
    const PermGate u3 = circuit_to_perm(uk_circuit(3), 7);
    ck.expect(!is_c3_perm(u3).has_value(), "U3 in C3");
    ck.expect(is_c3_perm(invert_perm(u3)).has_value(), "U3^-1 has a witness");
    ck.expect(!is_semi_clifford_perm(u3), "U3 not semi-Clifford");
    const DenseUnitary t = DenseUnitary::build("TOF 1 2 3\nTOF 1 3 2\n", 3);
    ck.expect(!is_c3_dense(t), "TOF123 TOF132 not in C3");
    ck.expect(!is_c4_dense(t), "TOF123 TOF132 not in C4");
    return ck.ok();
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool(Checker&)> run;
        double budget_seconds;
    };
    const std::vector<Criterion> criteria = {
        {"U3 end-to-end certificate", criterion1, 60},
        {"U4 and U5 certificates", criterion2, 120},
        {"Gottesman-Mochon verification", criterion3, 30},
        {"seven qubits is minimal", criterion4, 600},
        {"table/permutation bijection round trips", criterion5, 0},
        {"reduction pipeline", criterion6, 0},
        {"four-way semi-Clifford equivalence", criterion7, 0},
        {"triple products vanish below seven qubits", criterion8, 0},
        {"mismatch-free suite", criterion9, 0},
        {"U3 and TOF123 TOF132 counterexamples", criterion10, 0},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        Checker ck;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = c.run(ck);
            detail = std::to_string(ck.checks()) + " checks";
            if (!ok) detail = ck.summary();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
            ok = false;
            detail += "; over the time budget";
        }
        failed += !ok;
        std::printf("%s criterion %zu: %s (%s, %.2fs)\n", ok ? "PASS" : "FAIL", i + 1, c.name, detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
