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

#include <random>
#include <set>

#include "c3perm/circuit.hpp"
#include "c3perm/desc_mult.hpp"
#include "c3perm/error.hpp"
#include "c3perm/hierarchy.hpp"
#include "c3perm/semi_clifford.hpp"
#include "doctest.h"

using namespace c3perm;

namespace {

const ToffoliCircuit kU3 = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {2, 5, 7}, {1, 6, 7}};
const ToffoliCircuit kPiPrime = {{1, 2, 3}, {3, 4, 5}};

PermGate gate(const char* text, int n = 0) { return circuit_to_perm(parse_circuit(text, n)); }

std::vector<Toffoli> all_triples(int n) {
    std::vector<Toffoli> out;
    for (int k = 1; k <= n; ++k) {
        for (int i = 1; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) out.push_back({i, j, k});
        }
    }
    return out;
}

ToffoliCircuit subset_circuit(const std::vector<Toffoli>& triples, uint64_t mask) {
    ToffoliCircuit c;
    for (size_t t = 0; t < triples.size(); ++t) {
        if (mask >> t & 1) c.push_back(triples[t]);
    }
    return c;
}

AffineMap random_affine(int n, std::mt19937_64& rng) {
    for (;;) {
        F2Mat m(n);
        for (int i = 1; i <= n; ++i) m.set_row(i, F2Vec::from_bits(n, rng() & dim_mask(n)));
        if (rank(m) == n) return {m, F2Vec::from_bits(n, rng() & dim_mask(n))};
    }
}

// Oracle for Pauli conjugation: apply p X^u Z^v p^-1 to each basis state.
// Returns (image, sign) pairs where sign is 0 or 1 (phase i^s excluded).
std::vector<std::pair<uint64_t, int>> conj_action(const PermGate& p, uint64_t u, uint64_t v) {
    const PermGate pinv = invert_perm(p);
    std::vector<std::pair<uint64_t, int>> out(p.size());
    for (uint64_t a = 0; a < p.size(); ++a) {
        const uint64_t b = pinv(a);
        const int sign = std::popcount(b & v) & 1;
        out[a] = {p(b ^ u), sign};
    }
    return out;
}

// Same action for a Pauli i^s X^w Z^z, without the phase.
std::vector<std::pair<uint64_t, int>> pauli_action(const Pauli& q) {
    const int n = q.num_qubits();
    std::vector<std::pair<uint64_t, int>> out(uint64_t{1} << n);
    for (uint64_t a = 0; a < out.size(); ++a) {
        out[a] = {a ^ q.x_part().bits(), std::popcount(a & q.z_part().bits()) & 1};
    }
    return out;
}

std::vector<F2Vec> label_rows(const std::vector<Pauli>& ps) {
    std::vector<F2Vec> rows;
    for (const auto& p : ps) {
        const int n = p.num_qubits();
        F2Vec l(2 * n);
        for (int i = 1; i <= n; ++i) {
            l.set(i, p.x_part()[i]);
            l.set(n + i, p.z_part()[i]);
        }
        rows.push_back(l);
    }
    return rows;
}

bool label_span_contains(const std::vector<Pauli>& gens, const Pauli& p) {
    auto rows = label_rows(gens);
    const int r = rank(rows);
    rows.push_back(label_rows({p})[0]);
    return rank(rows) == r;
}

}  // namespace

TEST_CASE("Pauli text and algebra") {
    const Pauli p = Pauli::parse("-iXZI");
    CHECK(p.to_string() == "-iXZI");
    CHECK(Pauli::parse("Y").phase() == 1);
    CHECK(Pauli::parse("Y").to_string() == "+Y");
    CHECK(Pauli::parse("+iY").to_string() == "+iY");
    CHECK((Pauli::parse("X") * Pauli::parse("Z")).to_string() == "-iY");
    CHECK((Pauli::parse("Z") * Pauli::parse("X")).to_string() == "+iY");
    CHECK((Pauli::parse("Y") * Pauli::parse("Y")).to_string() == "+I");
    CHECK_FALSE(Pauli::parse("XI").commutes(Pauli::parse("ZI")));
    CHECK(Pauli::parse("XX").commutes(Pauli::parse("ZZ")));
    CHECK_THROWS_AS(Pauli::parse("XQ"), ParseError);
}

TEST_CASE("conjugating Paulis by permutations") {
    const PauliConjugate y = conjugate_pauli_by_perm(PermGate::identity(1), Pauli::parse("Y"));
    CHECK(y.is_pauli);
    CHECK(y.permutation(0) == 1);
    CHECK(y.phase == 1);
    CHECK(y.sign_exponent.to_string() == "a1");
    REQUIRE(y.pauli.has_value());
    CHECK(y.pauli->to_string() == "+Y");

    const PauliConjugate t = conjugate_pauli_by_perm(gate("TOF 1 2 3"), Pauli::parse("XII"));
    CHECK_FALSE(t.is_pauli);
    CHECK(t.sign_exponent.is_zero());
    CHECK(t.permutation == gate("CNOT 2 3\nX 1", 3));

    const PauliConjugate c = conjugate_pauli_by_perm(gate("CNOT 1 2"), Pauli::parse("XI"));
    REQUIRE(c.is_pauli);
    CHECK(c.pauli->to_string() == "+XX");
}

TEST_CASE("conjugation matches the direct action") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const AffineMap f = random_affine(n, rng);
        const PermGate p = f.to_perm();
        const uint64_t u = rng() & dim_mask(n), v = rng() & dim_mask(n);
        const PauliConjugate c = conjugate_pauli_by_perm(p, Pauli(0, F2Vec::from_bits(n, u), F2Vec::from_bits(n, v)));
        REQUIRE(c.is_pauli);
        auto expected = conj_action(p, u, v);
        auto got = pauli_action(*c.pauli);
        // The pauli's phase is i^s with s even carrying the global sign.
        const int global = c.pauli->phase() / 2;
        for (auto& g : got) g.second ^= global;
        CHECK(got == expected);
    }
}

TEST_CASE("C3 test examples") {
    CHECK_FALSE(is_c3_perm(gate("TOF 1 2 3")).has_value());
    CHECK_FALSE(is_c3_perm(PermGate::identity(3)).has_value());
    const auto w = is_c3_perm(circuit_to_perm(kPiPrime, 5));
    REQUIRE(w.has_value());
    CHECK(w->generator == "X1");
    const PermGate u3 = circuit_to_perm(kU3, 7);
    CHECK_FALSE(is_c3_perm(u3).has_value());
    const auto wi = is_c3_perm(invert_perm(u3));
    REQUIRE(wi.has_value());
    const PermGate c3x = mcx_to_perm(4, {{{1, 2, 3}, 4}});
    REQUIRE(is_c3_perm(c3x).has_value());
    CHECK(is_c3_perm(c3x)->generator == "X1");
}

TEST_CASE("level refutation") {
    CHECK_FALSE(refute_level(PermGate::identity(3)).has_value());
    CHECK_FALSE(refute_level(gate("CNOT 1 2\nX 3")).has_value());
    const PermGate u3 = circuit_to_perm(kU3, 7);
    CHECK(refute_level(invert_perm(u3)) == 3);
    CHECK(refute_level(gate("TOF 1 2 3")) == 2);
}

TEST_CASE("C3 agrees with staircase associativity up to five qubits") {
    for (int n = 3; n <= 5; ++n) {
        const auto triples = all_triples(n);
        for (uint64_t mask = 0; mask < (uint64_t{1} << triples.size()); ++mask) {
            const ToffoliCircuit c = subset_circuit(triples, mask);
            REQUIRE(is_associative(from_staircase(c, n)) == !is_c3_perm(circuit_to_perm(c, n)).has_value());
        }
    }
}

TEST_CASE("reduction examples") {
    const PermGate u3 = circuit_to_perm(kU3, 7);
    const ReductionResult r = reduce_to_staircase(u3);
    CHECK(recompose(r) == u3);
    CHECK(is_staircase(r.mu));

    const AffineMap x1{F2Mat::identity(7), F2Vec::unit(7, 1)};
    const AffineMap cnot{F2Mat::parse("1000000/1100000/0010000/0001000/0000100/0000010/0000001"), F2Vec(7)};
    const PermGate p = x1.to_perm() * u3 * cnot.to_perm();
    const ReductionResult rp = reduce_to_staircase(p);
    CHECK(recompose(rp) == p);
    CHECK(is_staircase(rp.mu));
    CHECK(is_associative(from_staircase(rp.mu, 7)));

    CHECK_THROWS_AS(reduce_to_staircase(circuit_to_perm(kPiPrime, 5)), NotInC3);
}

TEST_CASE("reduction of random conjugated staircase gates") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 150) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const auto triples = all_triples(n);
        const ToffoliCircuit c = subset_circuit(triples, rng() & ((uint64_t{1} << triples.size()) - 1));
        if (!is_associative(from_staircase(c, n))) continue;
        const PermGate p = random_affine(n, rng).to_perm() * circuit_to_perm(c, n) * random_affine(n, rng).to_perm();
        const ReductionResult r = reduce_to_staircase(p);
        CHECK(recompose(r) == p);
        CHECK(is_staircase(r.mu));
        CHECK(is_associative(from_staircase(r.mu, n)));
        ++done;
    }
}

TEST_CASE("semi-Clifford classification") {
    CHECK(is_semi_clifford_perm(gate("TOF 1 2 3")));
    CHECK(is_semi_clifford_general(gate("TOF 1 2 3")));
    const PermGate u3 = circuit_to_perm(kU3, 7);
    CHECK_FALSE(is_semi_clifford_perm(u3));
    CHECK_FALSE(is_semi_clifford_general(u3));
    CHECK_FALSE(is_semi_clifford_c3(u3));
    const PermGate padded = tensor_identity(u3, 1);
    CHECK_FALSE(is_semi_clifford_c3(padded));
    CHECK_FALSE(is_semi_clifford_general(padded));
    CHECK_THROWS_AS(is_semi_clifford_general(PermGate::identity(11)), TooLarge);
    CHECK_THROWS_AS(is_semi_clifford_c3(circuit_to_perm(kPiPrime, 5)), NotInC3);
}

TEST_CASE("fast and general semi-Clifford routes agree") {
    std::mt19937_64 rng(77);
    for (int n = 3; n <= 6; ++n) {
        const auto triples = all_triples(n);
        const uint64_t total = uint64_t{1} << triples.size();
        const int samples = n <= 4 ? static_cast<int>(total) : 300;
        for (int s = 0; s < samples; ++s) {
            const uint64_t mask = n <= 4 ? static_cast<uint64_t>(s) : (rng() & (total - 1));
            const ToffoliCircuit c = subset_circuit(triples, mask);
            if (!is_associative(from_staircase(c, n))) continue;
            const PermGate p = circuit_to_perm(c, n);
            CHECK(is_semi_clifford_c3(p) == is_semi_clifford_general(p));
        }
    }
}

TEST_CASE("semi-Clifford decomposition examples") {
    const PermGate tof = gate("TOF 1 2 3");
    const auto d = semi_clifford_decompose(tof);
    CHECK(recompose(d) == tof);
    REQUIRE(d.mu.gates.size() == 1);
    CHECK(d.mu.gates[0].target == 3);
    CHECK(d.mu.gates[0].controls == std::vector<int>{1, 2});
    CHECK(d.phi1.to_perm() == PermGate::identity(3));
    CHECK(d.phi2.to_perm() == PermGate::identity(3));

    const PermGate c3x = mcx_to_perm(4, {{{1, 2, 3}, 4}});
    const auto dc = semi_clifford_decompose(c3x);
    CHECK(recompose(dc) == c3x);
    CHECK(mismatch_free_level(dc.mu) == 4);

    const PermGate conj = gate("CNOT 2 3\nTOF 1 2 4\nCNOT 2 3\n");
    CHECK(recompose(semi_clifford_decompose(conj)) == conj);

    CHECK_THROWS_AS(semi_clifford_decompose(circuit_to_perm(kU3, 7)), NotSemiClifford);
}

TEST_CASE("mismatch-free level") {
    CHECK(mismatch_free_level({2, {{{1}, 2}}}) == 2);
    CHECK(mismatch_free_level({3, {{{1, 2}, 3}}}) == 3);
    CHECK(mismatch_free_level({4, {{{1, 2, 3}, 4}}}) == 4);
    CHECK(mismatch_free_level({4, {}}) == 1);
    CHECK_THROWS_AS(mismatch_free_level({4, {{{1, 2}, 3}, {{1, 3}, 4}}}), HasMismatch);
}

TEST_CASE("commutation and mismatch") {
    CHECK(commute_iff_mismatch_free(3, {{1, 2}, 3}, {{1, 3}, 2}) == std::pair{false, false});
    CHECK(commute_iff_mismatch_free(4, {{1, 2}, 3}, {{1, 2}, 4}) == std::pair{true, true});
    CHECK(commute_iff_mismatch_free(4, {{1, 3}, 4}, {{1, 2}, 3}) == std::pair{false, false});
}

TEST_CASE("maximal abelian extension") {
    const std::vector<Pauli> zs = {Pauli::parse("ZII"), Pauli::parse("IZI"), Pauli::parse("IIZ")};
    CHECK(extend_to_max_abelian(zs, {Pauli::parse("ZZI")}) == zs);

    const auto a1 = extend_to_max_abelian(zs, {Pauli::parse("XII")});
    CHECK(a1 == std::vector<Pauli>{Pauli::parse("XII"), Pauli::parse("IZI"), Pauli::parse("IIZ")});

    const auto a2 = extend_to_max_abelian(zs, {Pauli::parse("XXI")});
    CHECK(a2 == std::vector<Pauli>{Pauli::parse("XXI"), Pauli::parse("ZZI"), Pauli::parse("IIZ")});

    CHECK_THROWS_AS(extend_to_max_abelian({Pauli::parse("ZI")}, {}), PreconditionViolated);
    CHECK_THROWS_AS(extend_to_max_abelian(zs, {Pauli::parse("XII"), Pauli::parse("ZII")}), PreconditionViolated);
}

TEST_CASE("maximal abelian extension on random inputs") {
    std::mt19937_64 rng(5);
    const int n = 3;
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        // A: conjugate the Z basis by a random affine Clifford permutation
        // and a random Hadamard pattern, so X and Z parts both occur.
        std::vector<Pauli> a;
        const uint64_t hmask = rng() & 7;
        const AffineMap f = random_affine(n, rng);
        for (int i = 1; i <= n; ++i) {
            Pauli z = Pauli::z(n, i);
            if (hmask >> (n - i) & 1) z = Pauli::x(n, i);
            a.push_back(*conjugate_pauli_by_perm(f.to_perm(), z).pauli);
        }
        std::vector<Pauli> b;
        for (int k = 0; k < 2; ++k) {
            Pauli cand(0, F2Vec::from_bits(n, rng() & 7), F2Vec::from_bits(n, rng() & 7));
            bool ok = true;
            for (const auto& x : b) ok = ok && x.commutes(cand);
            if (ok) b.push_back(cand);
        }
        const auto out = extend_to_max_abelian(a, b);
        REQUIRE(out.size() == static_cast<size_t>(n));
        CHECK(rank(label_rows(out)) == n);
        for (size_t i = 0; i < out.size(); ++i) {
            for (size_t j = i + 1; j < out.size(); ++j) CHECK(out[i].commutes(out[j]));
        }
        std::vector<Pauli> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        for (const auto& x : b) CHECK(label_span_contains(out, x));
        for (const auto& x : out) CHECK(label_span_contains(ab, x));
        ++checked;
    }
    CHECK(checked == 400);
}
