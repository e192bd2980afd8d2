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

#include "c3perm/circuit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

#include "c3perm/error.hpp"

namespace c3perm {

namespace {

struct KindInfo {
    GateKind kind;
    std::string_view name;
    int arity;
    bool permutation;
};

constexpr std::array<KindInfo, 10> kKinds = {{
    {GateKind::X, "X", 1, true},
    {GateKind::Z, "Z", 1, false},
    {GateKind::H, "H", 1, false},
    {GateKind::S, "S", 1, false},
    {GateKind::T, "T", 1, false},
    {GateKind::CNOT, "CNOT", 2, true},
    {GateKind::CZ, "CZ", 2, false},
    {GateKind::TOF, "TOF", 3, true},
    {GateKind::CCZ, "CCZ", 3, false},
    {GateKind::CSWAP, "CSWAP", 3, true},
}};

const KindInfo& info(GateKind kind) {
    for (const auto& k : kKinds) {
        if (k.kind == kind) return k;
    }
    throw Error("unhandled gate kind");
}

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> words;
    std::string cur;
    for (char ch : line) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) words.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    return words;
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }
int gate_arity(GateKind kind) { return info(kind).arity; }
bool is_permutation_kind(GateKind kind) { return info(kind).permutation; }

Toffoli Toffoli::make(int a, int b, int target) { return a < b ? Toffoli{a, b, target} : Toffoli{b, a, target}; }

Circuit parse_circuit(std::string_view text, int n) {
    if (n < 0) throw PreconditionViolated("qubit count must be non-negative");
    Circuit c;
    int line_no = 0;
    int widest = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto words = split_words(line);
        if (words.empty()) continue;

        std::string name = words[0];
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::toupper(ch); });
        const KindInfo* kind = nullptr;
        for (const auto& k : kKinds) {
            if (k.name == name) kind = &k;
        }
        if (kind == nullptr) throw UnknownGate(line_no, "unknown gate '" + words[0] + "'");
        if (static_cast<int>(words.size()) - 1 != kind->arity) {
            throw ParseError(line_no, std::string(kind->name) + " takes " + std::to_string(kind->arity) +
                                          " qubit(s), got " + std::to_string(words.size() - 1));
        }
        Gate g{kind->kind, {}};
        for (size_t w = 1; w < words.size(); ++w) {
            int q = 0;
            const auto& word = words[w];
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), q);
            if (ec != std::errc() || ptr != word.data() + word.size()) {
                throw ParseError(line_no, "bad qubit index '" + word + "'");
            }
            if (q < 1) throw ParseError(line_no, "qubit indices are 1-based, got " + word);
            if (n > 0 && q > n) {
                throw ParseError(line_no, "qubit " + word + " exceeds width " + std::to_string(n));
            }
            if (q > kMaxDim) throw ParseError(line_no, "qubit " + word + " exceeds the supported width");
            if (std::find(g.qubits.begin(), g.qubits.end(), q) != g.qubits.end()) {
                throw ParseError(line_no, "qubit " + word + " repeated within one gate");
            }
            g.qubits.push_back(q);
            widest = std::max(widest, q);
        }
        c.gates.push_back(std::move(g));
    }
    c.n = n > 0 ? n : widest;
    return c;
}

std::string format_circuit(const Circuit& c) {
    std::ostringstream out;
    for (const auto& g : c.gates) {
        out << gate_name(g.kind);
        for (int q : g.qubits) out << ' ' << q;
        out << '\n';
    }
    return out.str();
}

Circuit to_circuit(const ToffoliCircuit& c, int n) {
    Circuit out;
    out.n = n;
    for (const auto& t : c) out.gates.push_back({GateKind::TOF, {t.c1, t.c2, t.target}});
    return out;
}

ToffoliCircuit toffolis_of(const Circuit& c) {
    ToffoliCircuit out;
    for (const auto& g : c.gates) {
        if (g.kind != GateKind::TOF) {
            throw PreconditionViolated("expected only TOF gates, found " + std::string(gate_name(g.kind)));
        }
        out.push_back(Toffoli::make(g.qubits[0], g.qubits[1], g.qubits[2]));
    }
    return out;
}

std::string format_toffolis(const ToffoliCircuit& c) { return format_circuit(to_circuit(c, max_qubit(c))); }

int max_qubit(const ToffoliCircuit& c) {
    int m = 0;
    for (const auto& t : c) m = std::max({m, t.c1, t.c2, t.target});
    return m;
}

PermGate circuit_to_perm(const Circuit& c) {
    const int n = c.n;
    if (n > kMaxTableQubits) throw TooLarge("circuit too wide for a truth table");
    for (const auto& g : c.gates) {
        if (!is_permutation_kind(g.kind) || g.kind == GateKind::CSWAP) {
            throw PreconditionViolated(std::string(gate_name(g.kind)) + " is not allowed in a permutation circuit");
        }
        if (static_cast<int>(g.qubits.size()) != gate_arity(g.kind)) throw PreconditionViolated("bad gate arity");
        for (int q : g.qubits) {
            if (q < 1 || q > n) throw IndexOutOfRange("qubit " + std::to_string(q) + " outside [1, " + std::to_string(n) + "]");
        }
        for (size_t a = 0; a < g.qubits.size(); ++a) {
            for (size_t b = a + 1; b < g.qubits.size(); ++b) {
                if (g.qubits[a] == g.qubits[b]) throw PreconditionViolated("repeated qubit within a gate");
            }
        }
    }
    std::vector<uint32_t> table(uint64_t{1} << n);
    for (uint64_t x0 = 0; x0 < table.size(); ++x0) {
        uint64_t x = x0;
        for (const auto& g : c.gates) {
            const uint64_t target = component_bit(n, g.qubits.back());
            uint64_t controls = 0;
            for (size_t a = 0; a + 1 < g.qubits.size(); ++a) controls |= component_bit(n, g.qubits[a]);
            if ((x & controls) == controls) x ^= target;
        }
        table[x0] = static_cast<uint32_t>(x);
    }
    return PermGate::from_table(n, std::move(table));
}

PermGate circuit_to_perm(const ToffoliCircuit& c, int n) {
    for (const auto& t : c) {
        if (t.c1 == t.c2 || t.c1 == t.target || t.c2 == t.target) {
            throw PreconditionViolated("Toffoli gate with repeated qubit");
        }
    }
    return circuit_to_perm(to_circuit(c, n));
}

}  // namespace c3perm
