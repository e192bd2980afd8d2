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

// Gate lists in application order (the first gate listed acts first) and the
// line-oriented circuit text format shared by every front end:
//
//   # comment
//   TOF i j k      controls i, j; target k
//   CNOT i k       control i; target k
//   X k
//   CCZ i j k
//   CSWAP c a b    control c swaps a and b
//   H k
//   CZ i j, Z k, S k, T k
//
// Qubit indices are 1-based. Note that operator products such as
// "TOF_{3,4,5} TOF_{1,2,3}" read right to left, so TOF 1 2 3 comes first here.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "c3perm/perm_gate.hpp"

namespace c3perm {

enum class GateKind { X, Z, H, S, T, CNOT, CZ, TOF, CCZ, CSWAP };

std::string_view gate_name(GateKind kind);
/// Number of qubit arguments the gate takes.
int gate_arity(GateKind kind);
/// True for gates whose matrix is a permutation matrix.
bool is_permutation_kind(GateKind kind);

struct Gate {
    GateKind kind;
    std::vector<int> qubits;

    friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
    int n = 0;
    std::vector<Gate> gates;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Toffoli gate with controls normalized to c1 < c2.
struct Toffoli {
    int c1;
    int c2;
    int target;

    static Toffoli make(int a, int b, int target);
    friend auto operator<=>(const Toffoli&, const Toffoli&) = default;
};

using ToffoliCircuit = std::vector<Toffoli>;

/// Parses the circuit text format. With n = 0 the width is the largest index
/// used; otherwise every index must lie in [1, n]. Throws ParseError (or
/// UnknownGate) carrying the offending line number.
Circuit parse_circuit(std::string_view text, int n = 0);
std::string format_circuit(const Circuit& c);

Circuit to_circuit(const ToffoliCircuit& c, int n);
/// Extracts the Toffoli gates; throws PreconditionViolated on any other kind.
ToffoliCircuit toffolis_of(const Circuit& c);
std::string format_toffolis(const ToffoliCircuit& c);

/// Largest qubit index referenced, 0 for the empty circuit.
int max_qubit(const ToffoliCircuit& c);

/// Permutation realized by a circuit made of X, CNOT and TOF gates.
/// Throws IndexOutOfRange or PreconditionViolated (non-permutation gate).
PermGate circuit_to_perm(const Circuit& c);
PermGate circuit_to_perm(const ToffoliCircuit& c, int n);

}  // namespace c3perm
