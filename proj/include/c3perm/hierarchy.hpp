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

// Membership tests for permutation gates: conjugation of Paulis, the C3
// test, level refutation by inverse coordinate degree, and the reduction of
// a C3 permutation to affine . staircase . affine.

#pragma once

#include <optional>
#include <string>

#include "c3perm/anf.hpp"
#include "c3perm/circuit.hpp"
#include "c3perm/pauli.hpp"
#include "c3perm/perm_gate.hpp"
#include "c3perm/staircase.hpp"

namespace c3perm {

/// p P p^-1 written as i^phase * sigma * D, where sigma is a permutation and
/// D = diag((-1)^{sign_exponent(a)}).
struct PauliConjugate {
    PermGate permutation;
    int phase = 0;
    AnfPoly sign_exponent;
    /// sigma is a translation and sign_exponent has degree at most one.
    bool is_pauli = false;
    std::optional<Pauli> pauli;
};

PauliConjugate conjugate_pauli_by_perm(const PermGate& p, const Pauli& pauli);

struct C3Witness {
    std::string generator;  // "X3" or "Z2"
    std::string reason;
};

/// nullopt when p is in C3. Checks X_1..X_n (conjugate must be affine), then
/// Z_1..Z_n (coordinate i of p^-1 must have degree at most two).
std::optional<C3Witness> is_c3_perm(const PermGate& p);

/// Largest coordinate degree d of p^-1 when d >= 2, certifying p is not in
/// C_d. nullopt for Clifford permutations.
std::optional<int> refute_level(const PermGate& p);
/// Same, given the coordinates of the inverse directly.
std::optional<int> refute_level_from_inverse(const PermPolyRep& inverse);

/// p = phi1 . mu . phi2 with mu in staircase form.
struct ReductionResult {
    AffineMap phi1;
    ToffoliCircuit mu;
    AffineMap phi2;
};

/// Throws NotInC3 for gates outside C3, InternalContradiction if a step that
/// cannot fail for C3 input fails anyway.
ReductionResult reduce_to_staircase(const PermGate& p);
PermGate recompose(const ReductionResult& r);

}  // namespace c3perm
