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

// Semi-Clifford classification of permutation gates and circuits of
// multi-controlled NOT gates with no target/control mismatch.

#pragma once

#include <utility>
#include <vector>

#include "c3perm/f2.hpp"
#include "c3perm/pauli.hpp"
#include "c3perm/perm_gate.hpp"
#include "c3perm/staircase.hpp"

namespace c3perm {

/// Largest width accepted by the exhaustive label computation.
inline constexpr int kMaxSemiCliffordQubits = 10;

/// Multi-controlled NOT. No controls means a plain X.
struct McxGate {
    std::vector<int> controls;  // sorted, 1-based
    int target;

    friend auto operator<=>(const McxGate&, const McxGate&) = default;
};

struct MismatchFreeCircuit {
    int n = 0;
    std::vector<McxGate> gates;
};

PermGate mcx_to_perm(int n, const std::vector<McxGate>& gates);

/// Labels (u, v) with p X^u Z^v p^-1 a Pauli. The set splits as
/// {u : conjugate of X^u is a translation} x {v : v . p^-1 is affine}.
struct PauliLabelGroup {
    std::vector<F2Vec> x_basis;
    std::vector<F2Vec> z_basis;

    int dim() const { return static_cast<int>(x_basis.size() + z_basis.size()); }
};

PauliLabelGroup pauli_label_group(const PermGate& p);

/// Dimension of the largest isotropic subspace of the label group.
int max_isotropic_dim(const PauliLabelGroup& g);

/// Exact route for n <= 10: some maximal abelian Pauli subgroup is mapped to
/// Paulis. Throws TooLarge above that.
bool is_semi_clifford_general(const PermGate& p);
/// For gates in C3: reduce to staircase form and test that all triple
/// products vanish. Throws NotInC3.
bool is_semi_clifford_c3(const PermGate& p);
/// Uses the C3 route when it applies, the general route otherwise.
bool is_semi_clifford_perm(const PermGate& p);

struct SemiCliffordDecomposition {
    AffineMap phi1;
    MismatchFreeCircuit mu;
    AffineMap phi2;
};

/// p = phi1 . mu . phi2. Throws NotSemiClifford.
SemiCliffordDecomposition semi_clifford_decompose(const PermGate& p);
PermGate recompose(const SemiCliffordDecomposition& d);

/// Largest control count plus one (1 for an empty circuit). Throws
/// HasMismatch with the 1-based indices of the first offending pair.
int mismatch_free_level(const MismatchFreeCircuit& c);

/// (gates commute, gates are mismatch-free); equal for every pair.
std::pair<bool, bool> commute_iff_mismatch_free(int n, const McxGate& g1, const McxGate& g2);

/// Extends B to a maximal abelian generating set A' with B in A' in <A, B>,
/// swapping in each b and replacing the generators it anticommutes with by
/// products of consecutive pairs. Throws PreconditionViolated unless A is n
/// independent commuting generators and B is abelian.
std::vector<Pauli> extend_to_max_abelian(const std::vector<Pauli>& a, const std::vector<Pauli>& b);

}  // namespace c3perm
