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

// The U_k family on 2^k - 1 qubits. Qubit q stands for the nonempty subset
// of [k] given by the binary digits of q (bit j - 1 set means j is in the
// subset), so the singleton {j} is qubit 2^(j-1). Under this labeling every
// gate TOF(S, T, S u T) has its target above both controls.

#pragma once

#include <cstdint>
#include <string>

#include "c3perm/anf.hpp"
#include "c3perm/circuit.hpp"
#include "c3perm/desc_mult.hpp"

namespace c3perm {

inline constexpr int kMaxFamilyK = 5;

int uk_qubits(int k);
/// (3^k - 2^(k+1) + 1) / 2.
int uk_gate_count(int k);

/// One TOF per unordered pair of disjoint nonempty subsets, sorted by target.
ToffoliCircuit uk_circuit(int k);
/// e_S e_T = e_{S u T} for disjoint S, T and 0 otherwise.
DescMult uk_mult(int k);

/// Coordinate S of U_k: sum over set partitions {T_1..T_m} of S of the
/// products a_{T_1} ... a_{T_m}. `subset` is the qubit index of S.
AnfPoly uk_coordinate(int k, int subset);
/// Coordinate S of the inverse: a_S plus a_{T1} a_{T2} over unordered
/// splittings S = T1 u T2.
AnfPoly uk_inverse_coordinate(int k, int subset);

struct UkCertificate {
    int k = 0;
    int n = 0;
    int gate_count = 0;
    bool in_c3 = false;
    /// Degree of the top coordinate of U_k, so U_k^-1 is not in C at this level.
    int inverse_refuted_at = 0;
    std::string top_coordinate;
    int max_product_size = 0;
    /// k <= 4: circuit, multiplication and analytic coordinates were compared
    /// against truth tables.
    bool truth_table_checked = false;
    bool truth_table_agrees = false;
};

/// 3 <= k <= 5.
UkCertificate verify_uk(int k);

}  // namespace c3perm
