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

#pragma once

#include <cstdint>
#include <vector>

#include "c3perm/f2.hpp"

namespace c3perm {

/// Largest qubit count for which a permutation is stored as a truth table.
inline constexpr int kMaxTableQubits = 24;

/// A bijection on the 2^n basis states. State index convention: qubit 1 is
/// the most significant bit, so an index doubles as the packed F2Vec word.
class PermGate {
   public:
    PermGate() = default;

    static PermGate identity(int n);
    /// Throws NotBijective if the table is not a permutation of [0, 2^n).
    static PermGate from_table(int n, std::vector<uint32_t> table);

    int num_qubits() const { return n_; }
    uint64_t size() const { return table_.size(); }
    const std::vector<uint32_t>& table() const { return table_; }

    uint64_t operator()(uint64_t state) const { return table_[state]; }
    F2Vec apply(const F2Vec& v) const;

    friend bool operator==(const PermGate&, const PermGate&) = default;

   private:
    int n_ = 0;
    std::vector<uint32_t> table_;
};

/// Operator product: (outer * inner)(x) = outer(inner(x)), i.e. inner acts first.
PermGate operator*(const PermGate& outer, const PermGate& inner);

PermGate invert_perm(const PermGate& p);

/// The gate p tensored with the identity on `extra` trailing qubits.
PermGate tensor_identity(const PermGate& p, int extra);

}  // namespace c3perm
