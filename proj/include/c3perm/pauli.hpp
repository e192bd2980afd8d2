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

#include <string>
#include <string_view>

#include "c3perm/f2.hpp"

namespace c3perm {

/// The operator i^s X^u Z^v on n qubits, s taken mod 4. Text form is a
/// string over {I, X, Y, Z} with an optional prefix in {+, -, +i, -i};
/// each Y stands for iXZ on its qubit.
class Pauli {
   public:
    Pauli() = default;
    /// Phase-free X^u Z^v times i^s.
    Pauli(int s, F2Vec u, F2Vec v);

    static Pauli identity(int n);
    static Pauli x(int n, int i);
    static Pauli z(int n, int i);
    static Pauli y(int n, int i);
    static Pauli parse(std::string_view text);

    int num_qubits() const { return u_.dim(); }
    int phase() const { return s_; }
    const F2Vec& x_part() const { return u_; }
    const F2Vec& z_part() const { return v_; }

    /// Same X and Z parts, phases ignored.
    bool same_label(const Pauli& other) const { return u_ == other.u_ && v_ == other.v_; }
    bool commutes(const Pauli& other) const;

    std::string to_string() const;

    friend Pauli operator*(const Pauli& lhs, const Pauli& rhs);
    friend bool operator==(const Pauli&, const Pauli&) = default;

   private:
    int s_ = 0;
    F2Vec u_;
    F2Vec v_;
};

}  // namespace c3perm
