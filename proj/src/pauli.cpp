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

#include "c3perm/pauli.hpp"

#include "c3perm/error.hpp"

namespace c3perm {

Pauli::Pauli(int s, F2Vec u, F2Vec v) : s_(((s % 4) + 4) % 4), u_(std::move(u)), v_(std::move(v)) {
    if (u_.dim() != v_.dim()) throw DimensionMismatch("X and Z parts differ in length");
}

Pauli Pauli::identity(int n) { return Pauli(0, F2Vec(n), F2Vec(n)); }
Pauli Pauli::x(int n, int i) { return Pauli(0, F2Vec::unit(n, i), F2Vec(n)); }
Pauli Pauli::z(int n, int i) { return Pauli(0, F2Vec(n), F2Vec::unit(n, i)); }
Pauli Pauli::y(int n, int i) { return Pauli(1, F2Vec::unit(n, i), F2Vec::unit(n, i)); }

Pauli Pauli::parse(std::string_view text) {
    int s = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        if (text[0] == '-') s += 2;
        text.remove_prefix(1);
        if (!text.empty() && text[0] == 'i') {
            s += 1;
            text.remove_prefix(1);
        }
    }
    const int n = static_cast<int>(text.size());
    if (n == 0) throw ParseError(1, "empty Pauli string");
    if (n > kMaxDim) throw ParseError(1, "Pauli string too long");
    F2Vec u(n), v(n);
    for (int i = 1; i <= n; ++i) {
        switch (text[i - 1]) {
            case 'I':
                break;
            case 'X':
                u.set(i);
                break;
            case 'Z':
                v.set(i);
                break;
            case 'Y':
                u.set(i);
                v.set(i);
                s += 1;
                break;
            default:
                throw ParseError(1, "bad Pauli letter '" + std::string(1, text[i - 1]) + "'");
        }
    }
    return Pauli(s, u, v);
}

bool Pauli::commutes(const Pauli& other) const {
    if (num_qubits() != other.num_qubits()) throw DimensionMismatch("Paulis on different widths");
    return u_.dot(other.v_) == v_.dot(other.u_);
}

std::string Pauli::to_string() const {
    const int n = num_qubits();
    std::string body;
    int ys = 0;
    for (int i = 1; i <= n; ++i) {
        if (u_[i] && v_[i]) {
            body += 'Y';
            ++ys;
        } else if (u_[i]) {
            body += 'X';
        } else if (v_[i]) {
            body += 'Z';
        } else {
            body += 'I';
        }
    }
    static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    return kPrefix[((s_ - ys) % 4 + 4) % 4] + body;
}

Pauli operator*(const Pauli& lhs, const Pauli& rhs) {
    if (lhs.num_qubits() != rhs.num_qubits()) throw DimensionMismatch("Paulis on different widths");
    // Z^v X^u' = (-1)^{v.u'} X^u' Z^v.
    const int sign = lhs.v_.dot(rhs.u_) ? 2 : 0;
    return Pauli(lhs.s_ + rhs.s_ + sign, lhs.u_ + rhs.u_, lhs.v_ + rhs.v_);
}

}  // namespace c3perm
