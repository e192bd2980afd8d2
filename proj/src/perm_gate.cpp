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

#include "c3perm/perm_gate.hpp"

#include <numeric>
#include <string>

#include "c3perm/error.hpp"

namespace c3perm {

namespace {

void check_table_qubits(int n) {
    if (n < 0 || n > kMaxTableQubits) {
        throw TooLarge("truth tables are limited to " + std::to_string(kMaxTableQubits) + " qubits, got " +
                       std::to_string(n));
    }
}

}  // namespace

PermGate PermGate::identity(int n) {
    check_table_qubits(n);
    PermGate p;
    p.n_ = n;
    p.table_.resize(uint64_t{1} << n);
    std::iota(p.table_.begin(), p.table_.end(), 0u);
    return p;
}

PermGate PermGate::from_table(int n, std::vector<uint32_t> table) {
    check_table_qubits(n);
    const uint64_t size = uint64_t{1} << n;
    if (table.size() != size) {
        throw NotBijective("table has " + std::to_string(table.size()) + " entries, expected " + std::to_string(size));
    }
    std::vector<bool> seen(size, false);
    for (uint32_t y : table) {
        if (y >= size || seen[y]) throw NotBijective("table is not a bijection");
        seen[y] = true;
    }
    PermGate p;
    p.n_ = n;
    p.table_ = std::move(table);
    return p;
}

F2Vec PermGate::apply(const F2Vec& v) const {
    if (v.dim() != n_) throw DimensionMismatch("state dimension does not match gate");
    return F2Vec::from_bits(n_, table_[v.bits()]);
}

PermGate operator*(const PermGate& outer, const PermGate& inner) {
    if (outer.num_qubits() != inner.num_qubits()) throw DimensionMismatch("product of gates on different widths");
    std::vector<uint32_t> t(inner.size());
    for (uint64_t x = 0; x < inner.size(); ++x) t[x] = outer.table()[inner.table()[x]];
    return PermGate::from_table(inner.num_qubits(), std::move(t));
}

PermGate invert_perm(const PermGate& p) {
    std::vector<uint32_t> t(p.size());
    for (uint64_t x = 0; x < p.size(); ++x) t[p.table()[x]] = static_cast<uint32_t>(x);
    return PermGate::from_table(p.num_qubits(), std::move(t));
}

PermGate tensor_identity(const PermGate& p, int extra) {
    const int n = p.num_qubits() + extra;
    check_table_qubits(n);
    std::vector<uint32_t> t(uint64_t{1} << n);
    const uint64_t low = (uint64_t{1} << extra) - 1;
    for (uint64_t x = 0; x < t.size(); ++x) {
        t[x] = static_cast<uint32_t>((uint64_t{p.table()[x >> extra]} << extra) | (x & low));
    }
    return PermGate::from_table(n, std::move(t));
}

}  // namespace c3perm
