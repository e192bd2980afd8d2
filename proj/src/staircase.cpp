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

#include "c3perm/staircase.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "c3perm/anf.hpp"
#include "c3perm/error.hpp"

namespace c3perm {

namespace {

uint64_t top_two_bits(uint64_t v) {
    const uint64_t first = std::bit_floor(v);
    return first | std::bit_floor(v ^ first);
}

std::string monomial_string(int n, uint64_t mask) {
    return AnfPoly::monomial(n, mask).to_string();
}

}  // namespace

bool is_staircase(const ToffoliCircuit& c) {
    std::set<Toffoli> seen;
    int last_target = 0;
    for (const auto& g : c) {
        if (!(g.c1 >= 1 && g.c1 < g.c2 && g.c2 < g.target)) return false;
        if (g.target < last_target) return false;
        if (!seen.insert(g).second) return false;
        last_target = g.target;
    }
    return true;
}

StaircaseOutcome to_staircase(const PermGate& p) {
    const int n = p.num_qubits();
    const PermPolyRep inv = perm_coords(invert_perm(p));
    ToffoliCircuit circuit;
    for (int k = 1; k <= n; ++k) {
        const uint64_t ak = component_bit(n, k);
        const AnfPoly& coord = inv.coords[k - 1];
        if (!coord.contains(ak)) return NotStaircase{k, monomial_string(n, ak) + " missing"};
        for (uint64_t mono : coord.monomials()) {
            if (mono == ak) continue;
            const auto vars = monomial_variables(n, mono);
            if (vars.size() != 2 || vars[1] >= k) return NotStaircase{k, monomial_string(n, mono)};
            circuit.push_back({vars[0], vars[1], k});
        }
    }
    std::sort(circuit.begin(), circuit.end(), [](const Toffoli& a, const Toffoli& b) {
        return std::tie(a.target, a.c1, a.c2) < std::tie(b.target, b.c1, b.c2);
    });
    if (circuit_to_perm(circuit, n) != p) throw InternalContradiction("staircase readout does not recompose");
    return circuit;
}

AffineMap AffineMap::identity(int n) { return {F2Mat::identity(n), F2Vec(n)}; }

uint64_t AffineMap::apply(uint64_t v) const {
    const int n = m.dim();
    uint64_t out = w.bits();
    for (int i = 1; i <= n; ++i) {
        if (std::popcount(m.row_bits(i) & v) & 1) out ^= component_bit(n, i);
    }
    return out;
}

F2Vec AffineMap::apply(const F2Vec& v) const {
    if (v.dim() != m.dim()) throw DimensionMismatch("affine map applied to wrong dimension");
    return F2Vec::from_bits(m.dim(), apply(v.bits()));
}

PermGate AffineMap::to_perm() const {
    const int n = m.dim();
    if (n > kMaxTableQubits) throw TooLarge("affine map too wide for a truth table");
    std::vector<uint32_t> table(uint64_t{1} << n);
    for (uint64_t v = 0; v < table.size(); ++v) table[v] = static_cast<uint32_t>(apply(v));
    return PermGate::from_table(n, std::move(table));
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
    return {outer.m * inner.m, outer.m * inner.w + outer.w};
}

AffineMap inverse(const AffineMap& a) {
    F2Mat mi = invert(a.m);
    return {mi, mi * a.w};
}

std::optional<AffineMap> as_affine(const PermGate& p) {
    const int n = p.num_qubits();
    const uint64_t w = p(0);
    std::vector<F2Vec> columns;
    for (int j = 1; j <= n; ++j) columns.push_back(F2Vec::from_bits(n, p(component_bit(n, j)) ^ w));
    // Walk all states, deriving each linear image from the state with its
    // lowest set bit cleared.
    std::vector<uint64_t> linear(p.size(), 0);
    for (uint64_t v = 1; v < p.size(); ++v) {
        const uint64_t low = v & (~v + 1);
        const int j = n - std::countr_zero(low);
        linear[v] = linear[v ^ low] ^ columns[j - 1].bits();
        if ((linear[v] ^ w) != p(v)) return std::nullopt;
    }
    return AffineMap{F2Mat::from_columns(columns), F2Vec::from_bits(n, w)};
}

bool staircase_conditions(const PermGate& p) {
    if (p(0) != 0) return false;
    for (uint64_t v = 1; v < p.size(); ++v) {
        if (std::has_single_bit(v)) {
            if (p(v) != v) return false;
        } else if (top_two_bits(v) != top_two_bits(p(v))) {
            return false;
        }
    }
    return true;
}

}  // namespace c3perm
