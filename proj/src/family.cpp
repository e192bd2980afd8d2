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

#include "c3perm/family.hpp"

#include <algorithm>
#include <functional>

#include "c3perm/error.hpp"
#include "c3perm/hierarchy.hpp"

namespace c3perm {

namespace {

void check_k(int k, int lo) {
    if (k < lo || k > kMaxFamilyK) {
        throw PreconditionViolated("k must lie in [" + std::to_string(lo) + ", " + std::to_string(kMaxFamilyK) + "]");
    }
}

void check_subset(int k, int subset) {
    if (subset < 1 || subset > uk_qubits(k)) throw IndexOutOfRange("subset label out of range");
}

}  // namespace

int uk_qubits(int k) { return (1 << k) - 1; }

int uk_gate_count(int k) {
    int p3 = 1;
    for (int i = 0; i < k; ++i) p3 *= 3;
    return (p3 - (1 << (k + 1)) + 1) / 2;
}

ToffoliCircuit uk_circuit(int k) {
    check_k(k, 2);
    const int n = uk_qubits(k);
    ToffoliCircuit c;
    for (int s = 1; s <= n; ++s) {
        for (int t = s + 1; t <= n; ++t) {
            if ((s & t) == 0) c.push_back({s, t, s | t});
        }
    }
    std::sort(c.begin(), c.end(), [](const Toffoli& a, const Toffoli& b) {
        return std::tie(a.target, a.c1, a.c2) < std::tie(b.target, b.c1, b.c2);
    });
    return c;
}

DescMult uk_mult(int k) {
    check_k(k, 2);
    const int n = uk_qubits(k);
    DescMult m(n);
    for (int s = 1; s <= n; ++s) {
        for (int t = s + 1; t <= n; ++t) {
            if ((s & t) == 0) m.set_bits(s, t, component_bit(n, s | t));
        }
    }
    return m;
}

AnfPoly uk_coordinate(int k, int subset) {
    check_k(k, 2);
    check_subset(k, subset);
    const int n = uk_qubits(k);
    std::vector<uint64_t> monomials;
    // Peel the block containing the lowest remaining element.
    std::function<void(int, uint64_t)> partitions = [&](int rest, uint64_t acc) {
        if (rest == 0) {
            monomials.push_back(acc);
            return;
        }
        const int low = rest & -rest;
        const int others = rest ^ low;
        for (int sub = others;; sub = (sub - 1) & others) {
            const int block = sub | low;
            partitions(rest ^ block, acc | component_bit(n, block));
            if (sub == 0) break;
        }
    };
    partitions(subset, 0);
    return AnfPoly::from_monomials(n, std::move(monomials));
}

AnfPoly uk_inverse_coordinate(int k, int subset) {
    check_k(k, 2);
    check_subset(k, subset);
    const int n = uk_qubits(k);
    std::vector<uint64_t> monomials = {component_bit(n, subset)};
    for (int t1 = (subset - 1) & subset; t1 > 0; t1 = (t1 - 1) & subset) {
        const int t2 = subset ^ t1;
        if (t1 < t2) monomials.push_back(component_bit(n, t1) | component_bit(n, t2));
    }
    return AnfPoly::from_monomials(n, std::move(monomials));
}

UkCertificate verify_uk(int k) {
    check_k(k, 3);
    UkCertificate cert;
    cert.k = k;
    cert.n = uk_qubits(k);
    const ToffoliCircuit circuit = uk_circuit(k);
    cert.gate_count = static_cast<int>(circuit.size());
    const DescMult m = uk_mult(k);
    cert.in_c3 = is_associative(m) && from_staircase(circuit, cert.n) == m;
    const AnfPoly top = uk_coordinate(k, cert.n);
    cert.top_coordinate = top.to_string();
    int degree = 0;
    for (int s = 1; s <= cert.n; ++s) degree = std::max(degree, uk_coordinate(k, s).degree());
    cert.inverse_refuted_at = degree;
    cert.max_product_size = max_nonzero_product_size(m);

    if (k <= 4) {
        cert.truth_table_checked = true;
        const PermGate u = circuit_to_perm(circuit, cert.n);
        bool agrees = u == mult_to_perm(m);
        const PermGate uinv = invert_perm(u);
        const PermPolyRep coords = perm_coords(u);
        const PermPolyRep inv_coords = perm_coords(uinv);
        for (int s = 1; s <= cert.n && agrees; ++s) {
            agrees = coords.coords[s - 1] == uk_coordinate(k, s) &&
                     inv_coords.coords[s - 1] == uk_inverse_coordinate(k, s);
        }
        agrees = agrees && refute_level(uinv) == degree && !is_c3_perm(u).has_value();
        cert.truth_table_agrees = agrees;
    }
    return cert;
}

}  // namespace c3perm
