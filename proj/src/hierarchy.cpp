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

#include "c3perm/hierarchy.hpp"

#include <algorithm>
#include <bit>

#include "c3perm/error.hpp"

namespace c3perm {

namespace {

bool parity(uint64_t x) { return std::popcount(x) & 1; }

// Exponent a -> v . p^-1(a) as a truth table.
std::vector<uint8_t> sign_table(const PermGate& pinv, uint64_t v) {
    std::vector<uint8_t> t(pinv.size());
    for (uint64_t a = 0; a < t.size(); ++a) t[a] = parity(pinv(a) & v);
    return t;
}

// sigma(a) = p(p^-1(a) + u).
PermGate shifted(const PermGate& p, const PermGate& pinv, uint64_t u) {
    std::vector<uint32_t> t(p.size());
    for (uint64_t a = 0; a < t.size(); ++a) t[a] = p(pinv(a) ^ u);
    return PermGate::from_table(p.num_qubits(), std::move(t));
}

bool is_translation(const PermGate& sigma) {
    const uint64_t w = sigma(0);
    for (uint64_t a = 1; a < sigma.size(); ++a) {
        if ((sigma(a) ^ a) != w) return false;
    }
    return true;
}

}  // namespace

PauliConjugate conjugate_pauli_by_perm(const PermGate& p, const Pauli& pauli) {
    const int n = p.num_qubits();
    if (pauli.num_qubits() != n) throw DimensionMismatch("Pauli and gate widths differ");
    const PermGate pinv = invert_perm(p);
    PauliConjugate out;
    out.permutation = shifted(p, pinv, pauli.x_part().bits());
    out.phase = pauli.phase();
    out.sign_exponent = tt_to_anf(sign_table(pinv, pauli.z_part().bits()));
    out.is_pauli = is_translation(out.permutation) && out.sign_exponent.degree() <= 1;
    if (out.is_pauli) {
        F2Vec z(n);
        int s = out.phase;
        for (uint64_t mono : out.sign_exponent.monomials()) {
            if (mono == 0) {
                s += 2;
            } else {
                z += F2Vec::from_bits(n, mono);
            }
        }
        out.pauli = Pauli(s, F2Vec::from_bits(n, out.permutation(0)), z);
    }
    return out;
}

std::optional<C3Witness> is_c3_perm(const PermGate& p) {
    const int n = p.num_qubits();
    const PermGate pinv = invert_perm(p);
    for (int i = 1; i <= n; ++i) {
        if (!as_affine(shifted(p, pinv, component_bit(n, i)))) {
            return C3Witness{"X" + std::to_string(i), "conjugate is not an affine permutation"};
        }
    }
    for (int i = 1; i <= n; ++i) {
        const int d = perm_coordinate(pinv, i).degree();
        if (d > 2) {
            return C3Witness{"Z" + std::to_string(i),
                             "coordinate " + std::to_string(i) + " of the inverse has degree " + std::to_string(d)};
        }
    }
    return std::nullopt;
}

std::optional<int> refute_level_from_inverse(const PermPolyRep& inverse) {
    const int d = inverse.max_degree();
    if (d < 2) return std::nullopt;
    return d;
}

std::optional<int> refute_level(const PermGate& p) { return refute_level_from_inverse(perm_coords(invert_perm(p))); }

ReductionResult reduce_to_staircase(const PermGate& p) {
    if (auto w = is_c3_perm(p)) throw NotInC3(w->generator, w->reason);
    const int n = p.num_qubits();

    // Translate so that 0 is fixed.
    const uint64_t w0 = p(0);
    std::vector<uint32_t> t1(p.size());
    for (uint64_t a = 0; a < p.size(); ++a) t1[a] = static_cast<uint32_t>(p(a) ^ w0);
    const PermGate p1 = PermGate::from_table(n, std::move(t1));
    const PermGate p1inv = invert_perm(p1);

    // Each conjugate of X_j is a -> (I + A_j) a + b_j.
    std::vector<F2Mat> as;
    std::vector<F2Vec> bs;
    for (int j = 1; j <= n; ++j) {
        auto aff = as_affine(shifted(p1, p1inv, component_bit(n, j)));
        if (!aff) throw InternalContradiction("conjugate of X" + std::to_string(j) + " lost affinity");
        as.push_back(aff->m + F2Mat::identity(n));
        bs.push_back(aff->w);
    }

    const F2Mat psi = simultaneous_slt_basis(n, as);
    const F2Mat psi_inv = invert(psi);
    std::vector<TwistedPair> pairs;
    for (int j = 0; j < n; ++j) pairs.push_back({psi * as[j] * psi_inv, psi * bs[j]});

    const auto outcome = twisted_gauss(pairs);
    if (std::holds_alternative<ZeroWitness>(outcome)) {
        throw InternalContradiction("twisted elimination reached a zero vector");
    }

    // Track which product of X's each pair stands for.
    std::vector<F2Vec> xs;
    for (int j = 1; j <= n; ++j) xs.push_back(F2Vec::unit(n, j));
    for (const auto& step : std::get<Normalized>(outcome).log) {
        if (step.kind == EliminationStep::Kind::Swap) {
            std::swap(xs[step.i - 1], xs[step.j - 1]);
        } else {
            xs[step.i - 1] += xs[step.j - 1];
        }
    }
    const F2Mat nu = F2Mat::from_columns(xs);

    // mu = psi . X^{w0} . p . nu
    const AffineMap left{psi, psi * F2Vec::from_bits(n, w0)};
    const AffineMap right{nu, F2Vec(n)};
    const PermGate mu = left.to_perm() * p * right.to_perm();
    auto circuit = to_staircase(mu);
    if (!std::holds_alternative<ToffoliCircuit>(circuit)) {
        throw InternalContradiction("normalized gate is not in staircase form");
    }
    ReductionResult r{inverse(left), std::get<ToffoliCircuit>(std::move(circuit)), inverse(right)};
    if (recompose(r) != p) throw InternalContradiction("reduction does not recompose");
    return r;
}

PermGate recompose(const ReductionResult& r) {
    const int n = r.phi1.dim();
    return r.phi1.to_perm() * circuit_to_perm(r.mu, n) * r.phi2.to_perm();
}

}  // namespace c3perm
