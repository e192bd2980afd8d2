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

#include "c3perm/semi_clifford.hpp"

#include <algorithm>
#include <bit>

#include "c3perm/anf.hpp"
#include "c3perm/desc_mult.hpp"
#include "c3perm/error.hpp"
#include "c3perm/hierarchy.hpp"

namespace c3perm {

namespace {

bool parity(uint64_t x) { return std::popcount(x) & 1; }

bool x_label(const PermGate& p, const PermGate& pinv, uint64_t u) {
    const uint64_t w = p(pinv(0) ^ u);
    for (uint64_t a = 1; a < p.size(); ++a) {
        if ((p(pinv(a) ^ u) ^ a) != w) return false;
    }
    return true;
}

bool z_label(const PermGate& pinv, int n, uint64_t v) {
    const bool c = parity(pinv(0) & v);
    uint64_t z = 0;
    for (int i = 1; i <= n; ++i) {
        if (parity(pinv(component_bit(n, i)) & v) != c) z |= component_bit(n, i);
    }
    for (uint64_t a = 1; a < pinv.size(); ++a) {
        if (parity(pinv(a) & v) != (c ^ parity(a & z))) return false;
    }
    return true;
}

std::vector<F2Vec> collect(int n, uint64_t count, auto&& member) {
    std::vector<F2Vec> found;
    for (uint64_t x = 1; x < count; ++x) {
        if (member(x)) found.push_back(F2Vec::from_bits(n, x));
    }
    return span_basis(n, found);
}

// Solves sum_j c_j rows[j] = target style systems: returns x with
// rows[j] . x = rhs_j for every j, assuming the rows are independent.
F2Vec solve_rows(int n, const std::vector<F2Vec>& rows, const std::vector<bool>& rhs) {
    const int m = static_cast<int>(rows.size());
    std::vector<uint64_t> r(m);
    std::vector<bool> b(rhs);
    for (int j = 0; j < m; ++j) r[j] = rows[j].bits();
    std::vector<int> pivot_bit(m, -1);
    int row = 0;
    for (int bit = n - 1; bit >= 0 && row < m; --bit) {
        int sel = -1;
        for (int j = row; j < m; ++j) {
            if (r[j] >> bit & 1) {
                sel = j;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(r[row], r[sel]);
        std::vector<bool>::swap(b[row], b[sel]);
        for (int j = 0; j < m; ++j) {
            if (j != row && (r[j] >> bit & 1)) {
                r[j] ^= r[row];
                b[j] = b[j] != b[row];
            }
        }
        pivot_bit[row] = bit;
        ++row;
    }
    if (row < m) throw InternalContradiction("dependent rows in a linear system");
    uint64_t x = 0;
    for (int j = 0; j < m; ++j) {
        if (b[j]) x |= uint64_t{1} << pivot_bit[j];
    }
    return F2Vec::from_bits(n, x);
}

void check_semi_clifford_width(int n) {
    if (n > kMaxSemiCliffordQubits) {
        throw TooLarge("semi-Clifford label search is limited to " + std::to_string(kMaxSemiCliffordQubits) +
                       " qubits");
    }
}

}  // namespace

PermGate mcx_to_perm(int n, const std::vector<McxGate>& gates) {
    if (n > kMaxTableQubits) throw TooLarge("circuit too wide for a truth table");
    for (const auto& g : gates) {
        if (g.target < 1 || g.target > n) throw IndexOutOfRange("target out of range");
        for (int c : g.controls) {
            if (c < 1 || c > n) throw IndexOutOfRange("control out of range");
            if (c == g.target) throw PreconditionViolated("target repeated as control");
        }
    }
    std::vector<uint32_t> t(uint64_t{1} << n);
    for (uint64_t x0 = 0; x0 < t.size(); ++x0) {
        uint64_t x = x0;
        for (const auto& g : gates) {
            uint64_t ctl = 0;
            for (int c : g.controls) ctl |= component_bit(n, c);
            if ((x & ctl) == ctl) x ^= component_bit(n, g.target);
        }
        t[x0] = static_cast<uint32_t>(x);
    }
    return PermGate::from_table(n, std::move(t));
}

PauliLabelGroup pauli_label_group(const PermGate& p) {
    const int n = p.num_qubits();
    check_semi_clifford_width(n);
    const PermGate pinv = invert_perm(p);
    PauliLabelGroup g;
    g.x_basis = collect(n, p.size(), [&](uint64_t u) { return x_label(p, pinv, u); });
    g.z_basis = collect(n, p.size(), [&](uint64_t v) { return z_label(pinv, n, v); });
    return g;
}

int max_isotropic_dim(const PauliLabelGroup& g) {
    // The form pairs the X part with the Z part only, so the Gram matrix is
    // [[0, P], [P^T, 0]] with rank 2 rank(P).
    std::vector<F2Vec> pairing;
    for (const auto& u : g.x_basis) {
        F2Vec row(static_cast<int>(g.z_basis.size()));
        for (size_t j = 0; j < g.z_basis.size(); ++j) row.set(static_cast<int>(j) + 1, u.dot(g.z_basis[j]));
        pairing.push_back(row);
    }
    const int r = g.z_basis.empty() ? 0 : rank(pairing);
    return g.dim() - r;
}

bool is_semi_clifford_general(const PermGate& p) {
    return max_isotropic_dim(pauli_label_group(p)) >= p.num_qubits();
}

bool is_semi_clifford_c3(const PermGate& p) {
    const ReductionResult r = reduce_to_staircase(p);
    return all_triples_zero(from_staircase(r.mu, p.num_qubits()));
}

bool is_semi_clifford_perm(const PermGate& p) {
    if (!is_c3_perm(p).has_value()) return is_semi_clifford_c3(p);
    return is_semi_clifford_general(p);
}

SemiCliffordDecomposition semi_clifford_decompose(const PermGate& p) {
    const int n = p.num_qubits();
    const PauliLabelGroup g = pauli_label_group(p);
    if (max_isotropic_dim(g) < n) throw NotSemiClifford("no maximal abelian Pauli subgroup is mapped to Paulis");

    // Lagrangian choice: the X labels orthogonal to every Z label, plus all Z labels.
    std::vector<F2Vec> meet;
    const int dx = static_cast<int>(g.x_basis.size());
    for (uint64_t c = 1; c < (uint64_t{1} << dx); ++c) {
        F2Vec u(n);
        for (int i = 0; i < dx; ++i) {
            if (c >> i & 1) u += g.x_basis[i];
        }
        if (std::none_of(g.z_basis.begin(), g.z_basis.end(), [&](const F2Vec& z) { return u.dot(z); })) {
            meet.push_back(u);
        }
    }
    const std::vector<F2Vec> lx = span_basis(n, meet);
    const int d = static_cast<int>(lx.size());
    if (d + static_cast<int>(g.z_basis.size()) != n) throw InternalContradiction("label subspaces do not fit");

    // Targets are the last d qubits; beta sends e_t to the chosen X labels.
    std::vector<F2Vec> columns = extend_to_basis(n, std::span<const F2Vec>(lx));
    std::rotate(columns.begin(), columns.begin() + d, columns.end());
    const F2Mat beta = F2Mat::from_columns(columns);
    const PermGate pb = p * AffineMap{beta, F2Vec(n)}.to_perm();
    const PermGate pbinv = invert_perm(pb);

    // Images: X_t -> X^{w_t}; Z_j -> (-1)^{eps_j} Z^{z_j}.
    std::vector<F2Vec> ws;
    for (int t = n - d + 1; t <= n; ++t) {
        ws.push_back(F2Vec::from_bits(n, pb(pbinv(0) ^ component_bit(n, t))));
    }
    std::vector<F2Vec> zs;
    std::vector<bool> eps;
    for (int j = 1; j <= n - d; ++j) {
        const AnfPoly f = perm_coordinate(pbinv, j);
        if (f.degree() > 1) throw InternalContradiction("Z label lost affinity");
        F2Vec z(n);
        bool c = false;
        for (uint64_t mono : f.monomials()) {
            if (mono == 0) {
                c = true;
            } else {
                z += F2Vec::from_bits(n, mono);
            }
        }
        zs.push_back(z);
        eps.push_back(c);
    }

    // Q = M^-1 has columns q_1..q_{n-d}, w_1..w_d with z_j . q_k = delta_jk.
    std::vector<F2Vec> qcols;
    for (int k = 0; k < n - d; ++k) {
        std::vector<bool> rhs(n - d, false);
        rhs[k] = true;
        qcols.push_back(solve_rows(n, zs, rhs));
    }
    F2Vec cprime(n);
    for (int k = 0; k < n - d; ++k) {
        if (eps[k]) cprime += qcols[k];
    }
    for (const auto& w : ws) qcols.push_back(w);
    const F2Mat q = F2Mat::from_columns(qcols);
    const F2Mat m = invert(q);
    const AffineMap alpha{m, m * cprime};

    const PermGate mu = alpha.to_perm() * pb;
    MismatchFreeCircuit circuit{n, {}};
    for (int j = 1; j <= n; ++j) {
        AnfPoly extra = perm_coordinate(mu, j) + AnfPoly::variable(n, j);
        if (j <= n - d) {
            if (!extra.is_zero()) throw InternalContradiction("control qubit is modified");
            continue;
        }
        for (uint64_t mono : extra.monomials()) {
            McxGate gate{monomial_variables(n, mono), j};
            for (int c : gate.controls) {
                if (c > n - d) throw InternalContradiction("gate controlled by a target qubit");
            }
            circuit.gates.push_back(std::move(gate));
        }
    }
    std::sort(circuit.gates.begin(), circuit.gates.end(), [](const McxGate& a, const McxGate& b) {
        return std::tie(a.target, a.controls) < std::tie(b.target, b.controls);
    });

    SemiCliffordDecomposition out{inverse(alpha), std::move(circuit), AffineMap{invert(beta), F2Vec(n)}};
    if (recompose(out) != p) throw InternalContradiction("decomposition does not recompose");
    return out;
}

PermGate recompose(const SemiCliffordDecomposition& d) {
    return d.phi1.to_perm() * mcx_to_perm(d.mu.n, d.mu.gates) * d.phi2.to_perm();
}

int mismatch_free_level(const MismatchFreeCircuit& c) {
    const auto& g = c.gates;
    int level = 1;
    for (size_t a = 0; a < g.size(); ++a) {
        level = std::max(level, static_cast<int>(g[a].controls.size()) + 1);
        for (size_t b = 0; b < g.size(); ++b) {
            if (a == b) continue;
            const auto& ctl = g[b].controls;
            if (std::find(ctl.begin(), ctl.end(), g[a].target) != ctl.end()) {
                throw HasMismatch(static_cast<int>(std::min(a, b)) + 1, static_cast<int>(std::max(a, b)) + 1);
            }
            if (a < b && g[a] == g[b]) throw PreconditionViolated("repeated gate in a mismatch-free circuit");
        }
    }
    return level;
}

std::pair<bool, bool> commute_iff_mismatch_free(int n, const McxGate& g1, const McxGate& g2) {
    const bool commute = mcx_to_perm(n, {g1, g2}) == mcx_to_perm(n, {g2, g1});
    const auto in = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
    const bool mismatch_free = !in(g2.controls, g1.target) && !in(g1.controls, g2.target);
    return {commute, mismatch_free};
}

std::vector<Pauli> extend_to_max_abelian(const std::vector<Pauli>& a, const std::vector<Pauli>& b) {
    if (a.empty()) throw PreconditionViolated("A must have generators");
    const int n = a[0].num_qubits();
    std::vector<F2Vec> labels;
    for (const auto& p : a) {
        if (p.num_qubits() != n) throw PreconditionViolated("generators on different widths");
        F2Vec l(2 * n);
        for (int i = 1; i <= n; ++i) {
            l.set(i, p.x_part()[i]);
            l.set(n + i, p.z_part()[i]);
        }
        labels.push_back(l);
    }
    if (static_cast<int>(a.size()) != n || rank(labels) != n) {
        throw PreconditionViolated("A must consist of n independent generators");
    }
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = i + 1; j < a.size(); ++j) {
            if (!a[i].commutes(a[j])) throw PreconditionViolated("A is not abelian");
        }
    }
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i].num_qubits() != n) throw PreconditionViolated("B on a different width");
        for (size_t j = i + 1; j < b.size(); ++j) {
            if (!b[i].commutes(b[j])) throw PreconditionViolated("B is not abelian");
        }
    }

    std::vector<Pauli> current = a;
    for (const auto& gen : b) {
        std::vector<Pauli> anti;
        std::vector<Pauli> keep;
        for (const auto& g : current) (g.commutes(gen) ? keep : anti).push_back(g);
        if (anti.empty()) continue;  // gen already lies in the group up to phase
        std::vector<Pauli> next = {gen};
        for (size_t k = 0; k + 1 < anti.size(); ++k) next.push_back(anti[k] * anti[k + 1]);
        next.insert(next.end(), keep.begin(), keep.end());
        current = std::move(next);
    }
    return current;
}

}  // namespace c3perm
