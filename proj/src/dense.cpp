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

#include "c3perm/dense.hpp"

#include <bit>
#include <cstring>
#include <unordered_map>

#include "c3perm/error.hpp"
#include "c3perm/family.hpp"

namespace c3perm {

Cyclotomic::Cyclotomic(std::array<int64_t, 4> c, int k) : c_(c), k_(k) {
    if (k < 0) throw PreconditionViolated("negative denominator exponent");
    normalize();
}

void Cyclotomic::normalize() {
    if (is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ > 0 && ((c_[0] | c_[1] | c_[2] | c_[3]) & 1) == 0) {
        for (auto& x : c_) x /= 2;
        --k_;
    }
}

Cyclotomic Cyclotomic::omega_power(int j) {
    j = ((j % 8) + 8) % 8;
    std::array<int64_t, 4> c{0, 0, 0, 0};
    c[j % 4] = j < 4 ? 1 : -1;
    return Cyclotomic(c, 0);
}

Cyclotomic Cyclotomic::inv_sqrt2() { return Cyclotomic({0, 1, 0, -1}, 1); }

Cyclotomic Cyclotomic::conj() const {
    // conj(w^j) = w^-j = -w^(4-j).
    return Cyclotomic({c_[0], -c_[3], -c_[2], -c_[1]}, k_);
}

std::string Cyclotomic::to_string() const {
    std::string s = "(" + std::to_string(c_[0]);
    for (int i = 1; i < 4; ++i) s += ", " + std::to_string(c_[i]);
    return s + ")/2^" + std::to_string(k_);
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    const int k = std::max(a.k_, b.k_);
    std::array<int64_t, 4> c{};
    for (int i = 0; i < 4; ++i) c[i] = (a.c_[i] << (k - a.k_)) + (b.c_[i] << (k - b.k_));
    return Cyclotomic(c, k);
}

Cyclotomic operator-(const Cyclotomic& a) {
    return Cyclotomic({-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]}, a.k_);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    std::array<int64_t, 4> c{};
    for (int i = 0; i < 4; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            const int64_t v = a.c_[i] * b.c_[j];
            if (i + j < 4) {
                c[i + j] += v;
            } else {
                c[i + j - 4] -= v;
            }
        }
    }
    return Cyclotomic(c, a.k_ + b.k_);
}

namespace {

void check_dense(int n, int cap, const char* what) {
    if (n < 0 || n > cap) {
        throw TooLarge(std::string(what) + " is limited to " + std::to_string(cap) + " qubits, got " +
                       std::to_string(n));
    }
}

// Applies one gate to a state vector in place.
void apply_gate(std::vector<Cyclotomic>& v, int n, const Gate& g) {
    const auto bit = [n](int q) { return component_bit(n, q); };
    const uint64_t size = v.size();
    switch (g.kind) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::TOF: {
            uint64_t ctl = 0;
            for (size_t a = 0; a + 1 < g.qubits.size(); ++a) ctl |= bit(g.qubits[a]);
            const uint64_t t = bit(g.qubits.back());
            for (uint64_t x = 0; x < size; ++x) {
                if ((x & ctl) == ctl && !(x & t)) std::swap(v[x], v[x | t]);
            }
            break;
        }
        case GateKind::CSWAP: {
            const uint64_t c = bit(g.qubits[0]), a = bit(g.qubits[1]), b = bit(g.qubits[2]);
            for (uint64_t x = 0; x < size; ++x) {
                if ((x & c) && (x & a) && !(x & b)) std::swap(v[x], v[x ^ a ^ b]);
            }
            break;
        }
        case GateKind::Z:
        case GateKind::CZ:
        case GateKind::CCZ: {
            uint64_t m = 0;
            for (int q : g.qubits) m |= bit(q);
            for (uint64_t x = 0; x < size; ++x) {
                if ((x & m) == m) v[x] = -v[x];
            }
            break;
        }
        case GateKind::S:
        case GateKind::T: {
            const Cyclotomic phase = Cyclotomic::omega_power(g.kind == GateKind::S ? 2 : 1);
            const uint64_t t = bit(g.qubits[0]);
            for (uint64_t x = 0; x < size; ++x) {
                if (x & t) v[x] = v[x] * phase;
            }
            break;
        }
        case GateKind::H: {
            const Cyclotomic r = Cyclotomic::inv_sqrt2();
            const uint64_t t = bit(g.qubits[0]);
            for (uint64_t x = 0; x < size; ++x) {
                if (x & t) continue;
                const Cyclotomic a = v[x], b = v[x | t];
                v[x] = r * (a + b);
                v[x | t] = r * (a - b);
            }
            break;
        }
    }
}

}  // namespace

DenseUnitary::DenseUnitary(int n) : n_(n), e_(size() * size()) { check_dense(n, kMaxDenseQubits, "dense matrices"); }

DenseUnitary DenseUnitary::identity(int n) {
    DenseUnitary u(n);
    for (uint64_t i = 0; i < u.size(); ++i) u.at(i, i) = 1;
    return u;
}

DenseUnitary DenseUnitary::from_perm(const PermGate& p) {
    DenseUnitary u(p.num_qubits());
    for (uint64_t x = 0; x < u.size(); ++x) u.at(p(x), x) = 1;
    return u;
}

DenseUnitary DenseUnitary::from_pauli(const Pauli& p) {
    DenseUnitary u(p.num_qubits());
    const Cyclotomic phase = Cyclotomic::omega_power(2 * p.phase());
    const uint64_t xu = p.x_part().bits(), zv = p.z_part().bits();
    for (uint64_t x = 0; x < u.size(); ++x) {
        u.at(x ^ xu, x) = (std::popcount(x & zv) & 1) ? -phase : phase;
    }
    return u;
}

DenseUnitary DenseUnitary::build(const Circuit& c) {
    check_dense(c.n, kMaxDenseQubits, "dense matrices");
    for (const auto& g : c.gates) {
        for (int q : g.qubits) {
            if (q < 1 || q > c.n) throw IndexOutOfRange("qubit " + std::to_string(q) + " out of range");
        }
    }
    DenseUnitary u(c.n);
    std::vector<Cyclotomic> col(u.size());
    for (uint64_t j = 0; j < u.size(); ++j) {
        std::fill(col.begin(), col.end(), Cyclotomic());
        col[j] = 1;
        for (const auto& g : c.gates) apply_gate(col, c.n, g);
        for (uint64_t i = 0; i < u.size(); ++i) u.at(i, j) = col[i];
    }
    return u;
}

DenseUnitary DenseUnitary::build(std::string_view text, int n) { return build(parse_circuit(text, n)); }

DenseUnitary DenseUnitary::adjoint() const {
    DenseUnitary out(n_);
    for (uint64_t i = 0; i < size(); ++i) {
        for (uint64_t j = 0; j < size(); ++j) out.at(j, i) = at(i, j).conj();
    }
    return out;
}

bool DenseUnitary::is_monomial() const {
    for (uint64_t j = 0; j < size(); ++j) {
        int nonzero = 0;
        for (uint64_t i = 0; i < size(); ++i) nonzero += !at(i, j).is_zero();
        if (nonzero != 1) return false;
    }
    return true;
}

std::string DenseUnitary::fingerprint() const {
    std::string out;
    out.reserve(e_.size() * 36 + 4);
    out.push_back(static_cast<char>(n_));
    for (const auto& c : e_) {
        char buf[36];
        std::memcpy(buf, c.coeffs().data(), 32);
        const int32_t k = c.denominator_exponent();
        std::memcpy(buf + 32, &k, 4);
        out.append(buf, 36);
    }
    return out;
}

DenseUnitary operator*(const DenseUnitary& a, const DenseUnitary& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("product of matrices on different widths");
    DenseUnitary out(a.n_);
    const uint64_t size = a.size();
    // Row-wise with zero skipping: cheap for the sparse matrices used here.
    std::vector<std::vector<std::pair<uint64_t, Cyclotomic>>> brows(size);
    for (uint64_t k = 0; k < size; ++k) {
        for (uint64_t j = 0; j < size; ++j) {
            if (!b.at(k, j).is_zero()) brows[k].push_back({j, b.at(k, j)});
        }
    }
    for (uint64_t i = 0; i < size; ++i) {
        for (uint64_t k = 0; k < size; ++k) {
            const Cyclotomic& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (const auto& [j, y] : brows[k]) out.at(i, j) = out.at(i, j) + x * y;
        }
    }
    return out;
}

DenseUnitary conjugate(const DenseUnitary& u, const DenseUnitary& p) { return u * p * u.adjoint(); }

bool is_pauli(const DenseUnitary& u) {
    const uint64_t size = u.size();
    // Column 0 fixes the X part and the overall phase.
    uint64_t xu = size;
    for (uint64_t i = 0; i < size; ++i) {
        if (!u.at(i, 0).is_zero()) {
            if (xu != size) return false;
            xu = i;
        }
    }
    if (xu == size) return false;
    const Cyclotomic c = u.at(xu, 0);
    if (c * c.conj() != Cyclotomic(1)) return false;
    const Cyclotomic minus_c = -c;
    const int n = u.num_qubits();
    uint64_t zv = 0;
    for (int q = 1; q <= n; ++q) {
        const uint64_t e = component_bit(n, q);
        if (u.at(e ^ xu, e) == minus_c) zv |= e;
    }
    for (uint64_t x = 0; x < size; ++x) {
        const Cyclotomic& expected = (std::popcount(x & zv) & 1) ? minus_c : c;
        for (uint64_t i = 0; i < size; ++i) {
            const Cyclotomic& entry = u.at(i, x);
            if (i == (x ^ xu)) {
                if (entry != expected) return false;
            } else if (!entry.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

namespace {

template <class Pred>
bool generators_satisfy(const DenseUnitary& u, Pred&& pred) {
    const int n = u.num_qubits();
    const DenseUnitary udag = u.adjoint();
    for (int q = 1; q <= n; ++q) {
        for (const Pauli& g : {Pauli::x(n, q), Pauli::z(n, q)}) {
            if (!pred(u * DenseUnitary::from_pauli(g) * udag)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_clifford(const DenseUnitary& u) {
    check_dense(u.num_qubits(), kMaxCliffordQubits, "Clifford test");
    return generators_satisfy(u, [](const DenseUnitary& v) { return is_pauli(v); });
}

bool is_c3_dense(const DenseUnitary& u) {
    check_dense(u.num_qubits(), kMaxC3Qubits, "C3 test");
    return generators_satisfy(u, [](const DenseUnitary& v) { return is_clifford(v); });
}

bool is_c4_dense(const DenseUnitary& u) {
    const int n = u.num_qubits();
    check_dense(n, kMaxC4Qubits, "C4 test");
    std::unordered_map<std::string, bool> memo;
    const DenseUnitary udag = u.adjoint();
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
        for (uint64_t z = 0; z < (uint64_t{1} << n); ++z) {
            const Pauli p(0, F2Vec::from_bits(n, x), F2Vec::from_bits(n, z));
            const DenseUnitary v = u * DenseUnitary::from_pauli(p) * udag;
            std::string key = v.fingerprint();
            auto it = memo.find(key);
            if (it == memo.end()) it = memo.emplace(std::move(key), is_c3_dense(v)).first;
            if (!it->second) return false;
        }
    }
    return true;
}

std::string_view gottesman_mochon_g_circuit() {
    return "CCZ 1 2 3\n"
           "CCZ 1 4 5\n"
           "CCZ 2 4 6\n"
           "CCZ 3 5 6\n"
           "CSWAP 7 4 3\n"
           "CSWAP 7 2 5\n"
           "CSWAP 7 1 6\n";
}

std::string_view gottesman_mochon_f_circuit() {
    return "H 7\n"
           "CNOT 3 4\n"
           "CNOT 5 2\n"
           "CNOT 6 1\n"
           "H 6\n"
           "H 5\n"
           "H 3\n";
}

GottesmanMochonCertificate verify_gottesman_mochon() {
    GottesmanMochonCertificate cert;
    const DenseUnitary g = DenseUnitary::build(gottesman_mochon_g_circuit(), 7);
    const DenseUnitary f = DenseUnitary::build(gottesman_mochon_f_circuit(), 7);
    cert.g_in_c3 = is_c3_dense(g);
    cert.conjugate_not_clifford = !is_clifford(g.adjoint() * DenseUnitary::from_pauli(Pauli::x(7, 7)) * g);
    const DenseUnitary u3 = DenseUnitary::from_perm(circuit_to_perm(uk_circuit(3), 7));
    cert.fgf_equals_u3 = f * g * f.adjoint() == u3;
    return cert;
}

}  // namespace c3perm
