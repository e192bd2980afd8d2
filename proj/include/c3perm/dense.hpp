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

// Small dense unitaries with exact entries in Z[w][1/2], w = exp(i pi / 4),
// and membership oracles for the first levels of the hierarchy.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "c3perm/circuit.hpp"
#include "c3perm/pauli.hpp"
#include "c3perm/perm_gate.hpp"

namespace c3perm {

inline constexpr int kMaxDenseQubits = 8;
inline constexpr int kMaxCliffordQubits = 8;
inline constexpr int kMaxC3Qubits = 7;
inline constexpr int kMaxC4Qubits = 4;

/// (c0 + c1 w + c2 w^2 + c3 w^3) / 2^k, kept with k minimal.
class Cyclotomic {
   public:
    Cyclotomic() = default;
    Cyclotomic(int64_t integer) : c_{integer, 0, 0, 0} {}
    Cyclotomic(std::array<int64_t, 4> c, int k);

    static Cyclotomic omega_power(int j);
    /// 1 / sqrt(2) = (w - w^3) / 2.
    static Cyclotomic inv_sqrt2();

    const std::array<int64_t, 4>& coeffs() const { return c_; }
    int denominator_exponent() const { return k_; }
    bool is_zero() const { return c_ == std::array<int64_t, 4>{0, 0, 0, 0}; }

    Cyclotomic conj() const;
    std::string to_string() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

   private:
    void normalize();

    std::array<int64_t, 4> c_{0, 0, 0, 0};
    int k_ = 0;
};

class DenseUnitary {
   public:
    DenseUnitary() = default;

    static DenseUnitary identity(int n);
    static DenseUnitary from_perm(const PermGate& p);
    static DenseUnitary from_pauli(const Pauli& p);
    /// Matrix product of the gates in application order. Throws TooLarge.
    static DenseUnitary build(const Circuit& c);
    static DenseUnitary build(std::string_view text, int n = 0);

    int num_qubits() const { return n_; }
    uint64_t size() const { return uint64_t{1} << n_; }
    const Cyclotomic& at(uint64_t row, uint64_t col) const { return e_[row * size() + col]; }
    Cyclotomic& at(uint64_t row, uint64_t col) { return e_[row * size() + col]; }

    DenseUnitary adjoint() const;
    bool is_monomial() const;
    /// Canonical byte serialization of the entries.
    std::string fingerprint() const;

    friend DenseUnitary operator*(const DenseUnitary& a, const DenseUnitary& b);
    friend bool operator==(const DenseUnitary&, const DenseUnitary&) = default;

   private:
    explicit DenseUnitary(int n);

    int n_ = 0;
    std::vector<Cyclotomic> e_;
};

/// u p u^dagger.
DenseUnitary conjugate(const DenseUnitary& u, const DenseUnitary& p);

/// A unit multiple of a tensor product of I, X, Y, Z.
bool is_pauli(const DenseUnitary& u);
/// Conjugates of X_i and Z_i are Paulis. n <= 8.
bool is_clifford(const DenseUnitary& u);
/// Conjugates of X_i and Z_i are Cliffords. n <= 7.
bool is_c3_dense(const DenseUnitary& u);
/// Conjugates of all 4^n Paulis are in C3. n <= 4.
bool is_c4_dense(const DenseUnitary& u);

struct GottesmanMochonCertificate {
    bool g_in_c3 = false;
    bool conjugate_not_clifford = false;
    bool fgf_equals_u3 = false;

    bool all() const { return g_in_c3 && conjugate_not_clifford && fgf_equals_u3; }
};

/// Application-order circuits for the seven-qubit G and the Clifford F.
std::string_view gottesman_mochon_g_circuit();
std::string_view gottesman_mochon_f_circuit();

GottesmanMochonCertificate verify_gottesman_mochon();

}  // namespace c3perm
