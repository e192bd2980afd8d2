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

// Descending multiplications: commutative bilinear products on F2^n with
// e_i e_i = 0 and e_i e_j supported on {e_k : k > max(i, j)}. Associative
// ones correspond one-to-one with staircase permutations in C3.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "c3perm/circuit.hpp"
#include "c3perm/f2.hpp"
#include "c3perm/perm_gate.hpp"

namespace c3perm {

class DescMult {
   public:
    DescMult() = default;
    /// The zero multiplication on F2^n.
    explicit DescMult(int n);

    int dim() const { return n_; }

    /// e_i e_j as a packed word; symmetric, zero on the diagonal.
    uint64_t get_bits(int i, int j) const { return table_[index(i, j)]; }
    F2Vec get(int i, int j) const { return F2Vec::from_bits(n_, get_bits(i, j)); }
    /// Sets e_i e_j (and e_j e_i). Throws PreconditionViolated when i == j or
    /// the value is not supported strictly above max(i, j).
    void set(int i, int j, const F2Vec& value);
    void set_bits(int i, int j, uint64_t value);

    bool is_zero() const;

    friend bool operator==(const DescMult&, const DescMult&) = default;

   private:
    size_t index(int i, int j) const { return static_cast<size_t>(i - 1) * n_ + (j - 1); }

    int n_ = 0;
    std::vector<uint64_t> table_;
};

/// e_i e_j has component k iff TOF(i, j, k) is in the circuit.
/// Throws NotStaircaseError unless is_staircase(c).
DescMult from_staircase(const ToffoliCircuit& c, int n);
/// Inverse of from_staircase, gates sorted by target then controls.
ToffoliCircuit to_staircase_circuit(const DescMult& m);

/// Bilinear extension to arbitrary vectors.
uint64_t product(const DescMult& m, uint64_t v, uint64_t w);
F2Vec product(const DescMult& m, const F2Vec& v, const F2Vec& w);
/// Left-fold product of e_i over i in S, in increasing index order. S must be
/// nonempty: the structure has no unit.
uint64_t product_of_set(const DescMult& m, uint64_t set);
F2Vec product_of_set(const DescMult& m, const F2Vec& set);

struct AssociativityWitness {
    int i;
    int j;
    int k;
    F2Vec lhs;  // one regrouping of the triple product
    F2Vec rhs;  // (e_i e_j) e_k
};

/// First triple i <= j <= k where e_i(e_j e_k) or e_j(e_i e_k) differs from
/// (e_i e_j) e_k.
std::optional<AssociativityWitness> find_associativity_violation(const DescMult& m);
bool is_associative(const DescMult& m);

/// The staircase C3 permutation with pi(S) = sum over nonempty T in S of the
/// product of e_i, i in T. Throws NotAssociative.
PermGate mult_to_perm(const DescMult& m);
/// e_i e_j = pi(e_i + e_j) + e_i + e_j. Throws NotStaircaseC3 unless pi is a
/// staircase permutation in C3.
DescMult perm_to_mult(const PermGate& p);

/// True iff every product e_i e_j e_k vanishes. Throws NotAssociative.
bool all_triples_zero(const DescMult& m);

/// Largest |S| with a nonzero product of the e_i, i in S. At least 1.
int max_nonzero_product_size(const DescMult& m);

/// Text format: an optional "n N" line, then one "e i j = k1 k2 ..." line per
/// pair (empty right side for a zero product). '#' starts a comment. Without
/// the header the dimension is the largest index mentioned.
DescMult parse_mult(std::string_view text, int n = 0);
/// Writes the header and the nonzero products only.
std::string format_mult(const DescMult& m);

}  // namespace c3perm
