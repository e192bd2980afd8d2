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

// Algebraic normal form of boolean functions and the polynomial
// representation of permutation gates (one ANF per output bit).

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "c3perm/f2.hpp"
#include "c3perm/perm_gate.hpp"

namespace c3perm {

/// Degree reported for the zero polynomial. Never equal to a real degree.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

/// Multilinear polynomial over F2 in variables a_1..a_n. A monomial is a
/// bitmask using the F2Vec packing (variable i at bit n - i); the empty mask
/// is the constant 1. Monomials are kept unique and in display order: by
/// degree, then lexicographically on the sorted variable indices.
class AnfPoly {
   public:
    AnfPoly() = default;
    explicit AnfPoly(int n);

    static AnfPoly zero(int n) { return AnfPoly(n); }
    static AnfPoly one(int n);
    static AnfPoly variable(int n, int i);
    /// Product of the variables in `mask`.
    static AnfPoly monomial(int n, uint64_t mask);
    /// Sum of the given monomials; repeated monomials cancel in pairs.
    static AnfPoly from_monomials(int n, std::vector<uint64_t> monomials);

    int num_vars() const { return n_; }
    const std::vector<uint64_t>& monomials() const { return monomials_; }
    bool is_zero() const { return monomials_.empty(); }
    bool contains(uint64_t mask) const;

    /// kZeroPolyDegree for the zero polynomial.
    int degree() const;
    bool eval(uint64_t point) const;
    bool eval(const F2Vec& point) const;

    /// Renders as e.g. "a3 + a1*a2"; "0" for the zero polynomial.
    std::string to_string() const;

    friend AnfPoly operator+(const AnfPoly& lhs, const AnfPoly& rhs);
    friend AnfPoly operator*(const AnfPoly& lhs, const AnfPoly& rhs);
    friend bool operator==(const AnfPoly&, const AnfPoly&) = default;

   private:
    int n_ = 0;
    std::vector<uint64_t> monomials_;
};

/// Display-order comparison of monomials over n variables.
bool monomial_less(int n, uint64_t lhs, uint64_t rhs);
/// Sorted 1-based variable indices of a monomial.
std::vector<int> monomial_variables(int n, uint64_t mask);

/// Moebius transform of a truth table of length 2^n (entries 0/1).
/// Throws BadLength if the length is not a power of two.
AnfPoly tt_to_anf(std::span<const uint8_t> table);
std::vector<uint8_t> anf_to_tt(const AnfPoly& p);

AnfPoly anf_add(const AnfPoly& lhs, const AnfPoly& rhs);
AnfPoly anf_mul(const AnfPoly& lhs, const AnfPoly& rhs);
bool anf_eval(const AnfPoly& p, const F2Vec& a);
int anf_degree(const AnfPoly& p);

/// p(values[0], ..., values[n-1]) with multilinear reduction.
AnfPoly substitute(const AnfPoly& p, std::span<const AnfPoly> values);

struct PermPolyRep {
    int n = 0;
    std::vector<AnfPoly> coords;  // coords[i - 1] is the i-th coordinate

    int max_degree() const;
    friend bool operator==(const PermPolyRep&, const PermPolyRep&) = default;
};

/// Coordinate i is the ANF of output bit i of the permutation.
PermPolyRep perm_coords(const PermGate& p);
/// ANF of a single output bit.
AnfPoly perm_coordinate(const PermGate& p, int i);

}  // namespace c3perm
