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

// Bit-packed vectors and square matrices over F2, plus the two structural
// algorithms used to normalize C3 permutations: simultaneous strict lower
// triangularization of commuting square-zero matrices, and the twisted
// Gaussian elimination on (matrix, vector) pairs.
//
// Components are 1-based. Component i of an n-dimensional vector is stored at
// bit (n - i), so that the packed word of a vector is exactly the basis-state
// index |a_1 ... a_n> with qubit 1 as the most significant bit.

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace c3perm {

inline constexpr int kMaxDim = 64;
inline constexpr int kInfinity = std::numeric_limits<int>::max();

inline constexpr uint64_t dim_mask(int n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

/// Packed-word bit of component i (1-based) in dimension n.
inline constexpr uint64_t component_bit(int n, int i) { return uint64_t{1} << (n - i); }

class F2Vec {
   public:
    F2Vec() = default;
    explicit F2Vec(int n);

    static F2Vec from_bits(int n, uint64_t bits);
    static F2Vec unit(int n, int i);
    /// Parses "0110"-style strings, component 1 first.
    static F2Vec parse(const std::string& text);

    int dim() const { return n_; }
    uint64_t bits() const { return bits_; }

    bool operator[](int i) const { return (bits_ >> (n_ - i)) & 1; }
    void set(int i, bool value = true);
    void flip(int i) { bits_ ^= component_bit(n_, i); }

    bool is_zero() const { return bits_ == 0; }
    int weight() const;
    bool dot(const F2Vec& other) const;

    F2Vec& operator+=(const F2Vec& other);
    friend F2Vec operator+(F2Vec lhs, const F2Vec& rhs) { return lhs += rhs; }
    friend bool operator==(const F2Vec&, const F2Vec&) = default;

    std::string to_string() const;

   private:
    int n_ = 0;
    uint64_t bits_ = 0;
};

/// Smallest i with v[i] set, or kInfinity for the zero vector.
int first_nonzero_index(const F2Vec& v);

class F2Mat {
   public:
    F2Mat() = default;
    explicit F2Mat(int n);

    static F2Mat identity(int n);
    static F2Mat from_rows(std::span<const F2Vec> rows);
    static F2Mat from_columns(std::span<const F2Vec> columns);
    /// Parses rows separated by '/' or whitespace, e.g. "11/01".
    static F2Mat parse(const std::string& text);

    int dim() const { return n_; }

    bool get(int i, int j) const { return (rows_[i - 1] >> (n_ - j)) & 1; }
    void set(int i, int j, bool value = true);

    F2Vec row(int i) const { return F2Vec::from_bits(n_, rows_[i - 1]); }
    F2Vec column(int j) const;
    uint64_t row_bits(int i) const { return rows_[i - 1]; }
    void set_row(int i, const F2Vec& row);

    bool is_zero() const;
    bool is_strictly_lower_triangular() const;
    F2Mat transpose() const;

    F2Mat& operator+=(const F2Mat& other);
    friend F2Mat operator+(F2Mat lhs, const F2Mat& rhs) { return lhs += rhs; }
    friend bool operator==(const F2Mat&, const F2Mat&) = default;

    std::string to_string() const;

   private:
    int n_ = 0;
    std::vector<uint64_t> rows_;
};

F2Mat mat_mul(const F2Mat& a, const F2Mat& b);
F2Vec mat_vec(const F2Mat& a, const F2Vec& v);
/// Throws NotInvertible when the rank is below n.
F2Mat invert(const F2Mat& m);
int rank(std::span<const F2Vec> vectors);
int rank(const F2Mat& m);

inline F2Mat operator*(const F2Mat& a, const F2Mat& b) { return mat_mul(a, b); }
inline F2Vec operator*(const F2Mat& a, const F2Vec& v) { return mat_vec(a, v); }

/// Extends linearly independent vectors to a basis of F2^n by appending
/// standard basis vectors in increasing index order.
std::vector<F2Vec> extend_to_basis(int n, std::span<const F2Vec> independent);

/// Basis (reduced echelon form) of the span of the given vectors.
std::vector<F2Vec> span_basis(int n, std::span<const F2Vec> vectors);

/// Basis of {x : x . b = 0 for every b in basis}.
std::vector<F2Vec> orthogonal_complement(int n, std::span<const F2Vec> basis);

/// Returns an invertible M with M * A * M^-1 strictly lower triangular for
/// every A in mats. Requires A^2 = 0 and pairwise commutation.
F2Mat simultaneous_slt_basis(int n, std::span<const F2Mat> mats);

struct EliminationStep {
    enum class Kind { Swap, Compose };
    Kind kind;
    int i;
    int j;

    friend bool operator==(const EliminationStep&, const EliminationStep&) = default;
};

using EliminationLog = std::vector<EliminationStep>;

struct TwistedPair {
    F2Mat a;
    F2Vec b;

    friend bool operator==(const TwistedPair&, const TwistedPair&) = default;
};

struct Normalized {
    EliminationLog log;
    std::vector<TwistedPair> final_state;
};

struct ZeroWitness {
    int index;
    EliminationLog log;
    std::vector<TwistedPair> final_state;
};

using TwistedGaussOutcome = std::variant<Normalized, ZeroWitness>;

/// Swap exchanges pairs i and j. Compose(i, j) replaces (A_i, b_i) by
/// (A_i + A_j + A_i A_j, b_i + b_j + A_i b_j).
void apply_step(std::vector<TwistedPair>& state, const EliminationStep& step);
std::vector<TwistedPair> replay(std::vector<TwistedPair> state, const EliminationLog& log);

/// Drives b_i to e_i with swaps and composes, or stops at the first b_i = 0.
TwistedGaussOutcome twisted_gauss(std::vector<TwistedPair> pairs);

}  // namespace c3perm
