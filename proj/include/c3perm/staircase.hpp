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

#pragma once

#include <optional>
#include <string>
#include <variant>

#include "c3perm/circuit.hpp"
#include "c3perm/f2.hpp"
#include "c3perm/perm_gate.hpp"

namespace c3perm {

/// True iff the gates are pairwise distinct, each has c1 < c2 < target, and
/// targets are nondecreasing in application order.
bool is_staircase(const ToffoliCircuit& c);

struct NotStaircase {
    int coordinate;    // coordinate of the inverse that failed
    std::string term;  // offending monomial, rendered like "a1*a3"
};

using StaircaseOutcome = std::variant<ToffoliCircuit, NotStaircase>;

/// Reads the staircase circuit off the coordinates of the inverse: coordinate
/// k must be a_k plus quadratic terms a_i*a_j with i < j < k. The result is
/// sorted by target, then controls.
StaircaseOutcome to_staircase(const PermGate& p);

/// v -> M v + w.
struct AffineMap {
    F2Mat m;
    F2Vec w;

    static AffineMap identity(int n);

    int dim() const { return m.dim(); }
    uint64_t apply(uint64_t v) const;
    F2Vec apply(const F2Vec& v) const;
    PermGate to_perm() const;

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// (outer . inner)(v) = outer(inner(v)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner);
/// Throws NotInvertible when M is singular.
AffineMap inverse(const AffineMap& a);

/// The affine map realized by p, or nullopt when some coordinate has degree
/// two or more. This is exactly the Clifford-permutation test.
std::optional<AffineMap> as_affine(const PermGate& p);

/// p(0) = 0, p(e_i) = e_i, and for every v of weight at least two, v and p(v)
/// have their first two ones in the same positions. Equivalent to staircase
/// form only for gates in C3.
bool staircase_conditions(const PermGate& p);

}  // namespace c3perm
