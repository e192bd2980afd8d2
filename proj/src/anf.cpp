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

#include "c3perm/anf.hpp"

#include <algorithm>
#include <bit>

#include "c3perm/error.hpp"

namespace c3perm {

namespace {

void canonicalize(int n, std::vector<uint64_t>& monomials) {
    std::sort(monomials.begin(), monomials.end(),
              [n](uint64_t a, uint64_t b) { return monomial_less(n, a, b); });
    std::vector<uint64_t> out;
    out.reserve(monomials.size());
    for (uint64_t m : monomials) {
        if (!out.empty() && out.back() == m) {
            out.pop_back();
        } else {
            out.push_back(m);
        }
    }
    monomials = std::move(out);
}

void moebius(std::vector<uint8_t>& f, int n) {
    for (int b = 0; b < n; ++b) {
        const uint64_t bit = uint64_t{1} << b;
        for (uint64_t x = 0; x < f.size(); ++x) {
            if (x & bit) f[x] ^= f[x ^ bit];
        }
    }
}

}  // namespace

bool monomial_less(int /*n*/, uint64_t lhs, uint64_t rhs) {
    const int dl = std::popcount(lhs);
    const int dr = std::popcount(rhs);
    if (dl != dr) return dl < dr;
    // Same degree: compare ascending variable lists. Variable i sits at bit
    // n - i, so scanning from the top bit walks the variables in order.
    while (lhs != rhs) {
        const uint64_t tl = std::bit_floor(lhs);
        const uint64_t tr = std::bit_floor(rhs);
        if (tl != tr) return tl > tr;
        lhs ^= tl;
        rhs ^= tr;
    }
    return false;
}

std::vector<int> monomial_variables(int n, uint64_t mask) {
    std::vector<int> vars;
    for (int i = 1; i <= n; ++i) {
        if (mask & component_bit(n, i)) vars.push_back(i);
    }
    return vars;
}

AnfPoly::AnfPoly(int n) : n_(n) {
    if (n < 0 || n > kMaxDim) throw DimensionMismatch("polynomial variable count out of range");
}

AnfPoly AnfPoly::one(int n) { return monomial(n, 0); }

AnfPoly AnfPoly::variable(int n, int i) {
    if (i < 1 || i > n) throw IndexOutOfRange("variable a" + std::to_string(i) + " out of range");
    return monomial(n, component_bit(n, i));
}

AnfPoly AnfPoly::monomial(int n, uint64_t mask) {
    AnfPoly p(n);
    if (mask & ~dim_mask(n)) throw DimensionMismatch("monomial uses variables beyond a" + std::to_string(n));
    p.monomials_.push_back(mask);
    return p;
}

AnfPoly AnfPoly::from_monomials(int n, std::vector<uint64_t> monomials) {
    AnfPoly p(n);
    for (uint64_t m : monomials) {
        if (m & ~dim_mask(n)) throw DimensionMismatch("monomial uses variables beyond a" + std::to_string(n));
    }
    canonicalize(n, monomials);
    p.monomials_ = std::move(monomials);
    return p;
}

bool AnfPoly::contains(uint64_t mask) const {
    return std::binary_search(monomials_.begin(), monomials_.end(), mask,
                              [this](uint64_t a, uint64_t b) { return monomial_less(n_, a, b); });
}

int AnfPoly::degree() const {
    if (monomials_.empty()) return kZeroPolyDegree;
    return std::popcount(monomials_.back());
}

bool AnfPoly::eval(uint64_t point) const {
    bool acc = false;
    for (uint64_t m : monomials_) acc ^= (point & m) == m;
    return acc;
}

bool AnfPoly::eval(const F2Vec& point) const {
    if (point.dim() != n_) throw DimensionMismatch("evaluation point has wrong dimension");
    return eval(point.bits());
}

std::string AnfPoly::to_string() const {
    if (monomials_.empty()) return "0";
    std::string s;
    for (size_t t = 0; t < monomials_.size(); ++t) {
        if (t > 0) s += " + ";
        const auto vars = monomial_variables(n_, monomials_[t]);
        if (vars.empty()) {
            s += "1";
            continue;
        }
        for (size_t v = 0; v < vars.size(); ++v) {
            if (v > 0) s += "*";
            s += "a" + std::to_string(vars[v]);
        }
    }
    return s;
}

AnfPoly operator+(const AnfPoly& lhs, const AnfPoly& rhs) {
    if (lhs.n_ != rhs.n_) throw DimensionMismatch("sum of polynomials in different variable counts");
    std::vector<uint64_t> all = lhs.monomials_;
    all.insert(all.end(), rhs.monomials_.begin(), rhs.monomials_.end());
    return AnfPoly::from_monomials(lhs.n_, std::move(all));
}

AnfPoly operator*(const AnfPoly& lhs, const AnfPoly& rhs) {
    if (lhs.n_ != rhs.n_) throw DimensionMismatch("product of polynomials in different variable counts");
    std::vector<uint64_t> all;
    all.reserve(lhs.monomials_.size() * rhs.monomials_.size());
    for (uint64_t a : lhs.monomials_) {
        for (uint64_t b : rhs.monomials_) all.push_back(a | b);
    }
    return AnfPoly::from_monomials(lhs.n_, std::move(all));
}

AnfPoly tt_to_anf(std::span<const uint8_t> table) {
    const uint64_t len = table.size();
    if (len == 0 || !std::has_single_bit(len)) {
        throw BadLength("truth table length " + std::to_string(len) + " is not a power of two");
    }
    const int n = std::countr_zero(len);
    if (n > kMaxTableQubits) throw TooLarge("truth table too large");
    std::vector<uint8_t> f(table.begin(), table.end());
    for (auto& bit : f) bit &= 1;
    moebius(f, n);
    std::vector<uint64_t> monomials;
    for (uint64_t m = 0; m < len; ++m) {
        if (f[m]) monomials.push_back(m);
    }
    return AnfPoly::from_monomials(n, std::move(monomials));
}

std::vector<uint8_t> anf_to_tt(const AnfPoly& p) {
    const int n = p.num_vars();
    if (n > kMaxTableQubits) throw TooLarge("truth table too large");
    std::vector<uint8_t> f(uint64_t{1} << n, 0);
    for (uint64_t m : p.monomials()) f[m] ^= 1;
    moebius(f, n);
    return f;
}

AnfPoly anf_add(const AnfPoly& lhs, const AnfPoly& rhs) { return lhs + rhs; }
AnfPoly anf_mul(const AnfPoly& lhs, const AnfPoly& rhs) { return lhs * rhs; }
bool anf_eval(const AnfPoly& p, const F2Vec& a) { return p.eval(a); }
int anf_degree(const AnfPoly& p) { return p.degree(); }

AnfPoly substitute(const AnfPoly& p, std::span<const AnfPoly> values) {
    const int n = p.num_vars();
    if (static_cast<int>(values.size()) != n) throw DimensionMismatch("substitution needs one value per variable");
    const int m = n == 0 ? 0 : values[0].num_vars();
    AnfPoly out(m);
    for (uint64_t mono : p.monomials()) {
        AnfPoly term = AnfPoly::one(m);
        for (int i : monomial_variables(n, mono)) term = term * values[i - 1];
        out = out + term;
    }
    return out;
}

int PermPolyRep::max_degree() const {
    int d = kZeroPolyDegree;
    for (const auto& c : coords) d = std::max(d, c.degree());
    return d;
}

AnfPoly perm_coordinate(const PermGate& p, int i) {
    const int n = p.num_qubits();
    if (i < 1 || i > n) throw IndexOutOfRange("coordinate " + std::to_string(i) + " out of range");
    const int shift = n - i;
    std::vector<uint8_t> bits(p.size());
    for (uint64_t x = 0; x < p.size(); ++x) bits[x] = (p.table()[x] >> shift) & 1;
    return tt_to_anf(bits);
}

PermPolyRep perm_coords(const PermGate& p) {
    PermPolyRep rep;
    rep.n = p.num_qubits();
    for (int i = 1; i <= rep.n; ++i) rep.coords.push_back(perm_coordinate(p, i));
    return rep;
}

}  // namespace c3perm
