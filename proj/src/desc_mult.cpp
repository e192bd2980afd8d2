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

#include "c3perm/desc_mult.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "c3perm/error.hpp"
#include "c3perm/staircase.hpp"

namespace c3perm {

namespace {

// Packed bit of component i is at n - i, so the index of a set bit b is n - b.
inline int index_of_bit(int n, uint64_t bit) { return n - std::countr_zero(bit); }

// e_i times an arbitrary vector.
inline uint64_t basis_times(const DescMult& m, int i, uint64_t v) {
    const int n = m.dim();
    uint64_t out = 0;
    while (v) {
        const uint64_t low = v & (~v + 1);
        out ^= m.get_bits(i, index_of_bit(n, low));
        v ^= low;
    }
    return out;
}

}  // namespace

DescMult::DescMult(int n) : n_(n), table_(static_cast<size_t>(n) * n, 0) {
    if (n < 1 || n > kMaxDim) throw DimensionMismatch("multiplication dimension out of range");
}

void DescMult::set_bits(int i, int j, uint64_t value) {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw IndexOutOfRange("product index out of range");
    if (i == j) {
        if (value != 0) throw PreconditionViolated("e_i e_i must be zero");
        return;
    }
    const int top = std::max(i, j);
    // Allowed support: components top + 1 .. n, i.e. bits below n - top.
    if (value & ~dim_mask(n_ - top)) {
        throw PreconditionViolated("e" + std::to_string(i) + " e" + std::to_string(j) +
                                   " is not supported above index " + std::to_string(top));
    }
    table_[index(i, j)] = value;
    table_[index(j, i)] = value;
}

void DescMult::set(int i, int j, const F2Vec& value) {
    if (value.dim() != n_) throw DimensionMismatch("product value has wrong dimension");
    set_bits(i, j, value.bits());
}

bool DescMult::is_zero() const {
    return std::all_of(table_.begin(), table_.end(), [](uint64_t v) { return v == 0; });
}

DescMult from_staircase(const ToffoliCircuit& c, int n) {
    if (!is_staircase(c)) throw NotStaircaseError("circuit is not in staircase form");
    DescMult m(n);
    for (const auto& g : c) {
        if (g.target > n) throw IndexOutOfRange("gate target beyond dimension");
        m.set_bits(g.c1, g.c2, m.get_bits(g.c1, g.c2) | component_bit(n, g.target));
    }
    return m;
}

ToffoliCircuit to_staircase_circuit(const DescMult& m) {
    const int n = m.dim();
    ToffoliCircuit c;
    for (int k = 1; k <= n; ++k) {
        for (int i = 1; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                if (m.get_bits(i, j) & component_bit(n, k)) c.push_back({i, j, k});
            }
        }
    }
    return c;
}

uint64_t product(const DescMult& m, uint64_t v, uint64_t w) {
    const int n = m.dim();
    uint64_t out = 0;
    while (v) {
        const uint64_t low = v & (~v + 1);
        out ^= basis_times(m, index_of_bit(n, low), w);
        v ^= low;
    }
    return out;
}

F2Vec product(const DescMult& m, const F2Vec& v, const F2Vec& w) {
    if (v.dim() != m.dim() || w.dim() != m.dim()) throw DimensionMismatch("product operands have wrong dimension");
    return F2Vec::from_bits(m.dim(), product(m, v.bits(), w.bits()));
}

uint64_t product_of_set(const DescMult& m, uint64_t set) {
    const int n = m.dim();
    if (set == 0) throw PreconditionViolated("product of an empty set is undefined");
    if (set & ~dim_mask(n)) throw DimensionMismatch("set exceeds dimension");
    // Increasing index order means decreasing bit position.
    uint64_t top = std::bit_floor(set);
    uint64_t acc = top;
    set ^= top;
    while (set) {
        top = std::bit_floor(set);
        acc = basis_times(m, index_of_bit(n, top), acc);
        set ^= top;
    }
    return acc;
}

F2Vec product_of_set(const DescMult& m, const F2Vec& set) {
    if (set.dim() != m.dim()) throw DimensionMismatch("set has wrong dimension");
    return F2Vec::from_bits(m.dim(), product_of_set(m, set.bits()));
}

std::optional<AssociativityWitness> find_associativity_violation(const DescMult& m) {
    const int n = m.dim();
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const uint64_t ij = m.get_bits(i, j);
            for (int k = j; k <= n; ++k) {
                const uint64_t rhs = basis_times(m, k, ij);
                const uint64_t lhs1 = basis_times(m, i, m.get_bits(j, k));
                if (lhs1 != rhs) {
                    return AssociativityWitness{i, j, k, F2Vec::from_bits(n, lhs1), F2Vec::from_bits(n, rhs)};
                }
                const uint64_t lhs2 = basis_times(m, j, m.get_bits(i, k));
                if (lhs2 != rhs) {
                    return AssociativityWitness{i, j, k, F2Vec::from_bits(n, lhs2), F2Vec::from_bits(n, rhs)};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_associative(const DescMult& m) { return !find_associativity_violation(m).has_value(); }

PermGate mult_to_perm(const DescMult& m) {
    const int n = m.dim();
    if (n > kMaxTableQubits) throw TooLarge("multiplication too wide for a truth table");
    if (auto w = find_associativity_violation(m)) {
        throw NotAssociative("triple (" + std::to_string(w->i) + "," + std::to_string(w->j) + "," +
                             std::to_string(w->k) + ") does not associate");
    }
    std::vector<uint32_t> table(uint64_t{1} << n, 0);
    for (uint64_t s = 1; s < table.size(); ++s) {
        // pi(S + e_i) = pi(S) + e_i + e_i pi(S), peeling the lowest set bit.
        const uint64_t low = s & (~s + 1);
        const uint64_t rest = table[s ^ low];
        table[s] = static_cast<uint32_t>(rest ^ low ^ basis_times(m, index_of_bit(n, low), rest));
    }
    return PermGate::from_table(n, std::move(table));
}

DescMult perm_to_mult(const PermGate& p) {
    const int n = p.num_qubits();
    if (!staircase_conditions(p)) throw NotStaircaseC3("permutation violates the staircase conditions");
    DescMult m(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const uint64_t ei = component_bit(n, i);
            const uint64_t ej = component_bit(n, j);
            m.set_bits(i, j, p(ei | ej) ^ ei ^ ej);
        }
    }
    if (!is_associative(m)) throw NotStaircaseC3("pairwise products are not associative");
    if (mult_to_perm(m) != p) throw NotStaircaseC3("permutation is not determined by its pairwise products");
    return m;
}

bool all_triples_zero(const DescMult& m) {
    if (!is_associative(m)) throw NotAssociative("triple products are ill-defined");
    const int n = m.dim();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const uint64_t ij = m.get_bits(i, j);
            if (ij == 0) continue;
            for (int k = j + 1; k <= n; ++k) {
                if (basis_times(m, k, ij) != 0) return false;
            }
        }
    }
    return true;
}

namespace {

int longest_extension(const DescMult& m, uint64_t acc, int last, int size) {
    int best = size;
    for (int k = last + 1; k <= m.dim(); ++k) {
        const uint64_t next = basis_times(m, k, acc);
        if (next != 0) best = std::max(best, longest_extension(m, next, k, size + 1));
    }
    return best;
}

}  // namespace

int max_nonzero_product_size(const DescMult& m) {
    int best = 1;
    for (int i = 1; i <= m.dim(); ++i) {
        best = std::max(best, longest_extension(m, component_bit(m.dim(), i), i, 1));
    }
    return best;
}

namespace {

struct MultLine {
    int line;
    int i;
    int j;
    std::vector<int> ks;
};

int parse_int(const std::string& word, int line) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || ptr != word.data() + word.size()) throw ParseError(line, "bad integer '" + word + "'");
    if (v < 1) throw ParseError(line, "indices are 1-based, got " + word);
    return v;
}

}  // namespace

DescMult parse_mult(std::string_view text, int n) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    int header_n = 0;
    int widest = 0;
    std::vector<MultLine> lines;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream words(raw);
        std::vector<std::string> w;
        for (std::string s; words >> s;) w.push_back(s);
        if (w.empty()) continue;
        if (w[0] == "n") {
            if (w.size() != 2) throw ParseError(line_no, "expected 'n N'");
            if (header_n != 0 || !lines.empty()) throw ParseError(line_no, "dimension header must come first");
            header_n = parse_int(w[1], line_no);
            continue;
        }
        if (w[0] != "e" || w.size() < 4 || w[3] != "=") throw ParseError(line_no, "expected 'e i j = k1 k2 ...'");
        MultLine ml{line_no, parse_int(w[1], line_no), parse_int(w[2], line_no), {}};
        if (ml.i == ml.j) throw ParseError(line_no, "indices of a product must differ");
        widest = std::max({widest, ml.i, ml.j});
        for (size_t t = 4; t < w.size(); ++t) {
            ml.ks.push_back(parse_int(w[t], line_no));
            widest = std::max(widest, ml.ks.back());
        }
        lines.push_back(std::move(ml));
    }
    if (n > 0 && header_n > 0 && n != header_n) {
        throw ParseError(1, "header dimension " + std::to_string(header_n) + " conflicts with " + std::to_string(n));
    }
    const int dim = n > 0 ? n : (header_n > 0 ? header_n : widest);
    if (dim < 1) throw ParseError(line_no, "empty multiplication table without a dimension");
    if (widest > dim) throw ParseError(line_no, "index " + std::to_string(widest) + " exceeds dimension");
    DescMult m(dim);
    std::vector<bool> seen(static_cast<size_t>(dim) * dim, false);
    for (const auto& ml : lines) {
        const size_t key = static_cast<size_t>(std::min(ml.i, ml.j) - 1) * dim + (std::max(ml.i, ml.j) - 1);
        if (seen[key]) throw ParseError(ml.line, "product given twice");
        seen[key] = true;
        uint64_t value = 0;
        for (int k : ml.ks) value ^= component_bit(dim, k);
        try {
            m.set_bits(ml.i, ml.j, value);
        } catch (const PreconditionViolated& e) {
            throw ParseError(ml.line, e.what());
        }
    }
    return m;
}

std::string format_mult(const DescMult& m) {
    std::ostringstream out;
    const int n = m.dim();
    out << "n " << n << '\n';
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const uint64_t v = m.get_bits(i, j);
            if (v == 0) continue;
            out << "e " << i << ' ' << j << " =";
            for (int k = 1; k <= n; ++k) {
                if (v & component_bit(n, k)) out << ' ' << k;
            }
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace c3perm
