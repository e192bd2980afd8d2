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

#include "c3perm/f2.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "c3perm/error.hpp"

namespace c3perm {

namespace {

void check_dim(int n) {
    if (n < 0 || n > kMaxDim) {
        throw DimensionMismatch("dimension " + std::to_string(n) + " outside [0, 64]");
    }
}

// Row-echelon helper keyed on the highest set bit of each stored word.
class Echelon {
   public:
    // Returns true when v was independent of the stored vectors.
    bool insert(uint64_t v) {
        v = reduce(v);
        if (v == 0) return false;
        rows_.push_back(v);
        std::sort(rows_.begin(), rows_.end(), std::greater<>());
        return true;
    }

    uint64_t reduce(uint64_t v) const {
        for (uint64_t r : rows_) {
            uint64_t pivot = std::bit_floor(r);
            if (v & pivot) v ^= r;
        }
        return v;
    }

    size_t size() const { return rows_.size(); }

   private:
    // Sorted descending, so pivots (top bits) are distinct and decreasing.
    std::vector<uint64_t> rows_;
};

}  // namespace

F2Vec::F2Vec(int n) : n_(n) { check_dim(n); }

F2Vec F2Vec::from_bits(int n, uint64_t bits) {
    F2Vec v(n);
    if (bits & ~dim_mask(n)) throw DimensionMismatch("bits beyond dimension " + std::to_string(n));
    v.bits_ = bits;
    return v;
}

F2Vec F2Vec::unit(int n, int i) {
    F2Vec v(n);
    v.set(i);
    return v;
}

F2Vec F2Vec::parse(const std::string& text) {
    uint64_t bits = 0;
    int n = 0;
    for (char c : text) {
        if (c != '0' && c != '1') throw DimensionMismatch("bad F2 vector literal '" + text + "'");
        bits = (bits << 1) | static_cast<uint64_t>(c == '1');
        ++n;
    }
    return from_bits(n, bits);
}

void F2Vec::set(int i, bool value) {
    if (i < 1 || i > n_) throw IndexOutOfRange("component " + std::to_string(i) + " of F2^" + std::to_string(n_));
    if (value) {
        bits_ |= component_bit(n_, i);
    } else {
        bits_ &= ~component_bit(n_, i);
    }
}

int F2Vec::weight() const { return std::popcount(bits_); }

bool F2Vec::dot(const F2Vec& other) const {
    if (n_ != other.n_) throw DimensionMismatch("dot of vectors with different dimensions");
    return std::popcount(bits_ & other.bits_) & 1;
}

F2Vec& F2Vec::operator+=(const F2Vec& other) {
    if (n_ != other.n_) throw DimensionMismatch("sum of vectors with different dimensions");
    bits_ ^= other.bits_;
    return *this;
}

std::string F2Vec::to_string() const {
    std::string s;
    for (int i = 1; i <= n_; ++i) s.push_back((*this)[i] ? '1' : '0');
    return s;
}

int first_nonzero_index(const F2Vec& v) {
    if (v.is_zero()) return kInfinity;
    return v.dim() - std::bit_width(v.bits()) + 1;
}

F2Mat::F2Mat(int n) : n_(n), rows_(static_cast<size_t>(n), 0) { check_dim(n); }

F2Mat F2Mat::identity(int n) {
    F2Mat m(n);
    for (int i = 1; i <= n; ++i) m.set(i, i);
    return m;
}

F2Mat F2Mat::from_rows(std::span<const F2Vec> rows) {
    F2Mat m(static_cast<int>(rows.size()));
    for (int i = 1; i <= m.n_; ++i) m.set_row(i, rows[i - 1]);
    return m;
}

F2Mat F2Mat::from_columns(std::span<const F2Vec> columns) { return from_rows(columns).transpose(); }

F2Mat F2Mat::parse(const std::string& text) {
    std::vector<F2Vec> rows;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) rows.push_back(F2Vec::parse(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == '/' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return from_rows(rows);
}

void F2Mat::set(int i, int j, bool value) {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw IndexOutOfRange("matrix entry out of range");
    if (value) {
        rows_[i - 1] |= component_bit(n_, j);
    } else {
        rows_[i - 1] &= ~component_bit(n_, j);
    }
}

F2Vec F2Mat::column(int j) const {
    F2Vec c(n_);
    for (int i = 1; i <= n_; ++i) c.set(i, get(i, j));
    return c;
}

void F2Mat::set_row(int i, const F2Vec& row) {
    if (row.dim() != n_) throw DimensionMismatch("row dimension mismatch");
    rows_[i - 1] = row.bits();
}

bool F2Mat::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](uint64_t r) { return r == 0; });
}

bool F2Mat::is_strictly_lower_triangular() const {
    // Row i may only use components j < i, i.e. bits above position n - i.
    for (int i = 1; i <= n_; ++i) {
        uint64_t allowed = dim_mask(n_) & ~((component_bit(n_, i) << 1) - 1);
        if (rows_[i - 1] & ~allowed) return false;
    }
    return true;
}

F2Mat F2Mat::transpose() const {
    F2Mat t(n_);
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (get(i, j)) t.set(j, i);
        }
    }
    return t;
}

F2Mat& F2Mat::operator+=(const F2Mat& other) {
    if (n_ != other.n_) throw DimensionMismatch("sum of matrices with different dimensions");
    for (int i = 0; i < n_; ++i) rows_[i] ^= other.rows_[i];
    return *this;
}

std::string F2Mat::to_string() const {
    std::string s;
    for (int i = 1; i <= n_; ++i) {
        if (i > 1) s.push_back('/');
        s += row(i).to_string();
    }
    return s;
}

F2Mat mat_mul(const F2Mat& a, const F2Mat& b) {
    const int n = a.dim();
    if (b.dim() != n) throw DimensionMismatch("matrix product dimension mismatch");
    F2Mat c(n);
    for (int i = 1; i <= n; ++i) {
        uint64_t acc = 0;
        for (int j = 1; j <= n; ++j) {
            if (a.get(i, j)) acc ^= b.row_bits(j);
        }
        c.set_row(i, F2Vec::from_bits(n, acc));
    }
    return c;
}

F2Vec mat_vec(const F2Mat& a, const F2Vec& v) {
    const int n = a.dim();
    if (v.dim() != n) throw DimensionMismatch("matrix-vector dimension mismatch");
    uint64_t out = 0;
    for (int i = 1; i <= n; ++i) {
        if (std::popcount(a.row_bits(i) & v.bits()) & 1) out |= component_bit(n, i);
    }
    return F2Vec::from_bits(n, out);
}

F2Mat invert(const F2Mat& m) {
    const int n = m.dim();
    std::vector<uint64_t> left(n), right(n);
    for (int i = 0; i < n; ++i) {
        left[i] = m.row_bits(i + 1);
        right[i] = component_bit(n, i + 1);
    }
    for (int col = 1; col <= n; ++col) {
        const uint64_t bit = component_bit(n, col);
        int pivot = -1;
        for (int r = col - 1; r < n; ++r) {
            if (left[r] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw NotInvertible();
        std::swap(left[pivot], left[col - 1]);
        std::swap(right[pivot], right[col - 1]);
        for (int r = 0; r < n; ++r) {
            if (r != col - 1 && (left[r] & bit)) {
                left[r] ^= left[col - 1];
                right[r] ^= right[col - 1];
            }
        }
    }
    F2Mat inv(n);
    for (int i = 1; i <= n; ++i) inv.set_row(i, F2Vec::from_bits(n, right[i - 1]));
    return inv;
}

int rank(std::span<const F2Vec> vectors) {
    Echelon e;
    for (const auto& v : vectors) e.insert(v.bits());
    return static_cast<int>(e.size());
}

int rank(const F2Mat& m) {
    Echelon e;
    for (int i = 1; i <= m.dim(); ++i) e.insert(m.row_bits(i));
    return static_cast<int>(e.size());
}

std::vector<F2Vec> extend_to_basis(int n, std::span<const F2Vec> independent) {
    Echelon e;
    std::vector<F2Vec> out;
    for (const auto& v : independent) {
        if (!e.insert(v.bits())) throw PreconditionViolated("extend_to_basis: vectors are dependent");
        out.push_back(v);
    }
    for (int i = 1; i <= n && static_cast<int>(out.size()) < n; ++i) {
        if (e.insert(component_bit(n, i))) out.push_back(F2Vec::unit(n, i));
    }
    return out;
}

std::vector<F2Vec> span_basis(int n, std::span<const F2Vec> vectors) {
    std::vector<uint64_t> rows;
    for (const auto& v : vectors) {
        uint64_t x = v.bits();
        for (uint64_t r : rows) {
            if (x & std::bit_floor(r)) x ^= r;
        }
        if (x == 0) continue;
        // Keep the set fully reduced: clear the new pivot from existing rows.
        const uint64_t pivot = std::bit_floor(x);
        for (uint64_t& r : rows) {
            if (r & pivot) r ^= x;
        }
        rows.push_back(x);
        std::sort(rows.begin(), rows.end(), std::greater<>());
    }
    std::vector<F2Vec> out;
    for (uint64_t r : rows) out.push_back(F2Vec::from_bits(n, r));
    return out;
}

std::vector<F2Vec> orthogonal_complement(int n, std::span<const F2Vec> basis) {
    const auto rows = span_basis(n, basis);
    // Pivot columns are the top bits of the reduced rows; every other column is free.
    uint64_t pivots = 0;
    for (const auto& r : rows) pivots |= std::bit_floor(r.bits());
    std::vector<F2Vec> out;
    for (int free = 1; free <= n; ++free) {
        const uint64_t fbit = component_bit(n, free);
        if (pivots & fbit) continue;
        uint64_t x = fbit;
        for (const auto& r : rows) {
            if (r.bits() & fbit) x |= std::bit_floor(r.bits());
        }
        out.push_back(F2Vec::from_bits(n, x));
    }
    return out;
}

F2Mat simultaneous_slt_basis(int n, std::span<const F2Mat> mats) {
    for (size_t a = 0; a < mats.size(); ++a) {
        const std::string which = "matrix " + std::to_string(a + 1);
        if (mats[a].dim() != n) throw PreconditionViolated(which + ": dimension mismatch");
        if (!mat_mul(mats[a], mats[a]).is_zero()) throw PreconditionViolated(which + ": A^2 != 0");
        for (size_t b = 0; b < a; ++b) {
            if (!(mat_mul(mats[a], mats[b]) == mat_mul(mats[b], mats[a]))) {
                throw PreconditionViolated(which + ": does not commute with matrix " + std::to_string(b + 1));
            }
        }
    }

    // Collect b_n, b_{n-1}, ...: each new vector is mapped by every A into the
    // span of the vectors already chosen.
    Echelon chosen_span;
    std::vector<F2Vec> chosen;
    while (static_cast<int>(chosen.size()) < n) {
        uint64_t v = 0;
        for (int i = n; i >= 1; --i) {
            if (chosen_span.reduce(component_bit(n, i)) != 0) {
                v = component_bit(n, i);
                break;
            }
        }
        // Each step strictly grows the set of A that kill v modulo the span.
        for (size_t guard = 0; guard <= mats.size(); ++guard) {
            bool moved = false;
            for (const auto& a : mats) {
                uint64_t image = mat_vec(a, F2Vec::from_bits(n, v)).bits();
                if (chosen_span.reduce(image) != 0) {
                    v = image;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
        chosen_span.insert(v);
        chosen.push_back(F2Vec::from_bits(n, v));
    }
    std::reverse(chosen.begin(), chosen.end());
    F2Mat m = invert(F2Mat::from_columns(chosen));
    const F2Mat m_inv = invert(m);
    for (const auto& a : mats) {
        if (!mat_mul(mat_mul(m, a), m_inv).is_strictly_lower_triangular()) {
            throw InternalContradiction("simultaneous_slt_basis: result is not strictly lower triangular");
        }
    }
    return m;
}

void apply_step(std::vector<TwistedPair>& state, const EliminationStep& step) {
    const int n = static_cast<int>(state.size());
    if (step.i < 1 || step.i > n || step.j < 1 || step.j > n || step.i == step.j) {
        throw IndexOutOfRange("elimination step indices out of range");
    }
    auto& pi = state[step.i - 1];
    auto& pj = state[step.j - 1];
    if (step.kind == EliminationStep::Kind::Swap) {
        std::swap(pi, pj);
        return;
    }
    F2Vec b = pi.b + pj.b + mat_vec(pi.a, pj.b);
    F2Mat a = pi.a + pj.a + mat_mul(pi.a, pj.a);
    pi.a = std::move(a);
    pi.b = b;
}

std::vector<TwistedPair> replay(std::vector<TwistedPair> state, const EliminationLog& log) {
    for (const auto& step : log) apply_step(state, step);
    return state;
}

TwistedGaussOutcome twisted_gauss(std::vector<TwistedPair> pairs) {
    const int n = static_cast<int>(pairs.size());
    for (int i = 0; i < n; ++i) {
        if (pairs[i].a.dim() != n || pairs[i].b.dim() != n) {
            throw PreconditionViolated("twisted_gauss: pair " + std::to_string(i + 1) + " has wrong dimension");
        }
        if (!pairs[i].a.is_strictly_lower_triangular()) {
            throw PreconditionViolated("twisted_gauss: matrix " + std::to_string(i + 1) +
                                       " is not strictly lower triangular");
        }
    }
    EliminationLog log;
    auto step = [&](EliminationStep::Kind kind, int i, int j) {
        EliminationStep s{kind, i, j};
        apply_step(pairs, s);
        log.push_back(s);
    };
    auto zero_index = [&]() -> int {
        for (int i = 0; i < n; ++i) {
            if (pairs[i].b.is_zero()) return i + 1;
        }
        return 0;
    };
    if (int z = zero_index()) return ZeroWitness{z, log, pairs};

    // Phase 1: raise the alpha-sum until all first-nonzero indices differ.
    for (;;) {
        int ci = 0;
        int cj = 0;
        for (int i = 1; i <= n && ci == 0; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                if (first_nonzero_index(pairs[i - 1].b) == first_nonzero_index(pairs[j - 1].b)) {
                    ci = i;
                    cj = j;
                    break;
                }
            }
        }
        if (ci == 0) break;
        step(EliminationStep::Kind::Compose, ci, cj);
        if (pairs[ci - 1].b.is_zero()) return ZeroWitness{ci, log, pairs};
    }
    for (int p = 1; p <= n; ++p) {
        for (int q = p; q <= n; ++q) {
            if (first_nonzero_index(pairs[q - 1].b) == p) {
                if (q != p) step(EliminationStep::Kind::Swap, p, q);
                break;
            }
        }
    }

    // Phase 2: row reduction below the pivots.
    for (int i = 1; i <= n; ++i) {
        const F2Vec target = F2Vec::unit(n, i);
        while (!(pairs[i - 1].b == target)) {
            const int k = first_nonzero_index(pairs[i - 1].b + target);
            step(EliminationStep::Kind::Compose, i, k);
        }
    }
    return Normalized{log, pairs};
}

}  // namespace c3perm
