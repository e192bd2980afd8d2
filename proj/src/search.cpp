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

#include "c3perm/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "c3perm/error.hpp"
#include "c3perm/family.hpp"

namespace c3perm {

namespace {

constexpr char kMagic[4] = {'C', '3', 'S', 'V'};
constexpr uint32_t kCheckpointVersion = 1;

void check_enumeration_n(int n, int hi) {
    if (n < 3 || n > hi) {
        throw PreconditionViolated("qubit count must lie in [3, " + std::to_string(hi) + "], got " + std::to_string(n));
    }
}

uint64_t fnv1a(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

void put_u32(std::string& out, uint32_t v) {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>(v >> (8 * b)));
}

void put_u64(std::string& out, uint64_t v) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>(v >> (8 * b)));
}

class Reader {
   public:
    explicit Reader(const std::string& bytes) : bytes_(bytes) {}

    uint64_t get(int width) {
        if (pos_ + width > bytes_.size()) throw CorruptCheckpoint("checkpoint is truncated");
        uint64_t v = 0;
        for (int b = 0; b < width; ++b) v |= uint64_t{static_cast<unsigned char>(bytes_[pos_ + b])} << (8 * b);
        pos_ += width;
        return v;
    }
    size_t pos() const { return pos_; }

   private:
    const std::string& bytes_;
    size_t pos_ = 0;
};

int shard_bits(int shards, int mask_bits) {
    if (shards < 1 || !std::has_single_bit(static_cast<unsigned>(shards))) {
        throw BadShardSpec("shard count must be a power of two, got " + std::to_string(shards));
    }
    const int bits = std::countr_zero(static_cast<unsigned>(shards));
    if (bits > mask_bits) {
        throw BadShardSpec("at most 2^" + std::to_string(mask_bits) + " shards for this width");
    }
    return bits;
}

}  // namespace

std::vector<Toffoli> staircase_triples(int n) {
    std::vector<Toffoli> out;
    for (int k = 3; k <= n; ++k) {
        for (int i = 1; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) out.push_back({i, j, k});
        }
    }
    return out;
}

ToffoliCircuit mask_to_circuit(int n, uint64_t mask) {
    const auto triples = staircase_triples(n);
    ToffoliCircuit c;
    for (size_t t = 0; t < triples.size(); ++t) {
        if (mask >> t & 1) c.push_back(triples[t]);
    }
    return c;
}

uint64_t circuit_to_mask(int n, const ToffoliCircuit& c) {
    const auto triples = staircase_triples(n);
    uint64_t mask = 0;
    for (const auto& g : c) {
        auto it = std::find(triples.begin(), triples.end(), g);
        if (it == triples.end()) throw PreconditionViolated("gate is not a staircase triple on this width");
        mask |= uint64_t{1} << (it - triples.begin());
    }
    return mask;
}

StaircaseRange::StaircaseRange(int n) : n_(n), triples_(staircase_triples(n)) {
    check_enumeration_n(n, kMaxEnumerationQubits);
}

ToffoliCircuit StaircaseRange::iterator::operator*() const {
    ToffoliCircuit c;
    for (size_t t = 0; t < range_->triples_.size(); ++t) {
        if (mask_ >> t & 1) c.push_back(range_->triples_[t]);
    }
    return c;
}

StaircaseRange enumerate_staircase(int n) { return StaircaseRange(n); }

StaircaseClassifier::StaircaseClassifier(int n) : n_(n), triples_(staircase_triples(n)), table_(n) {
    check_enumeration_n(n, kMaxEnumerationQubits);
}

StaircaseClassifier::Verdict StaircaseClassifier::classify(uint64_t mask) {
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) table_.set_bits(i, j, 0);
    }
    for (size_t t = 0; t < triples_.size(); ++t) {
        if (mask >> t & 1) {
            const Toffoli& g = triples_[t];
            table_.set_bits(g.c1, g.c2, table_.get_bits(g.c1, g.c2) | component_bit(n_, g.target));
        }
    }
    if (!is_associative(table_)) return {false, false};
    return {true, all_triples_zero(table_)};
}

void write_checkpoint(const std::string& path, const CheckpointState& state) {
    std::string bytes(kMagic, 4);
    put_u32(bytes, kCheckpointVersion);
    put_u32(bytes, static_cast<uint32_t>(state.n));
    put_u32(bytes, static_cast<uint32_t>(state.shards));
    std::string bitmap((state.shards + 7) / 8, '\0');
    for (int s = 0; s < state.shards; ++s) {
        if (state.done[s]) bitmap[s / 8] = static_cast<char>(bitmap[s / 8] | (1 << (s % 8)));
    }
    bytes += bitmap;
    for (const auto& c : state.counts) {
        put_u64(bytes, c.total);
        put_u64(bytes, c.in_c3);
        put_u64(bytes, c.semi_clifford_c3);
    }
    put_u64(bytes, fnv1a(bytes));

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write checkpoint " + tmp);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw Error("cannot write checkpoint " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

CheckpointState read_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorruptCheckpoint("cannot open checkpoint " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    if (bytes.size() < 4 + 12 + 8 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw CorruptCheckpoint("bad checkpoint header");
    }
    Reader r(bytes);
    r.get(4);
    if (r.get(4) != kCheckpointVersion) throw CorruptCheckpoint("unsupported checkpoint version");
    CheckpointState state;
    state.n = static_cast<int>(r.get(4));
    state.shards = static_cast<int>(r.get(4));
    if (state.shards < 1 || state.shards > (1 << 24)) throw CorruptCheckpoint("implausible shard count");
    const size_t expected = 16 + (state.shards + 7) / 8 + 24 * static_cast<size_t>(state.shards) + 8;
    if (bytes.size() != expected) throw CorruptCheckpoint("checkpoint has the wrong length");
    state.done.resize(state.shards);
    for (int byte = 0; byte < (state.shards + 7) / 8; ++byte) {
        const uint64_t bits = r.get(1);
        for (int b = 0; b < 8 && byte * 8 + b < state.shards; ++b) state.done[byte * 8 + b] = bits >> b & 1;
    }
    state.counts.resize(state.shards);
    for (auto& c : state.counts) {
        c.total = r.get(8);
        c.in_c3 = r.get(8);
        c.semi_clifford_c3 = r.get(8);
    }
    const size_t body = r.pos();
    if (r.get(8) != fnv1a(bytes.substr(0, body))) throw CorruptCheckpoint("checkpoint checksum mismatch");
    for (int s = 0; s < state.shards; ++s) {
        const auto& c = state.counts[s];
        if (!state.done[s] && (c.total || c.in_c3 || c.semi_clifford_c3)) {
            throw CorruptCheckpoint("counts recorded for an unfinished shard");
        }
        if (c.semi_clifford_c3 > c.in_c3 || c.in_c3 > c.total) throw CorruptCheckpoint("inconsistent shard counts");
    }
    return state;
}

SurveyReport survey(const SurveyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const int n = options.n;
    check_enumeration_n(n, kMaxSurveyQubits);
    const int mask_bits = static_cast<int>(staircase_triples(n).size());
    const int bits = shard_bits(options.shards, mask_bits);
    const int shards = options.shards;
    const int low_bits = mask_bits - bits;

    CheckpointState state{n, shards, std::vector<bool>(shards, false), std::vector<ShardCounts>(shards)};
    if (!options.checkpoint.empty() && std::filesystem::exists(options.checkpoint)) {
        CheckpointState loaded = read_checkpoint(options.checkpoint);
        if (loaded.n != n || loaded.shards != shards) {
            throw BadShardSpec("checkpoint was written for n=" + std::to_string(loaded.n) +
                               " with " + std::to_string(loaded.shards) + " shards");
        }
        for (int s = 0; s < shards; ++s) {
            if (loaded.done[s] && loaded.counts[s].total != uint64_t{1} << low_bits) {
                throw CorruptCheckpoint("finished shard " + std::to_string(s) + " has the wrong total");
            }
        }
        state = std::move(loaded);
    }

    std::vector<int> todo;
    for (int s = 0; s < shards; ++s) {
        if (!state.done[s]) todo.push_back(s);
    }
    if (options.max_new_shards >= 0 && static_cast<int>(todo.size()) > options.max_new_shards) {
        todo.resize(options.max_new_shards);
    }

    std::mutex mu;
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    auto work = [&] {
        try {
            StaircaseClassifier classifier(n);
            for (size_t idx = next++; idx < todo.size(); idx = next++) {
                const int s = todo[idx];
                ShardCounts c;
                const uint64_t base = static_cast<uint64_t>(s) << low_bits;
                for (uint64_t low = 0; low < (uint64_t{1} << low_bits); ++low) {
                    const auto v = classifier.classify(base | low);
                    ++c.total;
                    c.in_c3 += v.in_c3;
                    c.semi_clifford_c3 += v.in_c3 && v.semi_clifford;
                }
                std::lock_guard lock(mu);
                state.done[s] = true;
                state.counts[s] = c;
                if (!options.checkpoint.empty()) write_checkpoint(options.checkpoint, state);
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
        }
    };
    const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(todo.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    SurveyReport report;
    report.n = n;
    report.shards = shards;
    report.shard_done = state.done;
    report.shard_counts = state.counts;
    report.complete = std::all_of(state.done.begin(), state.done.end(), [](bool d) { return d; });
    for (const auto& c : state.counts) {
        report.total += c.total;
        report.in_c3 += c.in_c3;
        report.semi_clifford_c3 += c.semi_clifford_c3;
    }
    report.non_sc_c3 = report.in_c3 - report.semi_clifford_c3;
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string survey_report_json(const SurveyReport& r) {
    std::ostringstream out;
    out << "{\"n\":" << r.n << ",\"shards\":" << r.shards << ",\"complete\":" << (r.complete ? "true" : "false")
        << ",\"total\":" << r.total << ",\"in_c3\":" << r.in_c3 << ",\"semi_clifford_c3\":" << r.semi_clifford_c3
        << ",\"non_sc_c3\":" << r.non_sc_c3 << ",\"shard_manifest\":[";
    for (int s = 0; s < r.shards; ++s) {
        const auto& c = r.shard_counts[s];
        if (s) out << ',';
        out << "{\"shard\":" << s << ",\"done\":" << (r.shard_done[s] ? "true" : "false") << ",\"total\":" << c.total
            << ",\"in_c3\":" << c.in_c3 << ",\"semi_clifford_c3\":" << c.semi_clifford_c3 << '}';
    }
    out << "]}";
    return out.str();
}

SampleReport sample_survey(int n, uint64_t samples, uint64_t seed) {
    check_enumeration_n(n, kMaxEnumerationQubits);
    const int mask_bits = static_cast<int>(staircase_triples(n).size());
    std::mt19937_64 rng(seed);
    StaircaseClassifier classifier(n);
    SampleReport r{n, samples, seed, 0, 0, std::nullopt};
    for (uint64_t s = 0; s < samples; ++s) {
        const uint64_t mask = rng() & dim_mask(mask_bits);
        const auto v = classifier.classify(mask);
        r.in_c3 += v.in_c3;
        r.semi_clifford_c3 += v.in_c3 && v.semi_clifford;
        if (v.in_c3 && !v.semi_clifford && !r.non_sc_mask) r.non_sc_mask = mask;
    }
    return r;
}

std::optional<ToffoliCircuit> find_witness(int n) {
    if (n < 3) throw PreconditionViolated("qubit count must be at least 3");
    if (n >= 7) {
        const ToffoliCircuit u3 = uk_circuit(3);
        const DescMult m = from_staircase(u3, n);
        if (is_associative(m) && !all_triples_zero(m)) return u3;
        throw InternalContradiction("U3 failed the witness check");
    }
    StaircaseClassifier classifier(n);
    const uint64_t count = uint64_t{1} << staircase_triples(n).size();
    for (uint64_t mask = 0; mask < count; ++mask) {
        const auto v = classifier.classify(mask);
        if (v.in_c3 && !v.semi_clifford) return mask_to_circuit(n, mask);
    }
    return std::nullopt;
}

}  // namespace c3perm
