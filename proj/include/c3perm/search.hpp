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

// Exhaustive classification of staircase circuits. A circuit on n qubits is
// a mask over the C(n,3) triples i < j < k listed by (k, i, j); bit t of the
// mask selects triple t. Shard s of 2^b shards holds the masks whose top b
// bits equal s.

#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "c3perm/circuit.hpp"
#include "c3perm/desc_mult.hpp"

namespace c3perm {

inline constexpr int kMaxEnumerationQubits = 7;
inline constexpr int kMaxSurveyQubits = 6;

std::vector<Toffoli> staircase_triples(int n);
ToffoliCircuit mask_to_circuit(int n, uint64_t mask);
uint64_t circuit_to_mask(int n, const ToffoliCircuit& c);

/// Lazy range over all 2^C(n,3) staircase circuits, 3 <= n <= 7.
class StaircaseRange {
   public:
    explicit StaircaseRange(int n);

    class iterator {
       public:
        using iterator_category = std::input_iterator_tag;
        using value_type = ToffoliCircuit;
        using difference_type = std::ptrdiff_t;
        using pointer = const ToffoliCircuit*;
        using reference = ToffoliCircuit;

        iterator(const StaircaseRange* range, uint64_t mask) : range_(range), mask_(mask) {}
        ToffoliCircuit operator*() const;
        iterator& operator++() {
            ++mask_;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++mask_;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

       private:
        const StaircaseRange* range_;
        uint64_t mask_;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, uint64_t{1} << triples_.size()}; }
    uint64_t size() const { return uint64_t{1} << triples_.size(); }

   private:
    int n_;
    std::vector<Toffoli> triples_;
};

StaircaseRange enumerate_staircase(int n);

/// Reusable scratch table for classifying many masks.
class StaircaseClassifier {
   public:
    explicit StaircaseClassifier(int n);

    struct Verdict {
        bool in_c3;
        bool semi_clifford;
    };

    Verdict classify(uint64_t mask);
    const DescMult& table() const { return table_; }

   private:
    int n_;
    std::vector<Toffoli> triples_;
    DescMult table_;
};

struct ShardCounts {
    uint64_t total = 0;
    uint64_t in_c3 = 0;
    uint64_t semi_clifford_c3 = 0;

    friend bool operator==(const ShardCounts&, const ShardCounts&) = default;
};

struct SurveyOptions {
    int n = 0;
    int shards = 1;
    int workers = 1;
    /// Empty for no checkpointing.
    std::string checkpoint;
    /// Stop after this many newly completed shards (negative: no limit).
    int max_new_shards = -1;
};

struct SurveyReport {
    int n = 0;
    int shards = 0;
    uint64_t total = 0;
    uint64_t in_c3 = 0;
    uint64_t semi_clifford_c3 = 0;
    uint64_t non_sc_c3 = 0;
    bool complete = false;
    std::vector<bool> shard_done;
    std::vector<ShardCounts> shard_counts;
    /// Wall time of this run; not part of the serialized report.
    double elapsed_seconds = 0;
};

/// Full enumeration for 3 <= n <= 6. Throws BadShardSpec, CorruptCheckpoint.
SurveyReport survey(const SurveyOptions& options);

/// Deterministic JSON of a report, without timing.
std::string survey_report_json(const SurveyReport& report);

struct CheckpointState {
    int n = 0;
    int shards = 0;
    std::vector<bool> done;
    std::vector<ShardCounts> counts;
};

void write_checkpoint(const std::string& path, const CheckpointState& state);
/// Throws CorruptCheckpoint on any malformed content.
CheckpointState read_checkpoint(const std::string& path);

struct SampleReport {
    int n = 0;
    uint64_t samples = 0;
    uint64_t seed = 0;
    uint64_t in_c3 = 0;
    uint64_t semi_clifford_c3 = 0;
    std::optional<uint64_t> non_sc_mask;
};

/// Uniform random staircase masks, 3 <= n <= 7.
SampleReport sample_survey(int n, uint64_t samples, uint64_t seed);

/// A staircase circuit in C3 with a nonzero triple product. For n >= 7 this
/// is U3 on the first seven qubits; for n <= 6 the exhaustive search finds
/// none.
std::optional<ToffoliCircuit> find_witness(int n);

}  // namespace c3perm
