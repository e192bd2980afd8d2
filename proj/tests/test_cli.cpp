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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "c3perm/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace c3perm;
using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

Json without_time(Json j) {
    j.erase("wall_time_ms");
    return j;
}

}  // namespace

TEST_CASE("certificates carry the versioned envelope") {
    const Run r = run({"uk", "3"});
    REQUIRE(r.code == kExitTrue);
    const Json j = r.json();
    for (const char* key : {"schema_version", "claim", "inputs", "verdict", "evidence", "tool_version", "wall_time_ms"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["verdict"] == true);
    CHECK(j["evidence"]["in_c3"] == true);
    CHECK(j["evidence"]["inverse_refuted_at"] == 3);
    CHECK(j["evidence"]["top_coordinate"] == "a7 + a1*a6 + a2*a5 + a3*a4 + a1*a2*a4");
    CHECK(r.out.find('\n') == r.out.size() - 1);
}

TEST_CASE("poly on a Toffoli file") {
    const auto path = (std::filesystem::temp_directory_path() / "c3perm_tof123.txt").string();
    std::ofstream(path) << "TOF 1 2 3\n";
    const Run r = run({"poly", "--circuit", path});
    CHECK(r.code == kExitTrue);
    CHECK(r.json()["evidence"]["coordinates"] == Json::array({"a1", "a2", "a3 + a1*a2"}));
    std::filesystem::remove(path);
}

TEST_CASE("classify reads standard input and reports the witness") {
    const Run r = run({"classify", "--circuit", "-"}, "TOF 1 2 3\nTOF 3 4 5\n");
    CHECK(r.code == kExitFalse);
    const Json j = r.json();
    CHECK(j["verdict"] == false);
    CHECK(j["evidence"]["in_c3"] == false);
    CHECK(j["evidence"]["witness"] == "X1");

    const Run tof = run({"classify", "--table", "0,1,2,3,4,5,7,6"});
    CHECK(tof.code == kExitTrue);
    CHECK(tof.json()["evidence"]["semi_clifford"] == true);

    const Run t = run({"classify", "--circuit", "-"}, "T 1\n");
    CHECK(t.code == kExitTrue);
    CHECK(t.json()["evidence"]["route"] == "dense");
    CHECK(t.json()["evidence"]["clifford"] == false);
}

TEST_CASE("staircase and reduce") {
    const Run s = run({"staircase", "--circuit", "-"}, "TOF 1 2 3\nTOF 3 4 5\n");
    CHECK(s.code == kExitTrue);
    const Run ns = run({"staircase", "--circuit", "-"}, "TOF 3 4 5\nTOF 1 2 3\n");
    CHECK(ns.code == kExitFalse);
    CHECK(ns.json()["evidence"]["offending_term"] == "a1*a2*a4");
    const Run r = run({"reduce", "--circuit", "-", "-n", "4"}, "CNOT 1 2\nTOF 1 2 3\nX 4\nCNOT 3 4\n");
    CHECK(r.code == kExitTrue);
    CHECK(r.json()["evidence"]["recomposition_exact"] == true);
    const Run bad = run({"reduce", "--circuit", "-"}, "TOF 1 2 3\nTOF 3 4 5\n");
    CHECK(bad.code == kExitFalse);
}

TEST_CASE("mult accepts tables and circuits") {
    const Run a = run({"mult", "--mult", "-"}, "n 5\ne 1 2 = 3\ne 3 4 = 5\n");
    CHECK(a.code == kExitFalse);
    CHECK(a.json()["evidence"]["witness"]["i"] == 1);
    const Run b = run({"mult", "--circuit", "-"}, "TOF 1 2 3\n");
    CHECK(b.code == kExitTrue);
    CHECK(b.json()["evidence"]["permutation_round_trip"] == true);
}

TEST_CASE("survey, witness and verify-gm") {
    const Run s = run({"survey", "-n", "5", "--shards", "4", "--workers", "2"});
    CHECK(s.code == kExitTrue);
    CHECK(s.json()["evidence"]["total"] == 1024);
    CHECK(s.json()["evidence"]["non_sc_c3"] == 0);
    const Run s1 = run({"survey", "-n", "5", "--shards", "4", "--workers", "1"});
    CHECK(without_time(s.json()) == without_time(s1.json()));

    const Run w = run({"witness"});
    CHECK(w.code == kExitTrue);
    CHECK(w.json()["evidence"]["nonzero_triple"]["factors"] == Json::array({1, 2, 4}));
    CHECK(run({"witness", "-n", "4"}).code == kExitFalse);
    CHECK(run({"verify-gm"}).code == kExitTrue);
}

TEST_CASE("certificates are reproducible from their echoed inputs") {
    const Run first = run({"classify", "--circuit", "-"}, "tof 1 2 3 # comment\nCNOT 3 1\n");
    const Json j = first.json();
    const Run again = run({"classify", "--circuit", "-"}, j["inputs"]["circuit"].get<std::string>());
    CHECK(without_time(again.json()) == without_time(j));
}

TEST_CASE("usage and input errors exit with status 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"survey"}).code == kExitUsage);
    CHECK(run({"survey", "-n", "6", "--shards", "3"}).code == kExitUsage);
    CHECK(run({"survey", "-n", "7"}).code == kExitUsage);
    CHECK(run({"uk", "9"}).code == kExitUsage);
    const Run parse = run({"classify", "--circuit", "-"}, "TOF 1 1 3\n");
    CHECK(parse.code == kExitUsage);
    CHECK(parse.err.find("line 1") != std::string::npos);
    CHECK(parse.out.empty());
    CHECK(run({"poly", "--table", "0,0,1,2"}).code == kExitUsage);
    CHECK(run({"poly"}).code == kExitUsage);
    CHECK(run({"poly", "--circuit", "-"}, "H 1\n").code == kExitUsage);
    CHECK(run({"--help"}).code == kExitTrue);
}
