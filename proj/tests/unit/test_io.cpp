// Copyright 2026 The qgames Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "qgames/catalog.hpp"
#include "qgames/error.hpp"
#include "qgames/io.hpp"
#include "qgames/transforms.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace qgames {
namespace {

using Catch::Matchers::ContainsSubstring;

namespace fs = std::filesystem;

fs::path tmp_path(const std::string &name) {
    fs::create_directories(QGAMES_TEST_TMPDIR);
    return fs::path(QGAMES_TEST_TMPDIR) / name;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Error parse_failure(std::string_view text) {
    try {
        (void)parse_game(text);
    } catch (const Error &e) {
        return e;
    }
    FAIL("parse_game accepted the document");
    return Error(ErrorKind::ParseError, "unreachable");
}

TEST_CASE("builtin catalog entries", "[io]") {
    const auto names = builtin_names();
    CHECK(std::find(names.begin(), names.end(), "penny-table1") != names.end());
    const auto t1 = std::get<StrategicGame>(builtin_catalog("penny-table1"));
    CHECK(t1 == penny_table1());
    CHECK(std::get<StrategicGame>(builtin_catalog("penny-table2")) == penny_table2());
    CHECK_THROWS_AS(builtin_catalog("nope"), Error);
}

TEST_CASE("random builtin names are deterministic", "[io]") {
    const auto a = builtin_catalog("random-qseq(seed=7,d=2,m=2)");
    const auto b = builtin_catalog("random-qseq(7,2,2)");
    CHECK(std::get<QuantumSequentialGame>(a) == std::get<QuantumSequentialGame>(b));
    CHECK(serialize_game(a) == serialize_game(builtin_catalog("random-qseq(7,2,2)")));
    CHECK(std::get<QuantumSequentialGame>(a).turn_map.steps() == 2);
}

TEST_CASE("round trip of every game kind", "[io]") {
    const std::vector<AnyGame> games = {
        penny_table1(), penny_seq_classical(), penny_seq_quantum(),
        random_qsim({4, 3, 2, 3}), random_qseq({9, 3, 3, 2, 0, true}),
        seq_to_sim(random_qseq({2, 2, 2})).game};
    for (const auto &g : games) {
        const std::string text = serialize_game(g);
        const AnyGame back = parse_game(text);
        CHECK(back == g);
        CHECK(serialize_game(back) == text);
    }
}

TEST_CASE("saving twice yields identical bytes", "[io]") {
    const AnyGame g = random_qsim({1, 2, 2, 3});
    const auto a = tmp_path("twice_a.json");
    const auto b = tmp_path("twice_b.json");
    save_game(g, a);
    save_game(g, b);
    CHECK(slurp(a) == slurp(b));
    CHECK(load_game(a) == g);
}

TEST_CASE("transformed game reloads with a valid POVM", "[io]") {
    const auto res = seq_to_sim(penny_seq_quantum());
    const auto path = tmp_path("penny_sim.json");
    save_game(res.game, path);
    const auto back = std::get<QuantumSimultaneousGame>(load_game(path));
    CHECK(validate_povm(back.povm).empty());
}

TEST_CASE("penny-table1 document", "[io]") {
    const std::string doc = R"({
      "schema_version": "1", "kind": "strategic", "players": ["P", "Q"],
      "strategies": [["N", "F"], ["NN", "NF", "FN", "FF"]],
      "payoffs": [[-1, 1], [1, -1], [1, -1], [-1, 1],
                  [1, -1], [-1, 1], [-1, 1], [1, -1]]})";
    CHECK(std::get<StrategicGame>(parse_game(doc)) == penny_table1());
}

TEST_CASE("non-complete Kraus list is a validation error", "[io]") {
    const std::string doc = R"({
      "schema_version": "1", "kind": "qsim", "players": ["A"], "dims": [2],
      "rho_init": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]],
      "channels": [[{"label": "dup", "kraus": [
          [[[1, 0], [0, 0]], [[0, 0], [1, 0]]],
          [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]]}]],
      "povm": [{"label": "all", "matrix": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]}],
      "payoffs": [[1]]})";
    const auto e = parse_failure(doc);
    CHECK(e.kind() == ErrorKind::ValidationError);
    REQUIRE(e.diagnostics().size() == 1);
    CHECK_THAT(e.diagnostics()[0], ContainsSubstring("/channels/0/0/kraus"));
    CHECK_THAT(e.diagnostics()[0], ContainsSubstring("trace-preserving completeness"));
}

TEST_CASE("schema errors carry a path", "[io]") {
    const auto empty = parse_failure(R"({"schema_version": "1", "kind": "strategic",
        "players": ["P"], "strategies": [[]], "payoffs": []})");
    CHECK(empty.kind() == ErrorKind::SchemaError);
    REQUIRE_FALSE(empty.diagnostics().empty());
    CHECK_THAT(empty.diagnostics()[0], ContainsSubstring("/strategies/0"));

    const auto version = parse_failure(R"({"schema_version": "2", "kind": "strategic"})");
    CHECK(version.kind() == ErrorKind::SchemaError);
    CHECK_THAT(version.diagnostics()[0], ContainsSubstring("/schema_version"));

    const auto kind = parse_failure(R"({"schema_version": "1", "kind": "chess"})");
    CHECK_THAT(kind.diagnostics()[0], ContainsSubstring("/kind"));

    const auto turns = parse_failure(R"({
      "schema_version": "1", "kind": "qseq", "players": ["A"], "dims": [1],
      "rho_init": [[[1, 0]]], "turn_sequence": [2],
      "channels": [[{"label": "I", "kraus": [[[[1, 0]]]]}]],
      "povm": [{"label": "all", "matrix": [[[1, 0]]]}], "payoffs": [[0]]})");
    CHECK(turns.kind() == ErrorKind::SchemaError);
    CHECK_THAT(turns.diagnostics()[0], ContainsSubstring("/turn_sequence/0"));
}

TEST_CASE("malformed JSON is a parse error", "[io]") {
    CHECK(parse_failure("{not json").kind() == ErrorKind::ParseError);
}

TEST_CASE("missing file is an IO error", "[io]") {
    try {
        (void)load_game(tmp_path("does_not_exist.json"));
        FAIL("expected throw");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::IoError);
    }
}

TEST_CASE("witness serialization", "[io]") {
    const auto text = serialize_witness({{{0, 1}, {1, 0}}}, WitnessLevel::Reduced);
    CHECK_THAT(text, ContainsSubstring("reduced"));
    CHECK_THAT(text, ContainsSubstring("maps"));
}

} // namespace
} // namespace qgames
