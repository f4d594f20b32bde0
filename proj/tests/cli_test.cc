// Copyright 2026 The cliffc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cstdlib>
#include <sstream>

#include "cliffc/serialize.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace cliffc;
using namespace cliffc::testing;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args, const std::string &input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        out.push_back(line);
    }
    return out;
}

json report_of(const std::string &text) {
    for (const auto &line : lines(text)) {
        if (line.rfind("# report: ", 0) == 0) {
            return json::parse(line.substr(10));
        }
    }
    return json();
}

}  // namespace

TEST(cli, sample_clifford_json) {
    CliRun r = run({"sample", "clifford", "-n", "2", "--count", "3", "--seed", "7", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 3);
    for (const auto &l : ls) {
        CanonicalForm cf = canonical_from_json(json::parse(l));
        ASSERT_TRUE(canonical_invariants_hold(cf));
    }
}

TEST(cli, sample_gl_is_invertible) {
    CliRun r = run({"sample", "gl", "-n", "3", "--count", "1", "--seed", "1"});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(rank(bit_matrix_from_json(json::parse(r.out))), 3);
}

TEST(cli, sample_is_deterministic_and_job_independent) {
    std::vector<std::string> args = {"sample", "clifford", "-n", "3", "--count", "50", "--seed", "99", "--format", "tableau"};
    CliRun a = run(args);
    CliRun b = run(args);
    args.push_back("--jobs");
    args.push_back("3");
    CliRun c = run(args);
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(a.out, b.out);
    ASSERT_EQ(a.out, c.out);
    CliRun other = run({"sample", "clifford", "-n", "3", "--count", "50", "--seed", "99", "--stream", "1", "--format", "tableau"});
    ASSERT_NE(a.out, other.out);
}

TEST(cli, sample_seed_from_environment) {
    CliRun flag = run({"sample", "qmallows", "-n", "4", "--count", "5", "--seed", "1234"});
    setenv("CLIFFC_SEED", "1234", 1);
    CliRun env = run({"sample", "qmallows", "-n", "4", "--count", "5"});
    setenv("CLIFFC_SEED", "nope", 1);
    CliRun bad = run({"sample", "qmallows", "-n", "4"});
    unsetenv("CLIFFC_SEED");
    ASSERT_EQ(flag.out, env.out);
    ASSERT_EQ(bad.code, 2);
}

TEST(cli, sample_other_formats) {
    for (const char *kind : {"clifford", "gl", "mallows", "qmallows"}) {
        for (const char *format : {"json", "circuit", "tableau"}) {
            CliRun r = run({"sample", kind, "-n", "3", "--count", "2", "--format", format});
            ASSERT_EQ(r.code, 0) << kind << " " << format << " " << r.err;
            ASSERT_FALSE(r.out.empty());
        }
    }
    CliRun c = run({"sample", "clifford", "-n", "3", "--seed", "5", "--format", "circuit"});
    CliRun t = run({"sample", "clifford", "-n", "3", "--seed", "5", "--format", "tableau"});
    ASSERT_EQ(from_circuit(parse_circuit(c.out)), tableau_from_json(json::parse(t.out)));
}

TEST(cli, usage_errors) {
    ASSERT_EQ(run({}).code, 2);
    ASSERT_EQ(run({"sample", "unicorn", "-n", "2"}).code, 2);
    ASSERT_EQ(run({"sample", "clifford"}).code, 2);
    ASSERT_EQ(run({"sample", "clifford", "-n", "0"}).code, 2);
    ASSERT_EQ(run({"sample", "clifford", "-n", "2", "--format", "yaml"}).code, 2);
    ASSERT_EQ(run({"canon", "-i", "/nonexistent/file"}).code, 2);
    ASSERT_EQ(run({"--help"}).code, 0);
}

TEST(cli, canon_worked_example) {
    CliRun r = run({"canon", "--verify"}, read_fixture("worked_example.txt"));
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    ASSERT_EQ(j["canonical"]["h"], "10");
    ASSERT_EQ(j["canonical"]["gamma"]["rows"], json::array({"01", "10"}));
    ASSERT_EQ(j["canonical"]["gamma_prime"]["rows"], json::array({"01", "10"}));
    ASSERT_EQ(j["canonical"]["pauli_prime"], "+IZ");
    ASSERT_EQ(j["verified"], true);
    Tableau u = from_circuit(parse_circuit(read_fixture("worked_example.txt")));
    ASSERT_EQ(from_circuit(parse_circuit(j["circuit"].get<std::string>())), u);
}

TEST(cli, canon_identity_and_tableau_input) {
    CliRun r = run({"canon"}, "# qubits: 3\n");
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    ASSERT_EQ(j["canonical"]["h"], "000");
    Tableau t = from_circuit(parse_circuit("h 1\ncnot 1 2\np 2\n"));
    CliRun tj = run({"canon", "--verify"}, tableau_to_json(t).dump());
    ASSERT_EQ(tj.code, 0) << tj.err;
}

TEST(cli, canon_rejects_bad_input) {
    json broken = tableau_to_json(identity_tableau(2));
    broken["x_images"][0] = "+ZI";
    CliRun r = run({"canon"}, broken.dump());
    ASSERT_EQ(r.code, 1);
    ASSERT_NE(r.err.find("commutation"), std::string::npos);
    ASSERT_EQ(run({"canon"}, "{not json").code, 2);
    ASSERT_EQ(run({"canon"}, "frobnicate 1\n").code, 2);
}

TEST(cli, reduce_measurement) {
    CliRun empty = run({"reduce", "--mode", "measurement"}, "# qubits: 2\ncnot 1 2\np 1\n");
    ASSERT_EQ(empty.code, 0) << empty.err;
    ASSERT_EQ(parse_circuit(empty.out).gates.size(), 0);
    ASSERT_EQ(report_of(empty.out)["k"], 0);

    for (int seed = 0; seed < 20; seed++) {
        CliRun s = run({"sample", "clifford", "-n", "5", "--seed", std::to_string(seed), "--format", "circuit"});
        CliRun r = run({"reduce"}, s.out);
        ASSERT_EQ(r.code, 0) << r.err;
        json rep = report_of(r.out);
        ASSERT_LE(rep["bound"].get<int>(), 10);
        ASSERT_LE(rep["two_qubit_gates"].get<int>(), rep["bound"].get<int>());
        ASSERT_EQ(rep["hadamard_free"], true);
    }
    ASSERT_EQ(run({"reduce"}, "h 1\nbogus\n").code, 2);
    ASSERT_EQ(run({"reduce", "--mode", "sideways"}, "h 1\n").code, 2);
}

TEST(cli, reduce_nine_stage) {
    CliRun s = run({"sample", "clifford", "-n", "4", "--seed", "3", "--format", "circuit"});
    CliRun r = run({"reduce", "--mode", "nine-stage"}, s.out);
    ASSERT_EQ(r.code, 0) << r.err;
    json rep = report_of(r.out);
    ASSERT_EQ(rep["labels"], "-X-Z-P-CX-CZ-H-CZ-H-P-");
    ASSERT_EQ(rep["recomposes"], true);
    ASSERT_EQ(from_circuit(parse_circuit(r.out)), from_circuit(parse_circuit(s.out)));
}

TEST(cli, rewrite) {
    CliRun r = run({"rewrite"}, read_fixture("example1.txt"));
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_EQ(parse_circuit(r.out).two_qubit_count(), 7);
    ASSERT_EQ(report_of(r.out), json::parse(R"({"input_2q":8,"output_2q":7,"windows_applied":1})"));
    CliRun one = run({"rewrite"}, "cnot 1 2\n");
    ASSERT_EQ(one.code, 0);
    ASSERT_EQ(parse_circuit(one.out), parse_circuit("cnot 1 2\n"));
    ASSERT_EQ(run({"rewrite"}, "cnot 1 2\nh 2\n").code, 2);
}

TEST(cli, pmf_export) {
    CliRun r = run({"pmf", "qmallows", "-n", "3"});
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    ASSERT_EQ(j["entries"].size(), 48);
    ASSERT_EQ(j["denominator"], 2835);
    ASSERT_EQ(run({"pmf", "mallows", "-n", "4"}).code, 0);
    ASSERT_EQ(run({"pmf", "qmallows", "-n", "9"}).code, 2);
}
