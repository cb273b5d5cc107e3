// Copyright 2026 The pipcodes Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pipcodes/cli.h"
#include "pipcodes/errors.h"
#include "pipcodes/io.h"
#include "pipcodes/twirl.h"

namespace pipcodes {
namespace {

namespace fs = std::filesystem;

const std::string kData = PIPCODES_DATA_DIR;

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("pipcodes_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string write(const std::string &name, const std::string &text) {
        std::string path = (dir_ / name).string();
        std::ofstream(path) << text;
        return path;
    }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }
    static std::string slurp(const std::string &path) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    fs::path dir_;
};

TEST(ParseChannel, PauliDocument) {
    AnyChannel ch = parse_channel(R"({"n":2,"type":"pauli","terms":[{"pauli":"II","prob":0.5},{"pauli":"ZZ","prob":0.5}]})");
    const auto *p = std::get_if<PauliChannel>(&ch);
    ASSERT_NE(p, nullptr);
    EXPECT_EQ(p->n, 2);
    EXPECT_EQ(p->prob(parse_pauli("ZZ")), 0.5);
    EXPECT_EQ(p->prob(parse_pauli("II")), 0.5);
}

TEST(ParseChannel, PhasedTermWarns) {
    std::vector<std::string> warnings;
    AnyChannel ch = parse_channel(R"({"n":1,"type":"pauli","terms":[{"pauli":"-X","prob":1}]})", &warnings);
    EXPECT_EQ(std::get<PauliChannel>(ch).prob(parse_pauli("X")), 1);
    EXPECT_EQ(warnings.size(), 1u);
}

TEST(ParseChannel, KrausFlatAndNested) {
    AnyChannel flat = parse_channel(R"({"type":"kraus","ops":[[[0,0],[1,0],[1,0],[0,0]]]})");
    AnyChannel nested = parse_channel(R"({"type":"kraus","ops":[[[[0,0],[1,0]],[[1,0],[0,0]]]]})");
    const auto &a = std::get<GeneralChannel>(flat);
    const auto &b = std::get<GeneralChannel>(nested);
    EXPECT_EQ(a.n, 1);
    EXPECT_EQ(a.kraus[0], b.kraus[0]);
    EXPECT_EQ(a.kraus[0](0, 1), Complex(1, 0));
}

TEST(ParseChannel, PipDocuments) {
    AnyChannel p = parse_channel(R"({"n":2,"type":"pip","rep":"prob","classes":[{"w":[0,0,0],"value":0.5},{"w":[0,0,2],"value":0.5}]})");
    const auto &pip = std::get<PIPChannel>(p);
    EXPECT_EQ(pip.value({0, 0, 2}), 0.5);
    EXPECT_EQ(pip.value({1, 0, 0}), 0);
    std::string eigen = R"({"n":1,"type":"pip","rep":"eigen","classes":[
        {"w":[0,0,0],"value":1},{"w":[0,0,1],"value":1.5},{"w":[0,1,0],"value":1},{"w":[1,0,0],"value":1}]})";
    EXPECT_THROW(parse_channel(eigen), ValidationError);
}

TEST(ParseChannel, Errors) {
    try {
        parse_channel("{\n  \"type\": \"pauli\",\n  oops\n}");
        FAIL() << "expected a parse error";
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_channel(R"({"type":"mystery"})"), ParseError);
    EXPECT_THROW(parse_channel(R"({"n":1,"type":"pauli","terms":[{"pauli":"I","prob":0.7},{"pauli":"Z","prob":0.4}]})"),
                 ValidationError);
    EXPECT_THROW(parse_channel(R"({"n":2,"type":"pauli","terms":[{"pauli":"Q","prob":1}]})"), ParseError);
    EXPECT_THROW(load_channel("/nonexistent/channel.json"), std::exception);
}

TEST(Json, ChannelRoundTrips) {
    PauliChannel p(2);
    p.add(parse_pauli("XY"), 0.25);
    p.add(parse_pauli("II"), 0.75);
    PauliChannel back = std::get<PauliChannel>(parse_channel(dump_json(to_json(p))));
    EXPECT_EQ(back.probs, p.probs);

    PIPChannel pip = permutation_twirl(p);
    PIPChannel pback = std::get<PIPChannel>(parse_channel(dump_json(to_json(pip))));
    EXPECT_EQ(pback.values, pip.values);
    PIPChannel e = to_eigen(pip);
    PIPChannel eback = std::get<PIPChannel>(parse_channel(dump_json(to_json(e))));
    EXPECT_EQ(eback.rep, Rep::kEigen);
    EXPECT_EQ(eback.values, e.values);

    GeneralChannel g = to_general(p);
    GeneralChannel gback = std::get<GeneralChannel>(parse_channel(dump_json(to_json(g))));
    ASSERT_EQ(gback.kraus.size(), g.kraus.size());
    for (size_t k = 0; k < g.kraus.size(); k++) {
        EXPECT_EQ(gback.kraus[k], g.kraus[k]);
    }
}

TEST(Json, CodeReportAndCircuitRoundTrip) {
    PIPChannel pip{2, Rep::kProb, std::vector<double>(10, 0.0)};
    pip.values[ClassIndex(2).index_of({1, 1, 0})] = 1;
    CodeReport r = find_codes(pip, SearchMode::kUcs);
    CodeReport back = code_report_from_json(json::parse(dump_json(to_json(r))));
    EXPECT_EQ(back.summary(), r.summary());
    EXPECT_EQ(back.mode, r.mode);
    EXPECT_EQ(back.channel.values, r.channel.values);
    ASSERT_EQ(back.fixed_paulis.size(), r.fixed_paulis.size());
    for (size_t i = 0; i < r.fixed_paulis.size(); i++) {
        EXPECT_EQ(back.fixed_paulis[i].op, r.fixed_paulis[i].op);
        EXPECT_EQ(back.fixed_paulis[i].sign, r.fixed_paulis[i].sign);
    }

    CliffordCircuit c{3, {}};
    c.append(Gate::cnot(2, 1));
    c.append(Gate::h(3));
    c.append(Gate::s(1));
    c.append(Gate::pauli('Y', 2));
    EXPECT_EQ(circuit_from_json(json::parse(dump_json(to_json(c)))), c);
    EXPECT_NE(dump_json(to_json(c)).find(R"({"g": "CNOT", "c": 2, "t": 1})"), std::string::npos);
}

TEST(Json, WeightClassText) {
    EXPECT_EQ(parse_weight_class("1,0,2"), (WeightClass{1, 0, 2}));
    EXPECT_THROW(parse_weight_class("1,0"), ParseError);
    EXPECT_THROW(parse_weight_class("a,b,c"), ParseError);
}

TEST(Cli, FindCodesExamples) {
    CliResult a = run({"find-codes", kData + "/example1.json", "--mode", "noiseless"});
    EXPECT_EQ(a.code, kExitOk) << a.err;
    EXPECT_NE(a.out.find("1 logical qubit; triplet XX/XY/IZ"), std::string::npos) << a.out;

    CliResult b = run({"find-codes", kData + "/example2.json", "--mode", "noiseless"});
    EXPECT_EQ(b.code, kExitOk);
    EXPECT_NE(b.out.find("0 logical qubits"), std::string::npos) << b.out;

    CliResult c = run({"find-codes", kData + "/example2.json", "--mode", "ucs"});
    EXPECT_EQ(c.code, kExitOk);
    EXPECT_NE(c.out.find("1 logical qubit"), std::string::npos) << c.out;
}

TEST(Cli, OmegaTable) {
    CliResult r = run({"omega", "--n", "1", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    json doc = json::parse(r.out);
    EXPECT_EQ(doc["n"], 1);
    EXPECT_EQ(doc["rows"].size(), 4u);
    Eigen::MatrixXd expect(4, 4);
    expect << 1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            EXPECT_EQ(doc["rows"][static_cast<size_t>(i)]["entries"][static_cast<size_t>(j)].get<double>(), expect(i, j));
        }
    }
    CliResult t = run({"omega", "--n", "2"});
    EXPECT_EQ(t.code, kExitOk);
    EXPECT_NE(t.out.find("(0,0,2)"), std::string::npos);
    EXPECT_EQ(run({"omega", "--n", "40"}).code, kExitCap);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"find-codes"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(TempDir, ExitCodesFromFiles) {
    EXPECT_EQ(run({"find-codes", write("bad.json", "{ not json")}).code, kExitUsage);
    std::string eig = write("eig.json", R"({"n":1,"type":"pip","rep":"eigen","classes":[
        {"w":[0,0,0],"value":1},{"w":[0,0,1],"value":1.5},{"w":[0,1,0],"value":1},{"w":[1,0,0],"value":1}]})");
    CliResult v = run({"find-codes", eig});
    EXPECT_EQ(v.code, kExitValidation);
    EXPECT_FALSE(v.err.empty());
    std::string big = write("big.json", R"({"n":6,"type":"kraus","ops":[)" + [] {
        std::string s = "[";
        for (int i = 0; i < 64 * 64; i++) {
            s += (i ? "," : "") + std::string(i % 65 == 0 ? "[1,0]" : "[0,0]");
        }
        return s + "]";
    }() + "]}");
    CliResult c = run({"twirl", big, "--group", "pauli"});
    EXPECT_EQ(c.code, kExitCap) << c.err;
    EXPECT_NE(c.err.find("cap"), std::string::npos);
}

TEST_F(TempDir, PipelineThroughFiles) {
    std::string report = path("report.json");
    ASSERT_EQ(run({"find-codes", kData + "/example2.json", "--mode", "ucs", "-o", report}).code, kExitOk);
    CliResult s = run({"synth", report});
    ASSERT_EQ(s.code, kExitOk) << s.err;
    json doc = json::parse(s.out);
    EXPECT_EQ(doc["recovery_pauli"], "XY");
    CliResult v = run({"verify", kData + "/example2.json", report});
    ASSERT_EQ(v.code, kExitOk) << v.err;
    json f = json::parse(v.out);
    EXPECT_NEAR(f["avg_gate_fidelity"].get<double>(), 1, 1e-9);
    EXPECT_EQ(f["theorem_violation"], false);

    std::string noiseless = path("noiseless.json");
    ASSERT_EQ(run({"find-codes", kData + "/example2.json", "-o", noiseless}).code, kExitOk);
    EXPECT_EQ(run({"verify", kData + "/example2.json", noiseless}).code, kExitValidation);
}

TEST_F(TempDir, TwirlThenFindMatchesInProcess) {
    std::string kraus = write("rot.json", R"({"type":"kraus","ops":[[
        [0.7071067811865476,0.7071067811865476],[0,0],[0,0],[0,0],
        [0,0],[0.7071067811865476,-0.7071067811865476],[0,0],[0,0],
        [0,0],[0,0],[0.7071067811865476,-0.7071067811865476],[0,0],
        [0,0],[0,0],[0,0],[0.7071067811865476,0.7071067811865476]]]})");
    std::string twirled = path("twirled.json");
    ASSERT_EQ(run({"twirl", kraus, "--group", "both", "-o", twirled}).code, kExitOk);
    CliResult from_file = run({"find-codes", twirled, "--json"});
    CliResult direct = run({"find-codes", kraus, "--json"});
    ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
    json a = json::parse(from_file.out);
    json b = json::parse(direct.out);
    EXPECT_EQ(a["summary"], b["summary"]);
    EXPECT_EQ(a["fixed_paulis"], b["fixed_paulis"]);
    EXPECT_EQ(a["summary"], "1 logical qubit; triplet XX/XY/IZ");

    AnyChannel loaded = load_channel(twirled);
    EXPECT_EQ(std::get<PIPChannel>(loaded).values, pip_twirl(std::get<GeneralChannel>(load_channel(kraus))).values);
}

TEST_F(TempDir, EstimateIsDeterministic) {
    std::vector<std::string> args = {"estimate", kData + "/example1.json", "--class", "1,0,0", "--samples", "2000", "--seed", "42"};
    CliResult a = run(args);
    CliResult b = run(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    json doc = json::parse(a.out);
    EXPECT_EQ(doc["seed"], 42);
    EXPECT_EQ(doc["samples"], 2000);
    std::string out = path("est.json");
    args.push_back("-o");
    args.push_back(out);
    ASSERT_EQ(run(args).code, kExitOk);
    EXPECT_EQ(slurp(out), a.out);
}

}  // namespace
}  // namespace pipcodes
