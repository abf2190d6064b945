/*
   Copyright 2026 the taftnet authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "taftnet/cli.hpp"

using namespace taftnet;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify reproduces the N=3 example") {
    RunResult r = run_cli({"classify", "--n", "3", "--params", "1,1,1,2"});
    REQUIRE(r.code == cli::kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["command"] == "classify");
    CHECK(rep["version"] == cli::kVersion);
    CHECK(rep["oracle"] == "skipped");
    CHECK(rep["result"]["has_pivotal"] == false);
    CHECK(rep["result"]["twisted_pivotal_pairs"] == json::parse("[[2,0]]"));
    CHECK(rep["result"]["unimodular"] == true);
}

TEST_CASE("classify --oracle cross-checks the distinguished data") {
    RunResult r = run_cli({"classify", "--n", "8", "--params", "2,2,6,2", "--oracle"});
    REQUIRE(r.code == cli::kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["oracle"] == "checked-ok");
    CHECK(rep["result"]["oracle_grouplike_index"] == rep["result"]["grouplike_index"]);
}

TEST_CASE("JSON reports round-trip byte-identically") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"classify", "--n", "3", "--params", "1,1,1,2"},
             {"census", "--n", "5"},
             {"sphere", "--n", "9", "--params", "1,3,5,3", "--c", "6", "--d", "6"},
             {"lattice", "--max", "6"}}) {
        RunResult r = run_cli(args);
        REQUIRE(r.code == cli::kExitOk);
        const json rep = json::parse(r.out);
        CHECK(rep.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("census CSV has the pinned header") {
    RunResult r = run_cli({"census", "--n", "8", "--format", "csv"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.out ==
          "N,total,pivotal,twisted_pivotal,unimodular,spherical,twisted_spherical,"
          "nonunimod_twisted_spherical\n"
          "8,240,96,144,68,8,16,4\n");
}

TEST_CASE("census output is identical across worker counts") {
    RunResult one = run_cli({"census", "--n", "8", "--workers", "1"});
    RunResult eight = run_cli({"census", "--n", "8", "--workers", "8"});
    CHECK(one.code == cli::kExitOk);
    CHECK(one.out == eight.out);

    // TOOLKIT_WORKERS is honored when --workers is absent.
    setenv("TOOLKIT_WORKERS", "3", 1);
    RunResult env = run_cli({"census", "--n", "8"});
    unsetenv("TOOLKIT_WORKERS");
    CHECK(env.code == cli::kExitOk);
    CHECK(env.out == one.out);
}

TEST_CASE("sphere with oracle") {
    RunResult r =
        run_cli({"sphere", "--n", "9", "--params", "1,3,5,3", "--c", "6", "--d", "6", "--oracle"});
    REQUIRE(r.code == cli::kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["oracle"] == "checked-ok");
    CHECK(rep["result"]["dim_sphere"] == 1);
    CHECK(rep["result"]["oracle_dim_punctured"] == 1);
}

TEST_CASE("sphere rejects non-twisted-pivotal pairs as a validation error") {
    RunResult r = run_cli({"sphere", "--n", "3", "--taft", "--c", "1", "--d", "1"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("not twisted pivotal") != std::string::npos);
}

TEST_CASE("verify reports the convention mismatch with exit 3") {
    RunResult r = run_cli({"verify", "--n", "3", "--params", "1,1,1,2"});
    CHECK(r.code == cli::kExitOracleMismatch);
    const json rep = json::parse(r.out);
    CHECK(rep["oracle"] == "checked-mismatch");
    CHECK(rep["result"]["mismatches"] == 1);
    CHECK(rep["result"]["cases"][0]["congruence_pairs"] == json::parse("[[2,0]]"));
    CHECK(rep["result"]["cases"][0]["oracle_pairs"] == json::parse("[[0,2]]"));
}

TEST_CASE("verify passes on Taft algebras") {
    RunResult r = run_cli({"verify", "--n", "4", "--taft"});
    CHECK(r.code == cli::kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["oracle"] == "checked-ok");
}

TEST_CASE("lattice minima") {
    RunResult r = run_cli({"lattice", "--max", "10"});
    REQUIRE(r.code == cli::kExitOk);
    const json m = json::parse(r.out)["result"]["minima"];
    CHECK(m["twisted-pivotal-without-pivotal"] == 3);
    CHECK(m["twisted-spherical-without-spherical"] == 4);
    CHECK(m["quasi-without-twisted-pivotal"] == 5);
    CHECK(m["valid-without-quasi"] == 8);
    CHECK(m["unimodular-without-spherical"] == 3);
}

TEST_CASE("vectg command") {
    RunResult r =
        run_cli({"vectg", "--cayley", std::string(TAFTNET_TEST_DATA_DIR) + "/s3.cayley"});
    REQUIRE(r.code == cli::kExitOk);
    const json rep = json::parse(r.out);
    CHECK(rep["result"]["pair_count"] == 2);
    CHECK(rep["result"]["sphere_nonzero_count"] == 2);
}

TEST_CASE("usage and validation errors exit with code 2") {
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"bogus"}).code == cli::kExitUsage);
    CHECK(run_cli({"classify"}).code == cli::kExitUsage);                      // missing --n
    CHECK(run_cli({"classify", "--n", "3", "--params", "1,2"}).code == cli::kExitUsage);
    CHECK(run_cli({"classify", "--n", "9", "--params", "1,3,5,4"}).code == cli::kExitUsage);
    CHECK(run_cli({"census", "--n", "1"}).code == cli::kExitUsage);
    CHECK(run_cli({"vectg", "--cayley", "/nonexistent"}).code == cli::kExitUsage);
    RunResult r = run_cli({"classify", "--n", "9", "--params", "1,3,5,4"});
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("help exits cleanly") {
    RunResult r = run_cli({"--help"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("classify") != std::string::npos);
}
