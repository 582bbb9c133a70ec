/*
   Copyright 2026 The hkfun authors

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

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <regex>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(HKFUN_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string strip_timing(std::string s) {
    return std::regex_replace(s, std::regex("\"timing_ms\": [0-9]+"), "\"timing_ms\": X");
}

}  // namespace

TEST_CASE("compute: elliptic curve profile") {
    RunResult r = run("compute --prime 5 --vars x,y,z --poly \"y^2*z - x^3 - x*z^2\" --q 5,25");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    REQUIRE(rep["rows"].size() == 2);
    for (const char* key : {"q", "hk", "a", "iota", "m", "L", "maximal_rank"})
        CHECK(rep["rows"][0].contains(key));
    CHECK(rep["rows"][0]["hk"] == 55);
    CHECK(rep["rows"][1]["hk"] == 1405);
    CHECK(rep["rows"][0]["maximal_rank"] == true);
}

TEST_CASE("compute: cayley at small q") {
    RunResult r =
        run("compute --prime 3 --vars x,y,z,w --poly \"x*y*z + x*y*w + x*z*w + y*z*w\" --q 1,2,3");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["rows"][0]["hk"] == 1);
    CHECK(rep["rows"][1]["hk"] == 14);
    CHECK(rep["rows"][2]["hk"] == 51);
}

TEST_CASE("exit codes") {
    CHECK(run("compute --prime 5 --vars x,y,z --poly \"x^\" --q 3").exit_code == 2);
    CHECK(run("compute --prime 5 --vars x,y,z --poly \"x^3\" --badflag").exit_code == 2);
    CHECK(run("compute --prime 6 --vars x,y,z --poly \"x^3\" --q 3").exit_code == 3);
    CHECK(run("compute --prime 5 --vars x,y,z --poly \"x^2 + y^3\" --q 3").exit_code == 3);
    CHECK(run("verify --family elliptic_odd --prime 2 --qmax 4").exit_code == 3);
    CHECK(run("verify --family cayley --prime 5 --qmax 8").exit_code == 0);
    CHECK(run("hankel --kmax 3 --prime 2").exit_code == 3);  // 2 is not a unit
}

TEST_CASE("verify emits per-row formula and match flags") {
    RunResult r = run("verify --family nodal --prime 7 --qmax 49");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    REQUIRE(rep["rows"].size() == 2);
    CHECK(rep["rows"][0]["q"] == 7);
    CHECK(rep["rows"][1]["q"] == 49);
    for (const auto& row : rep["rows"]) {
        CHECK(row["match"] == true);
        CHECK(row["hk"] == row["formula"]);
    }
    CHECK(rep["all_match"] == true);
}

TEST_CASE("beta table") {
    RunResult r = run("beta --nmax 6");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["rows"][2]["beta"] == "3/4");
    CHECK(rep["rows"][4]["beta"] == "115/192");
    CHECK(rep["rows"][5]["beta"] == "11/20");
}

TEST_CASE("bound pair") {
    RunResult r = run("bound --n 2 --d 3 --q 4");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["rows"][0]["m"] == 5);
    CHECK(rep["rows"][0]["L"] == "34");
}

TEST_CASE("hankel identity table") {
    RunResult r = run("hankel --kmax 4 --prime 7");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    for (const auto& row : rep["rows"]) {
        CHECK(row["geronimus"] == true);
        CHECK(row["corollary"] == true);
        CHECK(row["geronimus_mod"] == true);
        CHECK(row["corollary_mod"] == true);
    }
}

TEST_CASE("props subcommand is seed-reproducible") {
    RunResult a = run("props --seed 11 --instances 4");
    RunResult b = run("props --seed 11 --instances 4");
    REQUIRE(a.exit_code == 0);
    CHECK(strip_timing(a.out) == strip_timing(b.out));
}

TEST_CASE("identical invocations are byte-identical apart from timing") {
    std::string cmd = "compute --prime 5 --vars x,y,z --poly \"y^2*z - x^3 - x*z^2\" --q 3,5";
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    CHECK(strip_timing(a.out) == strip_timing(b.out));
}

TEST_CASE("csv output") {
    RunResult r = run("compute --prime 5 --vars x,y,z --poly \"x^2 - y*z\" --q 2 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("q,hk,a,iota,m,L,maximal_rank\n", 0) == 0);
    CHECK(r.out.find("2,6,2,1,2,6,true") != std::string::npos);
}
