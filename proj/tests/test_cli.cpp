/*
 * Copyright 2026 The Frobius Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string &args) {
    std::string cmd = std::string(FROBIUS_CLI_PATH) + " " + args + " 2>&1";
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_CASE("normalize fuses spiders") {
    auto r = run_cli("normalize 'comp(g(1,1,1/3), g(1,1,1/3))'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "g(1,1,2/3)\n");
}

TEST_CASE("equiv reports exact equality with exit 0") {
    auto r = run_cli("equiv --model 'Z2@cyclo(8)/unitary' 'comp(g(1,1,1/2),g(1,1,1/2))' 'g(1,1,0)'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "EQUAL exact\n");
}

TEST_CASE("equiv reports the scalar gap with exit 1") {
    std::string bone = "comp(r(0,1,0),g(1,0,0))";
    auto r = run_cli("equiv --model 'Z2@cyclo(8)/unitary' --mode scalar 'tens(" + bone + "," + bone + ")' '" +
                     bone + "'");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("UNEQUAL scalar") == 0);
}

TEST_CASE("check-rules certifies the IF theory") {
    auto r = run_cli("check-rules --model 'Z2@cyclo(8)/unitary' --ruleset IF");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("rule hopf-gr exact") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("characters line counts") {
    auto real4 = run_cli("characters --group Z4 --field reals");
    CHECK(real4.exit_code == 0);
    CHECK(std::count(real4.output.begin(), real4.output.end(), '\n') == 2);
    auto f5 = run_cli("characters --group Z4 --field F5");
    CHECK(std::count(f5.output.begin(), f5.output.end(), '\n') == 4);
}

TEST_CASE("eval prints a matrix and graph format round trips") {
    auto r = run_cli("eval --model 'Z2@rationals/integral' 'int(0)'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[[1, 1],") != std::string::npos);
    auto g = run_cli("normalize --format graph 'comp(g(1,2,0),r(2,1,0))'");
    CHECK(g.exit_code == 0);
    CHECK(g.output.find("frobius-graph v1") == 0);
    auto dot = run_cli("normalize --dot swap");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("graph") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run_cli("eval 'g(1,1,0)'").exit_code == 2);                              // missing model
    CHECK(run_cli("normalize 'g(1,'").exit_code == 2);                             // parse error
    CHECK(run_cli("equiv --model 'Z2@rationals/integral' id 'g(1,2,0)'").exit_code == 2); // arity
    CHECK(run_cli("frobnicate").exit_code != 0);                                   // unknown subcommand
}

TEST_CASE("yang-baxter and enough-setlike exit codes") {
    CHECK(run_cli("yang-baxter --model 'Z2@cyclo(8)/unitary'").exit_code == 0);
    CHECK(run_cli("enough-setlike --model 'Z3@cyclo(12)/unitary'").exit_code == 0);
    CHECK(run_cli("enough-setlike --model 'Z3@rationals/integral'").exit_code == 1);
}
