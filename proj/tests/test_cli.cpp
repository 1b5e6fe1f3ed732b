/*
   Copyright 2026 The lrsmash Authors

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

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>

#include "lrsmash/cli.hpp"
#include "test_util.hpp"

using namespace lrsmash;
using lrsmash::test::fixture_path;
using lrsmash::test::read_file;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& tag) {
    return std::string(::testing::TempDir()) + "lrsmash_" + tag + ".tmp";
}

}  // namespace

TEST(Cli, CheckBialgebraPasses) {
    RunResult r = run({"check-bialgebra", fixture_path("kc2.lrs")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
}

TEST(Cli, AdmissiblePassesOnSweedler) {
    RunResult r = run({"admissible", fixture_path("sweedler.lrs")});
    EXPECT_EQ(r.code, 0);
}

TEST(Cli, BrokenRhoNamesConditionFourteenWithWitness) {
    RunResult r = run({"admissible", fixture_path("sweedler-broken-rho.lrs")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("[FAIL] 1.14"), std::string::npos);
    EXPECT_NE(r.out.find("(x,x)"), std::string::npos);
}

TEST(Cli, BiproductEmitsTheRegressionFixtureByteExactly) {
    std::string out_path = temp_file("emit");
    RunResult r = run({"biproduct", fixture_path("sweedler.lrs"), "--emit", out_path});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(read_file(out_path), read_file(fixture_path("sweedler-h4.lrs")));
    std::remove(out_path.c_str());
}

TEST(Cli, MachineReportIsWrittenAndDeterministic) {
    std::string p1 = temp_file("rep1"), p2 = temp_file("rep2");
    RunResult r1 = run({"admissible", fixture_path("sweedler.lrs"), "--report", p1});
    RunResult r2 = run({"admissible", fixture_path("sweedler.lrs"), "--report", p2});
    EXPECT_EQ(r1.code, 0);
    EXPECT_EQ(r1.out, r2.out);
    EXPECT_EQ(read_file(p1), read_file(p2));
    std::string rep = read_file(p1);
    EXPECT_NE(rep.find("lrsmash-report 1"), std::string::npos);
    EXPECT_NE(rep.find("check 1.14 pass"), std::string::npos);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
    setenv("LRSMASH_THREADS", "1", 1);
    RunResult serial = run({"admissible", fixture_path("sweedler-broken-rho.lrs")});
    setenv("LRSMASH_THREADS", "4", 1);
    RunResult parallel = run({"admissible", fixture_path("sweedler-broken-rho.lrs")});
    unsetenv("LRSMASH_THREADS");
    EXPECT_EQ(serial.out, parallel.out);
    EXPECT_EQ(serial.code, parallel.code);
}

TEST(Cli, RadfordAndZhangCommands) {
    EXPECT_EQ(run({"radford", fixture_path("sweedler.lrs")}).code, 0);
    EXPECT_EQ(run({"zhang", fixture_path("zhang-positive.lrs")}).code, 0);
    RunResult zn = run({"zhang", fixture_path("zhang-negative.lrs")});
    EXPECT_EQ(zn.code, 1);
    EXPECT_NE(zn.out.find("[FAIL] lrs1"), std::string::npos);
    EXPECT_NE(zn.out.find("(X,x)"), std::string::npos);
}

TEST(Cli, DoubleBiproductAndPhi) {
    EXPECT_EQ(run({"double-biproduct", fixture_path("double8.lrs")}).code, 0);
    EXPECT_EQ(run({"phi-verify", fixture_path("double8.lrs")}).code, 0);
    RunResult broken = run({"double-biproduct", fixture_path("double8-broken-pairing.lrs")});
    EXPECT_EQ(broken.code, 1);
    EXPECT_NE(broken.out.find("[FAIL] pairing"), std::string::npos);
}

TEST(Cli, BraidingVerify) {
    RunResult r = run({"braiding-verify", fixture_path("lr-objects.lrs")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("hexagon1(bl,br,reg)"), std::string::npos);
}

TEST(Cli, AntipodeCommand) {
    RunResult kc2 = run({"antipode", fixture_path("kc2.lrs")});
    EXPECT_EQ(kc2.code, 0);
    RunResult monoid = run({"antipode", fixture_path("monoid.lrs")});
    EXPECT_EQ(monoid.code, 1);
    EXPECT_NE(monoid.out.find("[FAIL] antipode.exists"), std::string::npos);
    RunResult h4 = run({"antipode", fixture_path("h4.lrs")});
    EXPECT_EQ(h4.code, 0);
    EXPECT_NE(h4.out.find("S(X) = -(GX)"), std::string::npos);
    EXPECT_NE(h4.out.find("Sinv(X) = (GX)"), std::string::npos);
}

TEST(Cli, CheckLrObjectAndMorphism) {
    EXPECT_EQ(run({"check-lr-object", fixture_path("lr-objects.lrs"), "bl"}).code, 0);
    EXPECT_EQ(run({"check-morphism", fixture_path("lr-objects.lrs"), "reg_average"}).code, 0);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate", fixture_path("kc2.lrs")}).code, 2);
    EXPECT_EQ(run({"check-bialgebra"}).code, 2);
    EXPECT_EQ(run({"check-bialgebra", fixture_path("no-such-file.lrs")}).code, 2);
    // several candidate bundles would be ambiguous; unknown bundle is an error
    EXPECT_EQ(run({"check-bialgebra", fixture_path("kc2.lrs"), "nope"}).code, 2);
}

TEST(Cli, FieldOverride) {
    EXPECT_EQ(run({"admissible", fixture_path("sweedler.lrs"), "--field", "F5"}).code, 0);
    RunResult bad = run({"admissible", fixture_path("sweedler.lrs"), "--field", "F4"});
    EXPECT_EQ(bad.code, 2);  // not prime
    RunResult weird = run({"admissible", fixture_path("sweedler.lrs"), "--field", "xyz"});
    EXPECT_EQ(weird.code, 2);
}

TEST(Cli, ForceAssemblesUnverifiedBiproduct) {
    RunResult forced =
        run({"biproduct", fixture_path("sweedler-broken-rho.lrs"), "--force"});
    EXPECT_EQ(forced.code, 1);
    EXPECT_NE(forced.out.find("suite."), std::string::npos);
    RunResult unforced = run({"biproduct", fixture_path("sweedler-broken-rho.lrs")});
    EXPECT_EQ(unforced.code, 1);
    EXPECT_EQ(unforced.out.find("suite."), std::string::npos);
}
