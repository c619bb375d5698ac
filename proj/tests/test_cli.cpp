/*
 * Copyright 2026 The kummer-lcd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "kummer_lcd/ag_code.hpp"
#include "kummer_lcd/code_io.hpp"
#include "kummer_lcd/curve_spec.hpp"
#include "kummer_lcd/function_space.hpp"

using namespace kummer_lcd;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "kummer_lcd_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("curve info on the GF(16) spec") {
    auto r = run({"curve", "info", "--curve", "gf16-quintic"});
    REQUIRE(r.code == 0);
    auto j = r.report();
    CHECK(j["results"]["genus"] == 2);
    CHECK(j["results"]["points"] == 33);
    CHECK(j["results"]["deg_standard_D"] == 30);
    CHECK(j["results"]["family"] == "maximal-kummer");
}

TEST_CASE("built-in family names resolve") {
    auto r = run({"curve", "info", "--curve", "norm-trace-q2-r3"});
    REQUIRE(r.code == 0);
    CHECK(r.report()["results"]["genus"] == 9);
    CHECK(r.report()["results"]["r"] == 4);
    CHECK(cli::resolve_curve("hermitian-q4").rational_points().size() == 65);
}

TEST_CASE("non-special divisor on Hermitian q=3") {
    auto r = run({"nonspecial", "--degree", "g", "--curve", "hermitian-q3"});
    REQUIRE(r.code == 0);
    CHECK(r.report()["results"]["divisor"] == "1*P1+2*P2");
    auto v = run({"nonspecial", "--degree", "g-1", "--curve", "hermitian-q3", "--minus", "P3"});
    REQUIRE(v.code == 0);
    CHECK(v.report()["results"]["ell"] == 0);
}

TEST_CASE("reference example verification passes") {
    auto r = run({"verify", "paper-examples", "--which", "hermitian-q2"});
    CHECK(r.code == 0);
    auto j = r.report();
    REQUIRE(j["checks"].size() > 5);
    for (const auto& c : j["checks"]) {
        CAPTURE(c.dump());
        CHECK(c["pass"] == true);
    }
    auto p = run({"verify", "examples", "--which", "hermitian-q2", "--pretty"});
    CHECK(p.code == 0);
    CHECK(p.out.find("PASS") != std::string::npos);
    CHECK(p.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"rr", "basis", "--curve", "no-such-curve", "--divisor", "P1"}).code == 2);
    CHECK(run({"rr", "basis", "--curve", "hermitian-q2", "--divisor", "3*Q7"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"nonspecial", "--degree", "g+1", "--curve", "hermitian-q2"}).code == 2);
    auto pre = run({"code", "build", "--curve", "hermitian-q2", "--G", "9*Pinf"});
    CHECK(pre.code == 1);
    CHECK(pre.err.find("precondition failed") != std::string::npos);
    // A certificate that fails (gcd(G, H) = 0 is special) exits 1.
    auto fam = run({"code", "lcd-check", "--curve", "hermitian-q2", "--construction", "maxcur", "--G", "2*Pinf"});
    CHECK(fam.code == 1);
}

TEST_CASE("identical inputs give byte-identical output") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"curve", "info", "--curve", "hermitian-q3"},
             {"points", "--curve", "hermitian-q2"},
             {"code", "hull", "--curve", "gf16-quintic", "--G", "4*Pinf+12*P1-P2"},
             {"semigroup", "gaps", "--curve", "hermitian-q4"}}) {
        auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("printed objects re-parse") {
    auto C = cli::resolve_curve("hermitian-q2");
    auto pts = run({"points", "--curve", "hermitian-q2"}).report();
    std::size_t i = 0;
    for (const auto& s : pts["results"]["points"]) {
        CHECK(C.parse_place(s.get<std::string>()) == C.rational_points()[i]);
        ++i;
    }
    CHECK(i == 9);

    auto rr = run({"rr", "basis", "--curve", "hermitian-q2", "--divisor", "3*Pinf+P1"}).report();
    CHECK(C.parse_divisor(rr["results"]["divisor"].get<std::string>()) == C.parse_divisor("3*Pinf+P1"));
    auto basis = riemann_roch_basis(C, C.parse_divisor("3*Pinf+P1"));
    std::size_t k = 0;
    for (const auto& f : rr["results"]["functions"]) {
        CHECK(parse_function(C, f.get<std::string>()) == basis.functions[k]);
        ++k;
    }
    CHECK(k == 4);

    auto spec = run({"curve", "export", "--curve", "gf16-quintic"});
    REQUIRE(spec.code == 0);
    auto Q = curve_from_json(json::parse(spec.out));
    CHECK(Q.rational_points().size() == 33);
}

TEST_CASE("matrices round-trip through CSV and JSON") {
    const auto path = scratch("g.csv");
    auto r = run({"code", "build", "--curve", "hermitian-q2", "--G", "3*Pinf+P1", "--out", path.string()});
    REQUIRE(r.code == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    auto C = cli::resolve_curve("hermitian-q2");
    auto lm = matrix_from_csv(C, buf.str());
    auto code = build_code(C, C.standard_D(), C.parse_divisor("3*Pinf+P1"));
    CHECK(lm.matrix == code.generator);
    CHECK(lm.labels == code.column_labels);
    CHECK(matrix_to_csv(C, lm.matrix, lm.labels) == buf.str());

    auto j = r.report();
    CHECK(matrix_from_json(C.F(), j["results"]["generator"], code.n) == code.generator);
    CHECK(matrix_to_json(C.F(), code.generator) == j["results"]["generator"]);
    CHECK_THROWS_AS(matrix_from_csv(C, "\"(a,b)\"\n"), ParseError);
}

TEST_CASE("spec directory from the environment") {
    const auto dir = scratch("specs");
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "tiny.json");
        f << R"({"p": 2, "k": 2, "m": 3, "alphas": ["0", "1"], "label": "tiny"})";
    }
    ::setenv("KUMMER_LCD_SPEC_DIR", dir.c_str(), 1);
    auto r = run({"curve", "info", "--curve", "tiny"});
    ::unsetenv("KUMMER_LCD_SPEC_DIR");
    REQUIRE(r.code == 0);
    CHECK(r.report()["results"]["points"] == 9);
    {
        std::ofstream f(dir / "broken.json");
        f << "{ not json";
    }
    CHECK(run({"curve", "info", "--curve", (dir / "broken.json").string()}).code == 2);
}
