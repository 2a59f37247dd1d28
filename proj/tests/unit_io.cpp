#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "support.hpp"

using namespace testsupport;

TEST_CASE("expression parsing goldens") {
    AlgebraSpec A = make_usl2();
    CHECK(render_polynomial(p(A, "1/2*z^2 + 2*x*y - z"), A.names) == "1/2*z^2 + 2*x*y - z");
    CHECK(render_polynomial(p(A, "y*x"), A.names) == "x*y - z");
    CHECK(render_polynomial(p(A, "0"), A.names) == "0");
    CHECK(render_polynomial(p(A, "(x + y)^2 - x^2 - y^2"), A.names) == "2*x*y - z");
    CHECK(render_polynomial(p(A, "-3/6*z"), A.names) == "-1/2*z");
    CHECK(render_polynomial(p(A, "2 - 2"), A.names) == "0");
}

TEST_CASE("parse errors carry positions") {
    AlgebraSpec A = make_usl2();
    try {
        parse_expression(A, "x + q*y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unknown variable 'q'") != std::string::npos);
        CHECK(e.line == 1);
        CHECK(e.col == 5);
    }
    CHECK_THROWS_WITH(parse_expression(A, "x^-1"),
                      Catch::Matchers::ContainsSubstring("exponent must be a non-negative"));
    CHECK_THROWS_WITH(parse_expression(A, "1/0"),
                      Catch::Matchers::ContainsSubstring("zero denominator"));
    CHECK_THROWS_WITH(parse_expression(A, "x y"),
                      Catch::Matchers::ContainsSubstring("unexpected trailing input"));
    CHECK_THROWS_WITH(parse_expression(A, "(x"), Catch::Matchers::ContainsSubstring("expected ')'"));
    CHECK_THROWS_WITH(parse_expression(A, ""),
                      Catch::Matchers::ContainsSubstring("unexpected end of expression"));
    try {
        parse_expression(A, "x +\n  q", 7, 1);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 8);
        CHECK(e.col == 3);
    }
}

TEST_CASE("rendering round trips through the parser") {
    AlgebraSpec A = make_usl2();
    std::mt19937_64 rng(0x10a5u);
    for (int i = 0; i < 120; ++i) {
        Polynomial f = rand_poly(rng, A, 4, 3, true);
        std::string text = render_polynomial(f, A.names);
        Polynomial g = parse_expression(A, text);
        CAPTURE(text);
        CHECK(f == g);
        CHECK(render_polynomial(g, A.names) == text);
    }
}

static const char* kProblemText = R"(# three generator example
[algebra]
vars = x, y, z
weights = 1, 2, 2
rel y*x = x*y - z
rel z*x = x*z + 2*x
rel z*y = y*z - 2*y

[bimodule M]
ambient = 2
centralizing = true
gen (1/2*z^2 + 2*x*y - z, 1)
gen (1, 1/2*z^2 + 2*x*y - z)

[module N]
ambient = 2
gen (y^3, x)
gen (y, x*z)
gen (0, x*y^2*z - 2*y*z^2 + 2*y*z - x)
)";

TEST_CASE("problem files populate the algebra and blocks") {
    ProblemFile pf = parse_problem_text(kProblemText);
    const AlgebraSpec& A = pf.algebra;
    CHECK(order_header(A, pf.module_order) ==
          "# algebra x, y, z | weights 1, 2, 2 | precedence x > y > z | module order TOP");
    CHECK(render_polynomial(multiply(A, p(A, "y"), p(A, "x")), A.names) == "x*y - z");

    const BimoduleBlock& M = pf.bimodule("M");
    CHECK(M.ambient == 2);
    CHECK(M.centralizing);
    REQUIRE(M.vectors.size() == 2);
    CHECK(M.vectors[0] == vec(A, {"1/2*z^2 + 2*x*y - z", "1"}));

    const ModuleBlock& N = pf.module("N");
    CHECK(N.ambient == 2);
    CHECK(N.generator_form);
    REQUIRE(N.vectors.size() == 3);
    CHECK(N.vectors[2] == vec(A, {"0", "x*y^2*z - 2*y*z^2 + 2*y*z - x"}));

    CHECK_THROWS_WITH(pf.bimodule("Q"), Catch::Matchers::ContainsSubstring("no bimodule named"));
    CHECK_THROWS_WITH(pf.module("Q"), Catch::Matchers::ContainsSubstring("no module named"));
}

TEST_CASE("algebra block defaults") {
    ProblemFile pf = parse_problem_text("[algebra]\nvars = a, b\nrel b*a = 2*a*b\n");
    CHECK(order_header(pf.algebra, pf.module_order) ==
          "# algebra a, b | weights 1, 1 | precedence a > b | module order TOP");
    ProblemFile pot = parse_problem_text(
        "[algebra]\nvars = x, y\nprecedence = y, x\nmodule_order = POT\n");
    CHECK(order_header(pot.algebra, pot.module_order) ==
          "# algebra x, y | weights 1, 1 | precedence y > x | module order POT");
    // undeclared pairs default to commutative
    const AlgebraSpec& A = pot.algebra;
    CHECK(multiply(A, p(A, "y"), p(A, "x")) == p(A, "x*y"));
}

TEST_CASE("relation lines may reference each other out of order") {
    // the z*x rule is only usable once y*x is known; a second pass settles it
    ProblemFile pf = parse_problem_text(
        "[algebra]\n"
        "vars = x, y, z\n"
        "rel z*x = x*z + y*x - x*y\n"
        "rel y*x = x*y + 1\n");
    const AlgebraSpec& A = pf.algebra;
    CHECK(multiply(A, p(A, "z"), p(A, "x")) == p(A, "x*z + 1"));
}

TEST_CASE("circular relation definitions are rejected") {
    CHECK_THROWS_WITH(parse_problem_text("[algebra]\n"
                                         "vars = x, y, z\n"
                                         "rel z*x = x*z + z*y - y*z\n"
                                         "rel z*y = y*z + z*x - x*z\n"),
                      Catch::Matchers::ContainsSubstring("circular relation definitions"));
}

TEST_CASE("module blocks take quotient form relations") {
    ProblemFile pf = parse_problem_text(
        "[algebra]\nvars = x, y\n[module P]\nambient = 1\nrel (x)\nrel (y)\n");
    const ModuleBlock& P = pf.module("P");
    CHECK_FALSE(P.generator_form);
    CHECK(P.vectors.size() == 2);
}

TEST_CASE("problem file shape errors") {
    using Catch::Matchers::ContainsSubstring;
    CHECK_THROWS_WITH(parse_problem_text("vars = x\n"),
                      ContainsSubstring("content outside any block"));
    CHECK_THROWS_WITH(parse_problem_text("[module P]\nambient = 1\ngen (x)\n"),
                      ContainsSubstring("[algebra] block must come first"));
    CHECK_THROWS_WITH(parse_problem_text(""), ContainsSubstring("missing [algebra] block"));
    CHECK_THROWS_WITH(parse_problem_text("[algebra]\nweights = 1\nvars = x\n"),
                      ContainsSubstring("vars must be declared first"));
    CHECK_THROWS_WITH(
        parse_problem_text("[algebra]\nvars = x\n[algebra]\nvars = y\n"),
        ContainsSubstring("duplicate [algebra] block"));
    CHECK_THROWS_WITH(
        parse_problem_text("[algebra]\nvars = x, y\nrel x*y = y*x\n"),
        ContainsSubstring("out of order"));
    CHECK_THROWS_WITH(
        parse_problem_text("[algebra]\nvars = x, y\nrel y*x = x*y\nrel y*x = 2*x*y\n"),
        ContainsSubstring("duplicate relation"));
    CHECK_THROWS_WITH(
        parse_problem_text("[algebra]\nvars = x, y\nweights = 1\n"),
        ContainsSubstring("expected 2 weights"));
    CHECK_THROWS_WITH(
        parse_problem_text("[algebra]\nvars = x, y\nprecedence = x\n"),
        ContainsSubstring("precedence must list every variable"));
    CHECK_THROWS_WITH(parse_problem_text("[algebra]\nvars = x\n[module P]\ngen (x)\n"),
                      ContainsSubstring("ambient must be declared before generators"));
    CHECK_THROWS_WITH(
        parse_problem_text("[algebra]\nvars = x\n[module P]\nambient = 2\ngen (x)\n"),
        ContainsSubstring("tuple has 1 entries, ambient is 2"));
    CHECK_THROWS_WITH(
        parse_problem_text("[algebra]\nvars = x\n[module P]\nambient = 1\ngen (x)\nrel (x)\n"),
        ContainsSubstring("mixes gen and rel"));
    CHECK_THROWS_WITH(parse_problem_text("[algebra]\nvars = x\n[module P]\nambient = 1\n"),
                      ContainsSubstring("has no gen or rel lines"));
    CHECK_THROWS_WITH(parse_problem_text("[algebra]\nvars = x\n[bimodule L]\nambient = 1\n"),
                      ContainsSubstring("has no generators"));
    CHECK_THROWS_WITH(
        parse_problem_text("[algebra]\nvars = x, y\nrel y*x = x*y + x^2\n"),
        ContainsSubstring("tail term not below"));
    CHECK_THROWS_WITH(
        parse_problem_text("[algebra]\nvars = x, y\nrel y*x = x + y\n"),
        ContainsSubstring("lacks the x*y term"));
    try {
        parse_problem_text("[algebra]\nvars = x, y\nrel y*x = x*y + q\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unknown variable 'q'") != std::string::npos);
        CHECK(e.line == 3);
    }
    CHECK_THROWS_WITH(load_problem("/nonexistent/file.pbw"),
                      ContainsSubstring("cannot open file"));
}

// ---- CLI process tests -----------------------------------------------------

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int serial = 0;
    std::filesystem::path dir = std::filesystem::temp_directory_path();
    std::filesystem::path outp = dir / ("pbwtor_out_" + std::to_string(++serial) + ".txt");
    std::filesystem::path errp = dir / ("pbwtor_err_" + std::to_string(serial) + ".txt");
    std::string cmd = std::string("\"") + PBWTOR_CLI_PATH + "\" " + args + " > " +
                      outp.string() + " 2> " + errp.string();
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(outp);
    r.err = slurp(errp);
    std::filesystem::remove(outp);
    std::filesystem::remove(errp);
    return r;
}

std::string sample(const char* name) {
    return std::string("\"") + PBWTOR_SAMPLES_DIR + "/" + name + "\"";
}

std::filesystem::path write_temp_problem(const std::string& text) {
    static int serial = 0;
    std::filesystem::path p =
        std::filesystem::temp_directory_path() / ("pbwtor_in_" + std::to_string(++serial) + ".pbw");
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("cli reports the algebra and blocks") {
    RunResult r = run_cli("check-algebra " + sample("usl2_tor.pbw"));
    CHECK(r.code == 0);
    CHECK(r.out.find("algebra ok: 3 variables, 3 relations") != std::string::npos);
    CHECK(r.out.find("bimodule M: ambient 2, 2 generators, centralizing") != std::string::npos);
    CHECK(r.out.find("module N: ambient 2, 3 generators, submodule form") != std::string::npos);
}

TEST_CASE("cli multiplies in written order") {
    RunResult r = run_cli("mul " + sample("usl2_tor.pbw") + " \"y*x\" \"1\"");
    CHECK(r.code == 0);
    CHECK(r.out == "x*y - z\n");
}

TEST_CASE("cli reports Tor_1 vanishing") {
    RunResult r =
        run_cli("tor " + sample("usl2_tor.pbw") + " --bimodule M --module N -k 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("Tor_1(M,N) = 0") != std::string::npos);
}

TEST_CASE("cli output is byte stable across runs") {
    std::string args = "tor " + sample("usl2_tor.pbw") + " --bimodule M --module N -k 0 --dim";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
}

TEST_CASE("cli exit codes distinguish failure phases") {
    // parse failure in an expression argument
    RunResult parse = run_cli("mul " + sample("usl2_tor.pbw") + " \"q\" \"x\"");
    CHECK(parse.code == 1);
    CHECK(parse.err.find("unknown variable 'q'") != std::string::npos);

    // validation failure: relations that do not extend to an associative product
    RunResult assoc = run_cli("check-algebra " + sample("bad_assoc.pbw"));
    CHECK(assoc.code == 2);
    CHECK(assoc.err.find("(z, y, x)") != std::string::npos);

    // lookup failure
    RunResult missing = run_cli("gb " + sample("usl2_tor.pbw") + " --module Zilch");
    CHECK(missing.code == 2);
    CHECK(missing.err.find("no module named 'Zilch'") != std::string::npos);

    // computation contract failure: a centralizing claim that is false
    std::filesystem::path bad = write_temp_problem(
        "[algebra]\n"
        "vars = x, y\n"
        "rel y*x = x*y + 1\n"
        "[bimodule J]\n"
        "ambient = 1\n"
        "centralizing = true\n"
        "gen (x)\n");
    RunResult central = run_cli("tsgb \"" + bad.string() + "\" --bimodule J");
    CHECK(central.code == 3);
    CHECK(central.err.find("centralizing") != std::string::npos);
    std::filesystem::remove(bad);

    // missing input file
    RunResult nofile = run_cli("check-algebra /nonexistent/problem.pbw");
    CHECK(nofile.code == 2);
}
