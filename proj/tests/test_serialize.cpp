#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmethod/serialize.hpp"
#include "fmethod/verify.hpp"

using namespace fmethod;

namespace {

SingularVector solve_one(const FSetting& s, uint32_t delta) {
    SolveOptions opt;
    opt.delta = delta;
    SolveOutcome out = solve_singular_vectors(s, opt);
    REQUIRE(out.solutions.size() == 1);
    return out.solutions[0];
}

} // namespace

TEST_CASE("variable names map to LaTeX with subscripts and Greek escapes") {
    CHECK(latex_name("x") == "x");
    CHECK(latex_name("x12") == "x_{12}");
    CHECK(latex_name("zeta1") == "\\zeta_{1}");
    CHECK(latex_name("lambda") == "\\lambda");
    CHECK(latex_name("k1") == "k_{1}");
}

TEST_CASE("rational LaTeX: integers plain, fractions with frac, sign outside") {
    CHECK(latex_rational(BigRat(7)) == "7");
    CHECK(latex_rational(BigRat(-7)) == "-7");
    CHECK(latex_rational(BigRat(3, 4)) == "\\frac{3}{4}");
    CHECK(latex_rational(BigRat(-3, 4)) == "-\\frac{3}{4}");
}

TEST_CASE("polynomial LaTeX joins signed pieces") {
    std::vector<std::string> vars = {"k1", "k2"};
    MPoly p = MPoly::variable(vars, 0) - MPoly::variable(vars, 1);
    CHECK(latex_mpoly(p) == "k_{1} - k_{2}");
    MPoly q = -MPoly::variable(vars, 0);
    q.set_coeff({0, 2}, BigRat(1, 2));
    CHECK(latex_mpoly(q) == "\\frac{1}{2} k_{2}^{2} - k_{1}");
}

TEST_CASE("first-order solution renders identically in all three formats") {
    FSetting s = builtin_setting("rankin_cohen");
    SolveOptions opt;
    opt.delta = 1;
    SolveOutcome out = solve_singular_vectors(s, opt);

    SUBCASE("text") {
        std::string text = text_outcome(s, out);
        CHECK(text.find("setting: rankin_cohen") != std::string::npos);
        CHECK(text.find("psi = -k2*zeta1 + k1*zeta2") != std::string::npos);
        CHECK(text.find("nu: h -> k1 + k2 + 2") != std::string::npos);
    }
    SUBCASE("latex") {
        std::string tex = latex_outcome(s, out);
        CHECK(tex.find("\\[ \\psi_{1} = -k_{2} \\zeta_{1} + k_{1} \\zeta_{2} \\]") !=
              std::string::npos);
    }
    SUBCASE("json") {
        Json j = json_outcome(s, opt, out);
        CHECK(j["schema_version"] == 1);
        CHECK(j["setting"] == "rankin_cohen");
        CHECK(j["params"] == Json::array({"k1", "k2"}));
        CHECK(j["search"]["delta"] == 1);
        REQUIRE(j["solutions"].size() == 1);
        const Json& sol = j["solutions"][0];
        CHECK(sol["degree"] == 1);
        // Terms in ascending grlex order with exact coefficient strings.
        REQUIRE(sol["psi"]["terms"].size() == 2);
        CHECK(sol["psi"]["terms"][0]["exp"] == Json::array({0, 1}));
        CHECK(sol["psi"]["terms"][0]["coeff"] == "k1");
        CHECK(sol["psi"]["terms"][1]["exp"] == Json::array({1, 0}));
        CHECK(sol["psi"]["terms"][1]["coeff"] == "-k2");
        CHECK(sol["nu"]["values"]["h"] == "k1 + k2 + 2");
    }
}

TEST_CASE("JSON artifacts are byte-stable across repeated emission") {
    FSetting s = builtin_setting("juhl", 3);
    SolveOptions opt;
    opt.degree_max = 4;
    SolveOutcome out1 = solve_singular_vectors(s, opt);
    SolveOutcome out2 = solve_singular_vectors(s, opt);
    std::string a = dump_json(json_outcome(s, opt, out1));
    std::string b = dump_json(json_outcome(s, opt, out2));
    CHECK(a == b);
    REQUIRE(!a.empty());
    CHECK(a.back() == '\n');
    // Sweep mode records a null delta and the search window.
    Json j = Json::parse(a);
    CHECK(j["search"]["delta"].is_null());
    CHECK(j["search"]["degree_max"] == 4);
}

TEST_CASE("operator serialization carries restriction and weight") {
    FSetting s = builtin_setting("rankin_cohen");
    SingularVector sv = solve_one(s, 1);
    DiffOperator d = emit_operator(s, sv);

    std::string text = text_operator(d);
    CHECK(text.find("D = -k2*dx + k1*dy") != std::string::npos);
    // Both big coordinates restrict to the diagonal coordinate, itself
    // named x on the subalgebra side.
    CHECK(text.find("restriction: x -> x, y -> x") != std::string::npos);

    Json j = json_operator(d);
    CHECK(j["degree"] == 1);
    REQUIRE(j["operator"]["terms"].size() == 2);
    CHECK(j["operator"]["terms"][0]["d"] == Json::array({0, 1}));
    CHECK(j["operator"]["terms"][0]["coeff"] == "k1");
    CHECK(j["operator"]["terms"][1]["d"] == Json::array({1, 0}));
    CHECK(j["operator"]["terms"][1]["coeff"] == "-k2");
    CHECK(j["restriction"] == Json::array({"x", "x"}));
    CHECK(j["target_vars"] == Json::array({"x"}));
    CHECK(j["nu"]["values"]["h"] == "k1 + k2 + 2");

    std::string tex = latex_operator(d);
    CHECK(tex.find("D = -k_{2} \\partial_{x} + k_{1} \\partial_{y}") != std::string::npos);
}

TEST_CASE("equivariance reports serialize both verdicts") {
    EquivarianceReport ok;
    ok.passed = true;
    ok.checks = 42;
    ok.controls_failed = 3;
    ok.controls_expected = 3;
    Json j = json_equivariance(ok);
    CHECK(j["passed"] == true);
    CHECK(j["checks"] == 42);
    CHECK(j["controls_failed"] == 3);
    CHECK(j["controls_expected"] == 3);

    EquivarianceReport bad;
    bad.passed = false;
    bad.detail = "mismatch at sample 1";
    Json k = json_equivariance(bad);
    CHECK(k["passed"] == false);
    CHECK(k["detail"] == "mismatch at sample 1");
}

TEST_CASE("fiber matrices render as strings only when scalar") {
    std::vector<std::string> params = {"k"};
    FiberMatrix s = FiberMatrix::scalar(RatFunc::variable(params, 0));
    CHECK(json_fiber_matrix(s) == Json("k"));

    FiberMatrix m(2, 2, params);
    m.at(0, 0) = RatFunc::constant(params, BigRat(1));
    m.at(1, 1) = RatFunc::variable(params, 0);
    Json j = json_fiber_matrix(m);
    REQUIRE(j.is_array());
    CHECK(j[0][0] == "1");
    CHECK(j[0][1] == "0");
    CHECK(j[1][1] == "k");
}
