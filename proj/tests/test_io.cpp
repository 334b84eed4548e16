#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "helpers.hpp"
#include "leib/io.hpp"
#include "leib/invariants.hpp"

using namespace leib;
using leibtest::example2;

TEST_CASE("algebra file parsing: the worked example") {
    std::string text = R"({"field":"Q","dim":2,"basis":["a","a2"],
        "products":[{"i":0,"j":0,"terms":[{"k":1,"c":"1"}]},
                    {"i":1,"j":0,"terms":[{"k":1,"c":"1"}]}]})";
    LeibnizAlgebra l = parse_algebra(text);
    CHECK(l == example2(FieldSpec::rationals()));
    CHECK(l.basis_names()[1] == "a2");
}

TEST_CASE("algebra file diagnostics") {
    CHECK_THROWS_WITH_AS(parse_algebra(R"({"field":{"GF":4},"dim":1})"),
                         "4 is not prime", ParseError);
    CHECK_THROWS_AS(parse_algebra("not json at all"), ParseError);
    CHECK_THROWS_AS(parse_algebra(R"({"dim":2})"), ParseError);
    CHECK_THROWS_AS(parse_algebra(R"({"field":"Q"})"), ParseError);
    // duplicate (i, j)
    CHECK_THROWS_AS(parse_algebra(R"({"field":"Q","dim":2,"products":[
        {"i":0,"j":0,"terms":[{"k":1,"c":"1"}]},
        {"i":0,"j":0,"terms":[{"k":0,"c":"1"}]}]})"),
                    ParseError);
    // duplicate k
    CHECK_THROWS_AS(parse_algebra(R"({"field":"Q","dim":2,"products":[
        {"i":0,"j":0,"terms":[{"k":1,"c":"1"},{"k":1,"c":"2"}]}]})"),
                    ParseError);
    // out of range
    CHECK_THROWS_AS(parse_algebra(R"({"field":"Q","dim":2,"products":[
        {"i":0,"j":5,"terms":[{"k":1,"c":"1"}]}]})"),
                    ParseError);
    // bad scalar
    CHECK_THROWS_AS(parse_algebra(R"({"field":"Q","dim":2,"products":[
        {"i":0,"j":0,"terms":[{"k":1,"c":"1/0"}]}]})"),
                    ParseError);
    // scalar must be a string
    CHECK_THROWS_AS(parse_algebra(R"({"field":"Q","dim":2,"products":[
        {"i":0,"j":0,"terms":[{"k":1,"c":1}]}]})"),
                    ParseError);
    // wrong basis length
    CHECK_THROWS_AS(parse_algebra(R"({"field":"Q","dim":2,"basis":["a"]})"), ParseError);
}

TEST_CASE("round-trip identity") {
    LeibnizAlgebra j3 = jac_example(3);
    CHECK(parse_algebra(serialize_algebra(j3)) == j3);

    leibtest::Rng rng(77);
    for (int t = 0; t < 200; ++t) {
        FieldSpec f = (t % 2) ? FieldSpec::gf(5) : FieldSpec::rationals();
        std::size_t n = 1 + rng.next(4);
        std::vector<Vec> tensor;
        for (std::size_t i = 0; i < n * n; ++i)
            tensor.push_back(leibtest::random_vec(rng, f, n));
        LeibnizAlgebra l = LeibnizAlgebra::from_tensor(f, default_names(n), tensor);
        CHECK(parse_algebra(serialize_algebra(l)) == l);
    }
}

TEST_CASE("element expressions") {
    LeibnizAlgebra l = example2(FieldSpec::rationals());
    FieldSpec q = l.field();
    CHECK(vec_eq(parse_element(l, "a2"), Vec{Scalar::zero(q), Scalar::one(q)}));
    CHECK(vec_eq(parse_element(l, "a2-a"), Vec{-Scalar::one(q), Scalar::one(q)}));
    CHECK(vec_eq(parse_element(l, "2a + 3a2"),
                 Vec{Scalar::of_int(q, 2), Scalar::of_int(q, 3)}));
    CHECK(vec_eq(parse_element(l, "1/2*a"), Vec{Scalar::rational(Rat(BigInt(1), BigInt(2))),
                                                Scalar::zero(q)}));
    CHECK(parse_element_list(l, "a,a2").size() == 2);
    CHECK_THROWS_AS(parse_element(l, "c"), ParseError);
    CHECK_THROWS_AS(parse_element(l, "2"), ParseError);
    CHECK_THROWS_AS(parse_element(l, ""), ParseError);
}

TEST_CASE("analyze report shape and determinism") {
    LeibnizAlgebra l = example2(FieldSpec::gf(5));
    Json a = analyze_report(l);
    CHECK(a["leibniz"]["ok"] == true);
    CHECK(a["lie"] == false);
    CHECK(a["ct"]["status"] == "ct");
    CHECK(a["nilradical"]["certified"] == true);
    CHECK(a["derived"]["class_or_length"] == 2);
    Json b = analyze_report(l);
    CHECK(a.dump() == b.dump());

    // invalid algebra: analysis stops after the violation
    FieldSpec q = FieldSpec::rationals();
    LeibnizAlgebra bad = LeibnizAlgebra::make(q, {"e1"}, {{0, 0, {{0, Scalar::one(q)}}}});
    Json r = analyze_report(bad);
    CHECK(r["leibniz"]["ok"] == false);
    CHECK(r.contains("analysis"));
    CHECK(report_failures(r) == 1);
}

TEST_CASE("verify report determinism, byte for byte") {
    LeibnizAlgebra l = jac_example(3);
    VerifyOptions opt;
    opt.suite = "all";
    opt.seed = 0;
    std::string first = verify_report(l, opt).dump(2);
    std::string second = verify_report(l, opt).dump(2);
    CHECK(first == second);

    LeibnizAlgebra e = example2(FieldSpec::rationals());
    CHECK(verify_report(e, opt).dump(2) == verify_report(e, opt).dump(2));
}

TEST_CASE("verify rejects unknown suites") {
    VerifyOptions opt;
    opt.suite = "nope";
    CHECK_THROWS_AS(verify_report(example2(FieldSpec::gf(3)), opt), ParseError);
}

TEST_CASE("analyze degrades gracefully when enumeration budgets are exceeded") {
    // a large prime field: exhaustive CT is out of reach, but the report
    // still builds; the trace-candidate nilradical works over any field
    LeibnizAlgebra l = example2(FieldSpec::gf(2147483647));
    Json rep = analyze_report(l);
    CHECK(rep["ct"]["status"] == "budget_exceeded");
    CHECK(rep["leibniz"]["ok"] == true);
    CHECK(rep["nilradical"]["certified"] == true);
    CHECK(rep["nilradical"]["method"] == "trace candidate");
    CHECK(report_failures(rep) == 0);
}

TEST_CASE("zero-dimensional algebra analyzes without incident") {
    LeibnizAlgebra z = parse_algebra(R"({"field":{"GF":3},"dim":0})");
    Json rep = analyze_report(z);
    CHECK(rep["leibniz"]["ok"] == true);
    CHECK(rep["ct"]["status"] == "ct");
    CHECK(report_failures(rep) == 0);
    CHECK(parse_algebra(serialize_algebra(z)) == z);
}

#ifdef LEIB_CLI_PATH
namespace {

int run_cli(const std::string &args) {
    std::string cmd = std::string(LEIB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string write_temp(const std::string &name, const std::string &content) {
    std::string path = std::string("cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("cli exit codes: pass, counterexample, malformed") {
    std::string good = write_temp("good.leib", serialize_algebra(example2(FieldSpec::gf(5))));
    std::string invalid = write_temp(
        "invalid.leib",
        R"({"field":"Q","dim":1,"products":[{"i":0,"j":0,"terms":[{"k":0,"c":"1"}]}]})");
    std::string malformed = write_temp("malformed.leib", "{this is not json");

    CHECK(run_cli("analyze " + good) == 0);
    CHECK(run_cli("analyze " + invalid) == 1);  // identity violation is a counterexample
    CHECK(run_cli("analyze " + malformed) == 2);
    CHECK(run_cli("verify " + good + " --suite lemma1") == 0);
    CHECK(run_cli("verify " + good + " --suite nope") == 2);
    CHECK(run_cli("quotient " + good + " --ideal a2") == 0);
    CHECK(run_cli("quotient " + good + " --ideal a") == 2);
    CHECK(run_cli("census --gf 3 --dim 2 --budget 100") == 2); // budget exceeded
    CHECK(run_cli("census --gf 4 --dim 1") == 2);              // 4 is not prime
    CHECK(run_cli("no-such-command") == 2);
    CHECK(run_cli("--help") == 0);

    std::remove(good.c_str());
    std::remove(invalid.c_str());
    std::remove(malformed.c_str());
}
#endif
