#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "swmap/io.hpp"

using namespace swmap;
using namespace swmap::testing;
using io::json;

TEST_CASE("scalar and polynomial round trip")
{
    std::mt19937 rng(1);
    for (int t = 0; t < 20; ++t) {
        XPolynomial p = random_xpoly(rng, 3, 4, 4, 6);
        CHECK(io::xpoly_from_json(io::to_json(p), 3, 6) == p);
        AElement a = random_element(rng, 3, uniform(rng, 0, 1), 3, 3, 6);
        CHECK(io::aelement_from_json(io::to_json(a), 3, 6) == a);
    }
    ThetaScalar c = ThetaScalar::symbol(2) * ThetaScalar(ratio(-7, 3)) + ThetaScalar(5);
    json j = io::to_json(c);
    CHECK(j.size() == 2);
    CHECK(io::theta_scalar_from_json(j, 3) == c);
    CHECK_THROWS_AS(io::theta_scalar_from_json(j, 2), io::SchemaError);
}

TEST_CASE("tensor symbol round trip and canonical order")
{
    std::mt19937 rng(2);
    for (int t = 0; t < 20; ++t) {
        TensorSymbol s = random_symbol(rng, 2, uniform(rng, 1, 3), 6, 3, 2, 2, 9);
        json j = io::to_json(s);
        TensorSymbol back = io::tensor_symbol_from_json(j, 2, 2);
        CHECK(back == s);
        CHECK(back.bound() == s.bound());
        CHECK(io::dump(io::to_json(back)) == io::dump(j));
    }
    json bad = json::parse(R"({"arity": 1, "terms": [{"coef": [], "head": {"exp": [0, 0], "xi": 3}, "slots": [{"p": [0, 0], "tag": 0}]}]})");
    CHECK_THROWS_AS(io::tensor_symbol_from_json(bad, 2, 0), io::SchemaError);
}

TEST_CASE("morphism file round trip is byte-stable")
{
    MorphismSettings s{2, Deformation::symbolic(2, 0), Deformation::symbolic(2, 1), 2, 2};
    auto f = solve_recursion(s);
    std::string text = io::dump(io::morphism_to_json(f));
    Morphism g = io::morphism_from_json(json::parse(text));
    CHECK(g == f);
    CHECK(io::dump(io::morphism_to_json(g)) == text);
    CHECK(io::dump(io::morphism_to_json(solve_recursion(s))) == text);

    json j = json::parse(text);
    CHECK(j["metadata"]["symbols"] == json({"t12", "s12"}));
    CHECK(j["metadata"]["gauge"] == "pi-orthogonal");
    j["schema_version"] = 2;
    CHECK_THROWS_AS(io::morphism_from_json(j), io::SchemaError);
}

TEST_CASE("numeric deformations in files")
{
    auto th = Deformation::from_matrix({{Rational(0), ratio(1, 2)}, {ratio(-1, 2), Rational(0)}});
    MorphismSettings s{2, th, Deformation::symbolic(2, 0), 2, 1};
    auto f = solve_recursion(s);
    Morphism g = io::morphism_from_json(io::morphism_to_json(f));
    CHECK(g.settings().theta == th);
    CHECK(g == f);
}

TEST_CASE("session config")
{
    io::SessionConfig c = io::config_from_json(json::parse(R"({"n": 3, "theta": "sym", "theta_prime": [["0","1"],["-1","0"]], "L": 2})"));
    CHECK(c.n == 3);
    CHECK_THROWS_AS(io::to_settings(c), io::ConfigError);  // matrix is 2x2
    c.theta_prime = "sym";
    auto s = io::to_settings(c);
    CHECK(s.theta.symbol_count() == 3);
    CHECK(s.theta_prime.first_symbol() == 3);
    c.theta_prime = json::parse(R"([[0, 1, 0], [1, 0, 0], [0, 0, 0]])");
    CHECK_THROWS_AS(io::to_settings(c), io::ConfigError);
    c.theta_prime = "0";
    c.L = 0;
    CHECK_THROWS_AS(io::to_settings(c), io::ConfigError);
    io::SessionConfig big;
    big.n = 4;
    big.theta = "sym";
    big.theta_prime = "sym";
    CHECK_THROWS_AS(io::to_settings(big), io::ConfigError);
}

TEST_CASE("expression parser")
{
    int n = 2;
    XPolynomial expect(n);
    expect.add_term(MultiIndex(n, {2, 1}), ThetaScalar(1));
    expect.add_term(MultiIndex(n, {1, 0}), ThetaScalar(ratio(-1, 2)));
    expect.add_term(MultiIndex(n, {0, 0}), ThetaScalar(3));
    expect.add_term(MultiIndex(n, {0, 1}), ThetaScalar(-2));
    // "2 x2" without '*' is rejected; everything else parses
    CHECK_THROWS_AS(io::parse_xpoly("x1^2*x2 - 1/2*x1 + 3 - 2 x2", n), std::invalid_argument);
    CHECK(io::parse_xpoly("x1^2*x2 - 1/2*x1 + 3 - 2*x2", n) == expect);
    CHECK_THROWS_AS(io::parse_xpoly("x3", n), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_xpoly("1/0", n), std::invalid_argument);
    AElement a = io::parse_field("x2; 0", n);
    CHECK(a == AElement::degree1({AElement::x(n, 1).a0(), XPolynomial(n)}));
    CHECK_THROWS_AS(io::parse_field("x2", n), std::invalid_argument);
}

TEST_CASE("reports")
{
    VerificationReport r;
    r.identity = "sw1";
    r.degrees_checked = {0, 1};
    r.pass = false;
    r.witness = "homogeneity 1";
    json j = io::to_json(r);
    CHECK(j["identity"] == "sw1");
    CHECK(j["pass"] == false);
    CHECK(j["witness"] == "homogeneity 1");
    r.witness.reset();
    CHECK(io::to_json(r)["witness"].is_null());
}
