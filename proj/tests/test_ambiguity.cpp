#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "swmap/ambiguity.hpp"

using namespace swmap;
using namespace swmap::testing;

namespace {

bool mc_zero(const Morphism& f)
{
    for (const auto& r : mc_residual(f))
        if (!r.is_zero())
            return false;
    return true;
}

MorphismSettings sample_settings()
{
    return MorphismSettings{2, Deformation::zero(2), Deformation::symbolic(2, 0), 3, 2};
}

SlotIndex slot(int n, int var, int tag)
{
    return SlotIndex{var < 0 ? MultiIndex(n) : MultiIndex::unit(n, var), tag};
}

// head xi1, slot 1/2 (p2 zeta1 - p1 zeta2)
TensorSymbol curl_z(int n)
{
    MultiIndex z(n);
    TensorSymbol s(n, 1);
    s.add_term(SymbolTerm{z, 1, {slot(n, 1, 1)}}, ThetaScalar(ratio(1, 2)));
    s.add_term(SymbolTerm{z, 1, {slot(n, 0, 2)}}, ThetaScalar(ratio(-1, 2)));
    return s;
}

// head xi1, both slots (p2 zeta1 - p1 zeta2)
TensorSymbol curl_z2(int n)
{
    MultiIndex z(n);
    TensorSymbol s(n, 2);
    s.add_term(SymbolTerm{z, 1, {slot(n, 1, 1), slot(n, 1, 1)}}, ThetaScalar(1));
    s.add_term(SymbolTerm{z, 1, {slot(n, 1, 1), slot(n, 0, 2)}}, ThetaScalar(-1));
    s.add_term(SymbolTerm{z, 1, {slot(n, 0, 2), slot(n, 1, 1)}}, ThetaScalar(-1));
    s.add_term(SymbolTerm{z, 1, {slot(n, 0, 2), slot(n, 0, 2)}}, ThetaScalar(1));
    return s;
}

TensorSymbol sample_c(int n)
{
    MultiIndex z(n);
    TensorSymbol c(n, 2);
    c.add_term(SymbolTerm{MultiIndex::unit(n, 0), 0, {slot(n, 1, 1), slot(n, -1, 2)}}, ThetaScalar(1));
    c.add_term(SymbolTerm{z, 0, {slot(n, -1, 1), slot(n, 0, 1)}}, ThetaScalar(ratio(1, 3)));
    return c;
}

}  // namespace

TEST_CASE("zero cocycle")
{
    int n = 2;
    auto g = make_cocycle(2, TensorSymbol(n, 2), TensorSymbol(n, 2));
    CHECK(g.g.is_zero());
    auto f = solve_recursion(sample_settings());
    CHECK(shift_by_cocycle(f, g) == f);
    auto rep = obstruction_class(f, f);
    CHECK(rep.order == 0);
    CHECK(rep.zero);
}

TEST_CASE("curl cocycle kills exact arguments")
{
    int n = 2;
    auto g = make_cocycle(1, curl_z(n), TensorSymbol(n, 1));
    std::mt19937 rng(4);
    for (int t = 0; t < 5; ++t) {
        AElement b = random_element(rng, n, 0, 3, 3);
        CHECK(realize(g.g, {differential_d(b)}).is_zero());
    }
    // 1/2 (d2 a1 - d1 a2) xi1 on a = x2 xi1
    AElement a = AElement::degree1({AElement::x(n, 1).a0(), XPolynomial(n)});
    CHECK(realize(g.g, {a}) == AElement::xi(n, 0) * ThetaScalar(ratio(1, 2)));
}

TEST_CASE("cocycle shape errors")
{
    int n = 2;
    MultiIndex z(n);
    TensorSymbol notz(n, 1);
    notz.add_term(SymbolTerm{z, 1, {slot(n, 0, 1)}}, ThetaScalar(1));  // p1 zeta1 is not in Z
    CHECK_THROWS_AS(make_cocycle(1, notz, TensorSymbol(n, 1)), std::invalid_argument);
    TensorSymbol nohead(n, 1);
    nohead.add_term(SymbolTerm{z, 0, {slot(n, -1, 1)}}, ThetaScalar(1));
    CHECK_THROWS_AS(make_cocycle(1, nohead, TensorSymbol(n, 1)), std::invalid_argument);
    TensorSymbol badc(n, 1);
    badc.add_term(SymbolTerm{z, 0, {slot(n, 0, 0)}}, ThetaScalar(1));
    CHECK_THROWS_AS(make_cocycle(1, TensorSymbol(n, 1), badc), std::invalid_argument);
    CHECK_THROWS_AS(make_cocycle(2, curl_z(n), TensorSymbol(n, 2)), std::invalid_argument);
}

TEST_CASE("exact cocycle is d' c plus d c")
{
    int n = 2;
    TensorSymbol c(n, 1);
    c.add_term(SymbolTerm{MultiIndex(n), 0, {slot(n, -1, 1)}}, ThetaScalar(1));  // a -> a_1
    auto g = make_cocycle(1, TensorSymbol(n, 1), c);
    std::mt19937 rng(6);
    for (int t = 0; t < 4; ++t) {
        AElement a = random_element(rng, n, 1, 3, 2);
        AElement b = random_element(rng, n, 0, 3, 2);
        CHECK(realize(g.g, {a}) == differential_d(realize(c, {a})));
        CHECK(realize(g.g, {b}) == realize(c, {differential_d(b)}));
    }
}

TEST_CASE("shift by a nontrivial cocycle")
{
    int n = 2;
    auto f = solve_recursion(sample_settings());
    for (int l : {1, 2}) {
        TensorSymbol z = l == 1 ? curl_z(n) : curl_z2(n);
        auto g = make_cocycle(l, z, TensorSymbol(n, l));
        auto ft = shift_by_cocycle(f, g);
        CHECK(mc_zero(ft));
        for (int k = 1; k <= 3; ++k)
            CHECK(verify_component_equations(ft, k, 1).pass);
        CHECK(ft.at(l) != f.at(l));
        auto rep = obstruction_class(f, ft);
        CHECK(rep.order == l);
        CHECK(!rep.zero);
        CHECK(rep.representative == z.with_bound(rep.representative.bound()));
        CHECK(tensor_pi(rep.representative) == rep.representative);
        auto back = obstruction_class(ft, f);
        CHECK(back.order == l);
        CHECK(back.representative == -rep.representative);
    }
}

TEST_CASE("shift by an exact cocycle has zero class")
{
    int n = 2;
    auto f = solve_recursion(sample_settings());
    auto g = make_cocycle(2, TensorSymbol(n, 2), sample_c(n));
    auto ft = shift_by_cocycle(f, g);
    CHECK(mc_zero(ft));
    auto rep = obstruction_class(f, ft);
    CHECK(rep.order == 2);
    CHECK(rep.zero);
    CHECK(rep.representative.is_zero());
    CHECK(obstruction_class(ft, f).zero);
}

TEST_CASE("exactness test by hand")
{
    int n = 2;
    MultiIndex z(n);
    // d' of (x1 times a_1): xi1 a_1 + x1 (d_i a_1) xi^i
    TensorSymbol c(n, 1);
    c.add_term(SymbolTerm{MultiIndex::unit(n, 0), 0, {slot(n, -1, 1)}}, ThetaScalar(1));
    CHECK(is_d_exact(postcompose_d(c), 4));
    CHECK(!is_d_exact(curl_z(n), 4));
    TensorSymbol only_one(n, 1);  // xi1 d_1 a_1 alone, no xi2 partner
    only_one.add_term(SymbolTerm{z, 1, {slot(n, 0, 1)}}, ThetaScalar(1));
    CHECK(!is_d_exact(only_one, 4));
}

TEST_CASE("gauge transformation")
{
    int n = 2;
    auto f = solve_recursion(sample_settings());
    CHECK(gauge_transform(f, TensorSymbol(n, 2), 3) == f);

    TensorSymbol c = sample_c(n);
    auto fg = gauge_transform(f, c, 3);
    CHECK(mc_zero(fg));
    CHECK(fg.at(1) == f.at(1));
    // leading order: f_2 + d' c + d c
    auto fe = shift_by_cocycle(f, make_cocycle(2, TensorSymbol(n, 2), c));
    CHECK(fg.at(2) == fe.at(2));
    // descent: the exact shift and the gauge transform agree through order 2
    auto rep = obstruction_class(fe, fg);
    CHECK(rep.order != 1);
    CHECK(rep.order != 2);

    TensorSymbol c1(n, 1);
    c1.add_term(SymbolTerm{MultiIndex(n), 0, {slot(n, 0, 1)}}, ThetaScalar(1));
    auto fg1 = gauge_transform(f, c1, 3);
    CHECK(mc_zero(fg1));
    auto fe1 = shift_by_cocycle(f, make_cocycle(1, TensorSymbol(n, 1), c1));
    CHECK(fg1.at(1) == fe1.at(1));
    CHECK(obstruction_class(f, fg1).zero);
}

TEST_CASE("metadata mismatch")
{
    auto f = solve_recursion(sample_settings());
    auto s = sample_settings();
    s.D = 1;
    auto g = solve_recursion(s);
    CHECK_THROWS_AS(obstruction_class(f, g), std::invalid_argument);
}
