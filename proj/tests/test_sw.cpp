#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "swmap/sw.hpp"

using namespace swmap;
using namespace swmap::testing;

namespace {

MorphismSettings commutative_to_symbolic(int n, int L, int D)
{
    return MorphismSettings{n, Deformation::zero(n), Deformation::symbolic(n, 0), L, D};
}

AElement theta_order(const AElement& a, int k)
{
    return k == 0 ? a.theta_truncated(0) : a.theta_truncated(k) - a.theta_truncated(k - 1);
}

// A = x2 xi^1
AElement sample_field(int n)
{
    std::vector<XPolynomial> xi(static_cast<std::size_t>(n), XPolynomial(n));
    xi[0] = AElement::x(n, 1).a0();
    return AElement::degree1(xi);
}

}  // namespace

TEST_CASE("vanishing field and equal deformations")
{
    int n = 2;
    auto f = solve_recursion(commutative_to_symbolic(n, 3, 2));
    std::mt19937 rng(11);
    XPolynomial lambda = random_xpoly(rng, n, 2, 3);
    AElement zero(n);
    CHECK(evaluate_gauge_field(f, zero, 3).is_zero());
    CHECK(evaluate_gauge_param(f, lambda, zero, 3) == lambda);

    auto th = Deformation::symbolic(n, 0);
    auto g = solve_recursion(MorphismSettings{n, th, th, 3, 2});
    AElement A = random_element(rng, n, 1, 2, 2, 1);
    CHECK(evaluate_gauge_field(g, A, 3) == A);
    CHECK(evaluate_gauge_param(g, lambda, A, 3) == lambda);
}

TEST_CASE("constant parameter and undeformed parts")
{
    int n = 2;
    auto f = solve_recursion(commutative_to_symbolic(n, 3, 2));
    std::mt19937 rng(12);
    for (int t = 0; t < 4; ++t) {
        AElement A = random_element(rng, n, 1, 2, 2);
        XPolynomial c = XPolynomial::constant(n, ThetaScalar(uniform(rng, 1, 5)));
        CHECK(evaluate_gauge_param(f, c, A, 3) == c);
        auto r = check_sw1(f, A, c, 3);
        CHECK(r.pass);
        XPolynomial lambda = random_xpoly(rng, n, 2, 2);
        CHECK(theta_order(evaluate_gauge_field(f, A, 3), 0) == A);
        CHECK(AElement::degree0(evaluate_gauge_param(f, lambda, A, 3)).theta_truncated(0) == AElement::degree0(lambda));
    }
}

TEST_CASE("solved morphism passes both gauge identities")
{
    int n = 2;
    for (bool symbolic_source : {false, true}) {
        MorphismSettings s{n, symbolic_source ? Deformation::symbolic(n, 0) : Deformation::zero(n),
                           Deformation::symbolic(n, symbolic_source ? 1 : 0), 3, 2};
        auto f = solve_recursion(s);
        std::mt19937 rng(symbolic_source ? 21 : 20);
        for (int t = 0; t < 3; ++t) {
            AElement A = random_element(rng, n, 1, 2, 2);
            XPolynomial l1 = random_xpoly(rng, n, 2, 2), l2 = random_xpoly(rng, n, 2, 2);
            auto r1 = check_sw1(f, A, l1, 3);
            CHECK(r1.pass);
            CHECK(r1.degrees_checked == std::vector<int>{0, 1, 2});
            auto r2 = check_sw2(f, A, l1, l2, 3);
            CHECK(r2.pass);
            CHECK(r2.degrees_checked == std::vector<int>{0, 1});
        }
    }
}

TEST_CASE("constant parameters in the consistency identity")
{
    int n = 2;
    auto f = solve_recursion(commutative_to_symbolic(n, 3, 2));
    std::mt19937 rng(5);
    AElement A = random_element(rng, n, 1, 2, 2);
    auto one = XPolynomial::constant(n, ThetaScalar(1)), two = XPolynomial::constant(n, ThetaScalar(2));
    CHECK(check_sw2(f, A, one, two, 3).pass);
}

TEST_CASE("perturbed morphism fails gauge covariance")
{
    int n = 2;
    auto f = solve_recursion(commutative_to_symbolic(n, 2, 2));
    MultiIndex z(n);
    TensorSymbol bad(n, 2);
    bad.add_term(SymbolTerm{z, 1, {SlotIndex{z, 1}, SlotIndex{MultiIndex::unit(n, 0), 1}}}, ThetaScalar(1));
    f.set(2, f.at(2) + bad);
    AElement A = AElement::degree1({AElement::x(n, 0).a0(), XPolynomial(n)});
    XPolynomial lambda = AElement::x(n, 0).a0();
    auto r = check_sw1(f, A, lambda, 2);
    CHECK(!r.pass);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->find("homogeneity 1") == 0);
}

TEST_CASE("first-order comparison for A = x2 xi1")
{
    int n = 2;
    auto s = commutative_to_symbolic(n, 2, 2);
    auto f = solve_recursion(s);
    auto ref = first_order_morphism(s);
    AElement A = sample_field(n);
    std::mt19937 rng(8);
    XPolynomial lambda = random_xpoly(rng, n, 2, 3);
    CHECK(check_sw1(f, A, lambda, 2).pass);
    CHECK(check_sw1(ref, A, lambda, 2, 1).pass);

    TensorSymbol diff = f.at(2).theta_homogeneous_part(1) - ref.at(2).with_bound(f.bound(2));
    TensorSymbol sym = graded_symmetrization(diff);
    CHECK(tensor_partial(sym) == postcompose_d(sym));
    CHECK(theta_order(evaluate_gauge_field(f, A, 2), 1) == evaluate_gauge_field(ref, A, 2) - A);
    // -1/2 theta'^{kj} a_k (2 d_j a_i - d_i a_j) xi^i
    AElement a = A;
    AElement by_hand(n);
    for (int i = 0; i < n; ++i) {
        std::vector<XPolynomial> xi(static_cast<std::size_t>(n), XPolynomial(n));
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                auto t = s.theta_prime(k, j);
                if (t.is_zero())
                    continue;
                xi[static_cast<std::size_t>(i)] +=
                    a.coeff(k) * (a.coeff(i).partial(j) * ThetaScalar(2) - a.coeff(j).partial(i)) * (t * ThetaScalar(ratio(-1, 2)));
            }
        by_hand += AElement::degree1(xi);
    }
    CHECK(evaluate_gauge_field(ref, A, 2) - A == by_hand);
}

TEST_CASE("first-order closed form is covariant to first order only")
{
    int n = 2;
    auto s = commutative_to_symbolic(n, 2, 2);
    auto ref = first_order_morphism(s);
    std::mt19937 rng(9);
    for (int t = 0; t < 4; ++t) {
        AElement A = random_element(rng, n, 1, 2, 2);
        XPolynomial lambda = random_xpoly(rng, n, 2, 2);
        CHECK(check_sw1(ref, A, lambda, 2, 1).pass);
    }
    CHECK_THROWS_AS(first_order_morphism(MorphismSettings{n, Deformation::symbolic(n, 0), Deformation::symbolic(n, 1), 2, 2}),
                    std::invalid_argument);
}

TEST_CASE("graded symmetrization against concrete evaluation")
{
    int n = 2;
    std::mt19937 rng(31);
    for (int t = 0; t < 10; ++t) {
        TensorSymbol s = random_symbol(rng, n, 2, 4, 2, 1);
        TensorSymbol sym = graded_symmetrization(s);
        AElement a = random_element(rng, n, uniform(rng, 0, 1), 3, 2);
        AElement b = random_element(rng, n, uniform(rng, 0, 1), 3, 2);
        ThetaScalar sign((bar_degree(a) * bar_degree(b)) % 2 == 0 ? 1 : -1);
        CHECK(realize(sym, {a, b}) == realize(s, {a, b}) + realize(s, {b, a}) * sign);
    }
}

TEST_CASE("input validation")
{
    int n = 2;
    auto f = solve_recursion(commutative_to_symbolic(n, 2, 1));
    AElement A = AElement::degree1({AElement::x(n, 0).a0() * AElement::x(n, 0).a0(), XPolynomial(n)});
    CHECK_THROWS_AS(evaluate_gauge_field(f, A, 2), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_gauge_field(f, AElement::x(n, 0), 2), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_gauge_field(f, AElement(n), 3), std::invalid_argument);
}
