#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "swmap/slot_symbol.hpp"
#include "swmap/tensor_symbol.hpp"

using namespace swmap;
using namespace swmap::testing;

namespace {

PPolynomial pmono(int n, std::initializer_list<int> e, ThetaScalar c = ThetaScalar(1))
{
    return PPolynomial::monomial(MultiIndex(n, e), c);
}

// mixed-degree argument list of given total x-degree budget
std::vector<AElement> random_args(std::mt19937& rng, int n, int arity, int max_degree, int symbols = 0)
{
    std::vector<AElement> args;
    for (int i = 0; i < arity; ++i)
        args.push_back(random_element(rng, n, uniform(rng, 0, 1), max_degree, 2, symbols));
    return args;
}

int sum_bar(const std::vector<AElement>& a, std::size_t upto)
{
    int s = 0;
    for (std::size_t k = 0; k < upto; ++k)
        s += bar_degree(a[k]);
    return s;
}

ThetaScalar parity_sign(int s) { return ThetaScalar(s % 2 == 0 ? 1 : -1); }

}  // namespace

TEST_CASE("slot projector and homotopy on small examples")
{
    int n = 2;
    SlotSymbol phi(n);
    phi.phi_mut(0) = pmono(n, {0, 1});  // p2 zeta_1
    SlotSymbol pi = projector_pi(phi);
    CHECK(pi.phi0().is_zero());
    CHECK(pi.phi(0) == pmono(n, {0, 1}, Rational(1, 2)));
    CHECK(pi.phi(1) == pmono(n, {1, 0}, Rational(-1, 2)));

    SlotSymbol psi(n);
    psi.phi0_mut() = pmono(n, {1, 1});  // p1 p2
    SlotSymbol h = homotopy_h(psi);
    CHECK(h.phi0().is_zero());
    CHECK(h.phi(0) == pmono(n, {0, 1}, Rational(1, 2)));
    CHECK(h.phi(1) == pmono(n, {1, 0}, Rational(1, 2)));

    CHECK(in_Z(pi));
    CHECK(!in_Z(phi));
}

TEST_CASE("slot operators: homotopy relation and projector laws")
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        int n = uniform(rng, 1, 4);
        SlotSymbol phi(n);
        for (int k = 0; k < 4; ++k) {
            phi.phi0_mut().add_term(random_monomial(rng, n, 4), random_coefficient(rng, 2));
            phi.phi_mut(uniform(rng, 0, n - 1)).add_term(random_monomial(rng, n, 4), random_coefficient(rng, 2));
        }
        SlotSymbol lhs = dual_differential(homotopy_h(phi)) + homotopy_h(dual_differential(phi));
        CHECK(lhs == phi - projector_pi(phi));
        SlotSymbol p = projector_pi(phi);
        CHECK(projector_pi(p) == p);
        CHECK(dual_differential(p).is_zero());
        CHECK(homotopy_h(homotopy_h(phi)).is_zero());
        CHECK(projector_pi(homotopy_h(phi)).is_zero());
    }
}

TEST_CASE("slot operators agree with the arity-one tensor operators")
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        int n = uniform(rng, 1, 3);
        SlotSymbol phi(n);
        for (int k = 0; k < 3; ++k) {
            phi.phi0_mut().add_term(random_monomial(rng, n, 3), random_coefficient(rng, 0));
            phi.phi_mut(uniform(rng, 0, n - 1)).add_term(random_monomial(rng, n, 3), random_coefficient(rng, 0));
        }
        auto t = from_slot_symbol(phi);
        CHECK(tensor_pi(t) == from_slot_symbol(projector_pi(phi)));
        CHECK(tensor_h(t) == from_slot_symbol(homotopy_h(phi)));
        CHECK(tensor_partial(t) == from_slot_symbol(dual_differential(phi)));
    }
}

TEST_CASE("tensor homotopy relation")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        int n = uniform(rng, 1, 3);
        int l = uniform(rng, 1, 3);
        auto s = random_symbol(rng, n, l, 4, 3, 2, 2);
        auto lhs = tensor_partial(tensor_h(s)) + tensor_h(tensor_partial(s));
        CHECK(lhs == s - tensor_pi(s));
        CHECK(tensor_pi(tensor_pi(s)) == tensor_pi(s));
        CHECK(tensor_partial(tensor_partial(s)).is_zero());
        CHECK(tensor_h(tensor_h(s)).is_zero());
    }
}

TEST_CASE("canonical ordering is independent of insertion order")
{
    std::mt19937 rng(4);
    auto s = random_symbol(rng, 2, 2, 12, 3, 2, 1);
    TensorSymbol r(2, 2);
    auto sorted = s.sorted_terms();
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it)
        r.add_term(it->first, it->second);
    CHECK(r == s);
    for (std::size_t i = 1; i < sorted.size(); ++i)
        CHECK(canonical_less(sorted[i - 1].first, sorted[i].first));
    for (const auto& [t, c] : sorted)
        CHECK(s.decode(s.encode(t)) == t);
}

TEST_CASE("realize on the identity component")
{
    int n = 2;
    TensorSymbol id(n, 1);
    id.add_term(SymbolTerm{MultiIndex(n), 0, {SlotIndex{MultiIndex(n), 0}}}, ThetaScalar(1));
    for (int i = 0; i < n; ++i)
        id.add_term(SymbolTerm{MultiIndex(n), i + 1, {SlotIndex{MultiIndex(n), i + 1}}}, ThetaScalar(1));
    std::mt19937 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_element(rng, n, uniform(rng, 0, 1), 3, 3, 1);
        CHECK(realize(id, {a}) == a);
    }
    CHECK(is_unital(id));
    CHECK(!is_normal(id));
}

TEST_CASE("realize a single term by hand")
{
    int n = 2;
    // x1 xi^2 * d_1 (a0) * d_2 (b_1)
    TensorSymbol s(n, 2);
    s.add_term(SymbolTerm{MultiIndex(n, {1, 0}), 2, {SlotIndex{MultiIndex(n, {1, 0}), 0}, SlotIndex{MultiIndex(n, {0, 1}), 1}}},
               ThetaScalar(3));
    auto x1 = XPolynomial::variable(n, 0);
    auto x2 = XPolynomial::variable(n, 1);
    AElement a = AElement::degree0(x1 * x1 * x2);
    AElement b = AElement::degree1({x2 * x2, x1});
    AElement r = realize(s, {a, b});
    // 3 x1 * (2 x1 x2) * (2 x2) on xi^2
    CHECK(r.a0().is_zero());
    CHECK(r.coeff(0).is_zero());
    CHECK(r.coeff(1) == x1 * x1 * x2 * x2 * ThetaScalar(12));
}

TEST_CASE("tensor differential matches the concrete bar differential")
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        int n = uniform(rng, 1, 3);
        int l = uniform(rng, 1, 3);
        auto s = random_symbol(rng, n, l, 6, 2, 2, 1);
        auto args = random_args(rng, n, l, 3, 1);
        AElement expect(n);
        for (int i = 0; i < l; ++i) {
            auto changed = args;
            changed[static_cast<std::size_t>(i)] = differential_d(args[static_cast<std::size_t>(i)]);
            expect += realize(s, changed) * parity_sign(sum_bar(args, static_cast<std::size_t>(i)));
        }
        CHECK(realize(tensor_partial(s), args) == expect);
    }
}

TEST_CASE("postcomposition with d")
{
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        int n = uniform(rng, 1, 3);
        int l = uniform(rng, 1, 3);
        auto s = random_symbol(rng, n, l, 6, 2, 2, 1);
        auto args = random_args(rng, n, l, 3, 1);
        CHECK(realize(postcompose_d(s), args) == differential_d(realize(s, args)));
    }
}

TEST_CASE("merge matches the concrete inserted product")
{
    std::mt19937 rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        int n = uniform(rng, 2, 3);
        int l = uniform(rng, 1, 2);
        auto theta = Deformation::symbolic(n, 0);
        int bound = 8;
        auto s = random_symbol(rng, n, l, 5, 2, 1, 1, bound);
        auto args = random_args(rng, n, l + 1, 2);
        AElement expect(n);
        for (int i = 0; i < l; ++i) {
            std::vector<AElement> merged;
            for (int k = 0; k < i; ++k)
                merged.push_back(args[static_cast<std::size_t>(k)]);
            merged.push_back(star(args[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(i) + 1], theta));
            for (int k = i + 2; k <= l; ++k)
                merged.push_back(args[static_cast<std::size_t>(k)]);
            expect += realize(s, merged) * parity_sign(sum_bar(args, static_cast<std::size_t>(i) + 1));
        }
        CHECK(realize(merge(s, theta), args) == expect);
    }
}

TEST_CASE("convolution matches the concrete target product")
{
    std::mt19937 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        int n = uniform(rng, 2, 3);
        int lf = uniform(rng, 1, 2), lg = uniform(rng, 1, 2);
        auto tp = Deformation::symbolic(n, 3);
        int bound = 8;
        auto f = random_symbol(rng, n, lf, 4, 2, 2, 1, bound);
        auto g = random_symbol(rng, n, lg, 4, 2, 2, 1, bound);
        int gdeg = uniform(rng, 0, 1);
        auto args = random_args(rng, n, lf + lg, 2);
        std::vector<AElement> left(args.begin(), args.begin() + lf), right(args.begin() + lf, args.end());
        AElement expect = star(realize(f, left), realize(g, right), tp) * parity_sign(gdeg * sum_bar(args, lf));
        CHECK(realize(convolve(f, g, tp, gdeg), args) == expect);
    }
}
