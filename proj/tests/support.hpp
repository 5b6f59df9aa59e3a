#pragma once

#include <random>
#include <vector>

#include "swmap/moyal.hpp"
#include "swmap/tensor_symbol.hpp"

namespace swmap::testing {

inline int uniform(std::mt19937& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline MultiIndex random_monomial(std::mt19937& rng, int n, int max_degree)
{
    MultiIndex m(n);
    int d = uniform(rng, 0, max_degree);
    for (int k = 0; k < d; ++k) {
        int i = uniform(rng, 0, n - 1);
        m.set(i, m[i] + 1);
    }
    return m;
}

/// Small integer coefficient, optionally times a random deformation symbol.
inline ThetaScalar random_coefficient(std::mt19937& rng, int symbols)
{
    int c = 0;
    while (c == 0)
        c = uniform(rng, -3, 3);
    ThetaScalar r(c);
    if (symbols > 0 && uniform(rng, 0, 2) == 0)
        r *= ThetaScalar::symbol(uniform(rng, 0, symbols - 1));
    return r;
}

inline XPolynomial random_xpoly(std::mt19937& rng, int n, int max_degree, int terms, int symbols = 0)
{
    XPolynomial p(n);
    for (int k = 0; k < terms; ++k)
        p.add_term(random_monomial(rng, n, max_degree), random_coefficient(rng, symbols));
    return p;
}

/// Homogeneous element of the given degree (0 or 1).
inline AElement random_element(std::mt19937& rng, int n, int degree, int max_degree, int terms, int symbols = 0)
{
    if (degree == 0)
        return AElement::degree0(random_xpoly(rng, n, max_degree, terms, symbols));
    std::vector<XPolynomial> xi;
    for (int i = 0; i < n; ++i)
        xi.push_back(random_xpoly(rng, n, max_degree, terms, symbols));
    return AElement::degree1(std::move(xi));
}

inline SymbolTerm random_term(std::mt19937& rng, int n, int arity, int max_slot_degree, int max_head_degree)
{
    SymbolTerm t;
    t.head = random_monomial(rng, n, max_head_degree);
    t.head_xi = uniform(rng, 0, n);
    for (int s = 0; s < arity; ++s)
        t.slots.push_back(SlotIndex{random_monomial(rng, n, max_slot_degree), uniform(rng, 0, n)});
    return t;
}

inline TensorSymbol random_symbol(std::mt19937& rng, int n, int arity, int terms, int max_slot_degree,
                                  int max_head_degree, int symbols = 0, std::optional<int> bound = std::nullopt)
{
    TensorSymbol s(n, arity, bound);
    for (int k = 0; k < terms; ++k)
        s.add_term(random_term(rng, n, arity, max_slot_degree, max_head_degree), random_coefficient(rng, symbols));
    return s;
}

inline int bar_degree(const AElement& a)
{
    return a.is_degree0() ? -1 : 0;
}

}  // namespace swmap::testing
