#pragma once

#include <string>
#include <vector>

#include "swmap/moyal.hpp"

namespace swmap {

/// All x-monomials of total degree <= d, in graded lex order.
std::vector<MultiIndex> monomials_up_to(int n, int d);

struct BasisElement {
    MultiIndex x;
    int xi = 0;  // 0: degree-0 element x^a; j: x^a xi^j
    AElement element;
    std::string label;
};

/// Monomial basis of the degree-0 or degree-1 part with x-degree <= d.
std::vector<BasisElement> monomial_basis(int n, int degree, int d);

std::string monomial_label(const MultiIndex& m);

}  // namespace swmap
