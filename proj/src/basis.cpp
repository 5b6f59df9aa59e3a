#include "swmap/basis.hpp"

#include <algorithm>

namespace swmap {

std::vector<MultiIndex> monomials_up_to(int n, int d)
{
    std::vector<MultiIndex> out;
    MultiIndex m(n);
    // odometer over the box [0,d]^n, keeping total degree <= d
    while (true) {
        if (m.degree() <= d)
            out.push_back(m);
        int k = 0;
        while (k < n && m[k] == d) {
            m.set(k, 0);
            ++k;
        }
        if (k == n)
            break;
        m.set(k, m[k] + 1);
    }
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

std::string monomial_label(const MultiIndex& m)
{
    std::string s;
    for (int i = 0; i < m.dim(); ++i) {
        if (m[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "x" + std::to_string(i + 1);
        if (m[i] > 1)
            s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::vector<BasisElement> monomial_basis(int n, int degree, int d)
{
    std::vector<BasisElement> out;
    for (const auto& m : monomials_up_to(n, d)) {
        auto poly = XPolynomial::monomial(m, ThetaScalar(1));
        if (degree == 0) {
            out.push_back({m, 0, AElement::degree0(poly), monomial_label(m)});
            continue;
        }
        for (int j = 0; j < n; ++j) {
            std::vector<XPolynomial> xi(static_cast<std::size_t>(n), XPolynomial(n));
            xi[static_cast<std::size_t>(j)] = poly;
            out.push_back({m, j + 1, AElement::degree1(std::move(xi)), (m.degree() == 0 ? std::string() : monomial_label(m) + "*") + "xi" + std::to_string(j + 1)});
        }
    }
    return out;
}

}  // namespace swmap
