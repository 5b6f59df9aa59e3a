#include "swmap/slot_symbol.hpp"

#include <stdexcept>

namespace swmap {

SlotSymbol::SlotSymbol(int n, std::optional<int> bound)
    : phi0_(n, bound), phi_(static_cast<std::size_t>(n), PPolynomial(n, bound))
{
}

SlotSymbol::SlotSymbol(PPolynomial phi0, std::vector<PPolynomial> phi) : phi0_(std::move(phi0)), phi_(std::move(phi))
{
    if (static_cast<int>(phi_.size()) != phi0_.dim())
        throw std::invalid_argument("SlotSymbol: zeta part length != dimension");
    for (auto& p : phi_)
        p = p.with_bound(phi0_.bound());
}

bool SlotSymbol::is_zero() const
{
    if (!phi0_.is_zero())
        return false;
    for (const auto& p : phi_)
        if (!p.is_zero())
            return false;
    return true;
}

SlotSymbol& SlotSymbol::operator+=(const SlotSymbol& o)
{
    phi0_ += o.phi0_;
    for (std::size_t i = 0; i < phi_.size(); ++i)
        phi_[i] += o.phi_.at(i);
    return *this;
}

SlotSymbol& SlotSymbol::operator-=(const SlotSymbol& o)
{
    phi0_ -= o.phi0_;
    for (std::size_t i = 0; i < phi_.size(); ++i)
        phi_[i] -= o.phi_.at(i);
    return *this;
}

SlotSymbol dual_differential(const SlotSymbol& phi)
{
    int n = phi.dim();
    SlotSymbol r(n, phi.bound());
    for (int i = 0; i < n; ++i)
        r.phi0_mut() += PPolynomial::variable(n, i).with_bound(phi.bound()) * phi.phi(i);
    return r;
}

SlotSymbol projector_pi(const SlotSymbol& phi)
{
    int n = phi.dim();
    SlotSymbol r(n, phi.bound());
    r.phi0_mut().add_term(MultiIndex(n), phi.phi0().coefficient(MultiIndex(n)));
    // unbounded: the degree lost by d/dp_j is regained by the contraction
    PPolynomial contracted(n);
    for (int i = 0; i < n; ++i) {
        r.phi_mut(i) += phi.phi(i);
        // p_i phi^i(tp): p_i itself is not rescaled
        for (const auto& [m, c] : phi.phi(i).terms())
            contracted.add_term(m + MultiIndex::unit(n, i), c * Rational(1, m.degree() + 1));
    }
    for (int j = 0; j < n; ++j)
        r.phi_mut(j) -= contracted.partial(j).with_bound(phi.bound());
    return r;
}

SlotSymbol homotopy_h(const SlotSymbol& phi)
{
    int n = phi.dim();
    SlotSymbol r(n, phi.bound());
    for (int i = 0; i < n; ++i)
        r.phi_mut(i) += dilation_integral(phi.phi0().partial(i));
    return r;
}

bool in_Z(const SlotSymbol& phi)
{
    if (!dual_differential(phi).is_zero())
        return false;
    for (const auto& [m, c] : phi.phi0().terms())
        if (m.degree() != 0)
            return false;
    return true;
}

}  // namespace swmap
