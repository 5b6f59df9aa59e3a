#pragma once

#include <optional>
#include <vector>

#include "swmap/polynomial.hpp"

namespace swmap {

/// Symbol phi0(p) + phi^i(p) zeta_i of a constant-coefficient operator on
/// A_theta. phi0 has degree 0, the zeta part degree -1.
class SlotSymbol {
public:
    SlotSymbol() = default;
    explicit SlotSymbol(int n, std::optional<int> bound = std::nullopt);
    SlotSymbol(PPolynomial phi0, std::vector<PPolynomial> phi);

    int dim() const { return phi0_.dim(); }
    std::optional<int> bound() const { return phi0_.bound(); }
    const PPolynomial& phi0() const { return phi0_; }
    const PPolynomial& phi(int i) const { return phi_.at(i); }
    const std::vector<PPolynomial>& zeta_part() const { return phi_; }
    PPolynomial& phi0_mut() { return phi0_; }
    PPolynomial& phi_mut(int i) { return phi_.at(i); }

    bool is_zero() const;

    SlotSymbol& operator+=(const SlotSymbol& o);
    SlotSymbol& operator-=(const SlotSymbol& o);
    friend SlotSymbol operator+(SlotSymbol a, const SlotSymbol& b) { return a += b; }
    friend SlotSymbol operator-(SlotSymbol a, const SlotSymbol& b) { return a -= b; }
    friend bool operator==(const SlotSymbol& a, const SlotSymbol& b) { return a.phi0_ == b.phi0_ && a.phi_ == b.phi_; }
    friend bool operator!=(const SlotSymbol& a, const SlotSymbol& b) { return !(a == b); }

private:
    PPolynomial phi0_;
    std::vector<PPolynomial> phi_;
};

/// d phi = p_i phi^i(p)
SlotSymbol dual_differential(const SlotSymbol& phi);
/// pi phi = phi0(0) + phi^i zeta_i - zeta_j d/dp_j \int_0^1 p_i phi^i(tp) dt
SlotSymbol projector_pi(const SlotSymbol& phi);
/// h phi = zeta_i \int_0^1 (d phi0 / d p_i)(tp) dt
SlotSymbol homotopy_h(const SlotSymbol& phi);
/// phi0 constant and p_i phi^i = 0
bool in_Z(const SlotSymbol& phi);

}  // namespace swmap
