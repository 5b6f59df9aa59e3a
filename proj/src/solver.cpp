#include "swmap/solver.hpp"

#include <algorithm>
#include <string>

namespace swmap {

Morphism::Morphism(MorphismSettings s) : s_(std::move(s))
{
    if (s_.L < 1)
        throw std::invalid_argument("truncation order L must be >= 1");
    if (s_.D < 0)
        throw std::invalid_argument("degree bound D must be >= 0");
    if (s_.theta.dim() != s_.n || s_.theta_prime.dim() != s_.n)
        throw std::invalid_argument("deformation dimension does not match n");
}

TensorSymbol Morphism::at(int l) const
{
    if (l < 1)
        throw std::out_of_range("morphism order must be >= 1");
    if (l > order())
        return TensorSymbol(s_.n, l, bound(l));
    return f_[static_cast<std::size_t>(l - 1)];
}

void Morphism::push(TensorSymbol f_l)
{
    set(order() + 1, std::move(f_l));
}

void Morphism::set(int l, TensorSymbol f_l)
{
    if (l < 1 || l > order() + 1)
        throw std::out_of_range("morphism orders must be filled in sequence");
    if (f_l.arity() != l || f_l.dim() != s_.n)
        throw std::invalid_argument("component shape does not match its order");
    f_l = f_l.with_bound(bound(l));
    if (l == order() + 1)
        f_.push_back(std::move(f_l));
    else
        f_[static_cast<std::size_t>(l - 1)] = std::move(f_l);
}

TensorSymbol Morphism::prime(int l) const
{
    return at(l).head_xi_part(true);
}

TensorSymbol Morphism::doubleprime(int l, int k) const
{
    TensorSymbol full = at(l);
    TensorSymbol out(s_.n, l, full.bound());
    for (const auto& [key, c] : full.raw_terms()) {
        if (key.back() != 0)
            continue;
        SymbolTerm t = full.decode(key);
        if (t.slots.at(static_cast<std::size_t>(k)).tag == 0)
            out.add_raw(key, c);
    }
    return out;
}

std::vector<MorphismComponent> Morphism::components() const
{
    std::vector<MorphismComponent> out;
    for (int l = 1; l <= order(); ++l) {
        out.push_back({l, ComponentKind::Prime, 0, prime(l)});
        for (int k = 0; k < l; ++k)
            out.push_back({l, ComponentKind::DoublePrime, k, doubleprime(l, k)});
    }
    return out;
}

Morphism Morphism::from_components(MorphismSettings s, const std::vector<MorphismComponent>& parts)
{
    Morphism m(std::move(s));
    int top = 0;
    for (const auto& p : parts)
        top = std::max(top, p.order);
    for (int l = 1; l <= top; ++l) {
        TensorSymbol f(m.dim(), l, m.bound(l));
        for (const auto& p : parts) {
            if (p.order != l)
                continue;
            if (p.symbol.arity() != l)
                throw std::invalid_argument("component arity does not match its order");
            for (const auto& [key, c] : p.symbol.raw_terms()) {
                SymbolTerm t = p.symbol.decode(key);
                bool ok = p.kind == ComponentKind::Prime
                              ? t.head_xi != 0 && tag0_count(t) == 0
                              : t.head_xi == 0 && tag0_count(t) == 1 && t.slots.at(static_cast<std::size_t>(p.position)).tag == 0;
                if (!ok)
                    throw std::invalid_argument("component term does not match its slot signature");
                f.add_raw(key, c);
            }
        }
        m.push(std::move(f));
    }
    return m;
}

TensorSymbol identity_component(int n)
{
    TensorSymbol id(n, 1);
    id.add_term(SymbolTerm{MultiIndex(n), 0, {SlotIndex{MultiIndex(n), 0}}}, ThetaScalar(1));
    for (int i = 1; i <= n; ++i)
        id.add_term(SymbolTerm{MultiIndex(n), i, {SlotIndex{MultiIndex(n), i}}}, ThetaScalar(1));
    return id;
}

namespace {

void check_lower(const Morphism& f, int l)
{
    if (f.order() < l - 1)
        throw SolverError("order " + std::to_string(l) + " needs all lower components");
    if (l >= 2 && !is_unital(f.at(1)))
        throw SolverError("f_1 is not unital");
    for (int k = 2; k < l; ++k)
        if (!is_normal(f.at(k)))
            throw SolverError("component f_" + std::to_string(k) + " is not normal");
}

void check_cocycle(const TensorSymbol& theta, int l, const char* name)
{
    if (!tensor_partial(theta).is_zero())
        throw SolverError(std::string(name) + " at order " + std::to_string(l) + " is not closed");
    if (!tensor_pi(theta).is_zero())
        throw SolverError(std::string(name) + " at order " + std::to_string(l) + " has a nonzero projection");
}

TensorSymbol theta_doubleprime_from(const TensorSymbol& psi)
{
    return (-psi).head_xi_part(false);
}

TensorSymbol theta_prime_from(const TensorSymbol& psi, const TensorSymbol& fpp, int bound)
{
    return (postcompose_d(fpp.with_bound(bound)) - psi.head_xi_part(true).with_bound(bound));
}

}  // namespace

TensorSymbol build_psi(const Morphism& f, int l, int bound)
{
    const auto& s = f.settings();
    TensorSymbol psi(s.n, l, bound);
    if (l == 1)
        return psi;
    psi += merge(f.at(l - 1).with_bound(bound), s.theta);
    for (int i = 1; i < l; ++i)
        psi -= convolve(f.at(i), f.at(l - i), s.theta_prime, 1, bound);
    return psi;
}

TensorSymbol build_theta_doubleprime(const Morphism& f, int l)
{
    check_lower(f, l);
    TensorSymbol theta = theta_doubleprime_from(build_psi(f, l, f.bound(l) + 2));
    check_cocycle(theta, l, "Theta''");
    return theta;
}

TensorSymbol build_theta_prime(const Morphism& f, int l, const TensorSymbol& fpp_l)
{
    check_lower(f, l);
    int b = f.bound(l) + 1;
    TensorSymbol theta = theta_prime_from(build_psi(f, l, b), fpp_l, b);
    check_cocycle(theta, l, "Theta'");
    return theta;
}

Morphism extend_recursion(Morphism f, std::optional<int> up_to)
{
    const auto& s = f.settings();
    if (f.order() == 0) {
        // f''_1 = id on degree 0; f'_1 = h(d' f''_1)
        TensorSymbol fpp = identity_component(s.n).head_xi_part(false);
        TensorSymbol theta = postcompose_d(fpp);
        check_cocycle(theta, 1, "Theta'");
        TensorSymbol f1 = tensor_h(theta) + fpp;
        if (f1 != identity_component(s.n))
            throw SolverError("order-one recursion did not reproduce the identity");
        f.push(f1);
    }
    int top = std::min(s.L, up_to.value_or(s.L));
    for (int l = f.order() + 1; l <= top; ++l) {
        int T = f.bound(l);
        check_lower(f, l);
        TensorSymbol psi = build_psi(f, l, T + 2);
        TensorSymbol tpp = theta_doubleprime_from(psi);
        check_cocycle(tpp, l, "Theta''");
        TensorSymbol fpp = tensor_h(tpp).with_bound(T + 1);
        TensorSymbol tp = theta_prime_from(psi, fpp, T + 1);
        check_cocycle(tp, l, "Theta'");
        TensorSymbol fp = tensor_h(tp);
        f.push((fp + fpp).with_bound(T));
    }
    return f;
}

Morphism solve_recursion(const MorphismSettings& s)
{
    return extend_recursion(Morphism(s));
}

std::vector<TensorSymbol> mc_residual(const Morphism& f)
{
    const auto& s = f.settings();
    std::vector<TensorSymbol> out;
    for (int l = 1; l <= s.L; ++l) {
        int T = f.bound(l);
        TensorSymbol fl = f.at(l).with_bound(T);
        out.push_back(tensor_partial(fl) - postcompose_d(fl) + build_psi(f, l, T));
    }
    return out;
}

}  // namespace swmap
