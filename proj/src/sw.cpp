#include "swmap/sw.hpp"

#include <algorithm>
#include <memory>
#include <string>

namespace swmap {

namespace {

// Evaluators for f_1..f_L, built once per call.
class Evaluators {
public:
    Evaluators(const Morphism& f, int L) : n_(f.dim())
    {
        for (int l = 1; l <= L; ++l)
            syms_.push_back(std::make_unique<TensorSymbol>(f.at(l)));
        for (const auto& s : syms_)
            ev_.emplace_back(*s);
    }

    int size() const { return static_cast<int>(ev_.size()); }

    // sum over ordered placements of the specials into distinct positions of
    // f_l, every other argument A
    AElement place(int l, const AElement& A, const std::vector<AElement>& specials) const
    {
        AElement out(n_);
        if (l < 1 || l > size() || static_cast<int>(specials.size()) > l)
            return out;
        std::vector<AElement> args(static_cast<std::size_t>(l), A);
        std::vector<bool> used(static_cast<std::size_t>(l), false);
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == specials.size()) {
                out += ev_[static_cast<std::size_t>(l - 1)](args);
                return;
            }
            for (int p = 0; p < l; ++p) {
                if (used[static_cast<std::size_t>(p)])
                    continue;
                used[static_cast<std::size_t>(p)] = true;
                args[static_cast<std::size_t>(p)] = specials[k];
                self(self, k + 1);
                args[static_cast<std::size_t>(p)] = A;
                used[static_cast<std::size_t>(p)] = false;
            }
        };
        rec(rec, 0);
        return out;
    }

private:
    int n_;
    std::vector<std::unique_ptr<TensorSymbol>> syms_;
    std::vector<SymbolEvaluator> ev_;
};

void check_inputs(const Morphism& f, const AElement& A, const std::vector<const XPolynomial*>& params, int L)
{
    if (L < 1 || L > f.order())
        throw std::invalid_argument("evaluation order L exceeds the morphism");
    if (A.dim() != f.dim() || !A.is_degree1())
        throw std::invalid_argument("gauge field must be a degree-1 element of matching dimension");
    int D = f.settings().D;
    if (A.x_degree() > D)
        throw std::invalid_argument("gauge field x-degree exceeds the truncation bound D");
    for (const auto* p : params) {
        if (p->dim() != f.dim())
            throw std::invalid_argument("gauge parameter dimension mismatch");
        if (p->degree() > D)
            throw std::invalid_argument("gauge parameter x-degree exceeds the truncation bound D");
    }
}

AElement capped(const AElement& a, std::optional<int> cap)
{
    return cap ? a.theta_truncated(*cap) : a;
}

std::vector<AElement> param_parts(const Evaluators& ev, const AElement& lambda, const AElement& A, int L)
{
    std::vector<AElement> out;
    for (int m = 0; m < L; ++m)
        out.push_back(ev.place(m + 1, A, {lambda}));
    return out;
}

void record(VerificationReport& r, int m, const AElement& lhs, const AElement& rhs, const Morphism& f,
            std::optional<int> cap)
{
    r.degrees_checked.push_back(m);
    ++r.checked;
    AElement diff = capped(lhs, cap) - capped(rhs, cap);
    if (diff.is_zero() || !r.pass)
        return;
    r.pass = false;
    r.witness = "homogeneity " + std::to_string(m) + ": lhs - rhs = " +
                to_string(diff, symbol_names(f.settings().theta, f.settings().theta_prime));
}

}  // namespace

std::vector<AElement> gauge_field_parts(const Morphism& f, const AElement& A, int L)
{
    check_inputs(f, A, {}, L);
    Evaluators ev(f, L);
    std::vector<AElement> out{AElement(f.dim())};
    for (int m = 1; m <= L; ++m)
        out.push_back(ev.place(m, A, {}));
    return out;
}

std::vector<AElement> gauge_param_parts(const Morphism& f, const XPolynomial& lambda, const AElement& A, int L)
{
    check_inputs(f, A, {&lambda}, L);
    Evaluators ev(f, L);
    return param_parts(ev, AElement::degree0(lambda), A, L);
}

AElement evaluate_gauge_field(const Morphism& f, const AElement& A, int L)
{
    AElement out(f.dim());
    for (const auto& p : gauge_field_parts(f, A, L))
        out += p;
    return out;
}

XPolynomial evaluate_gauge_param(const Morphism& f, const XPolynomial& lambda, const AElement& A, int L)
{
    AElement out(f.dim());
    for (const auto& p : gauge_param_parts(f, lambda, A, L))
        out += p;
    return out.a0();
}

VerificationReport check_sw1(const Morphism& f, const AElement& A, const XPolynomial& lambda, int L,
                             std::optional<int> theta_cap)
{
    check_inputs(f, A, {&lambda}, L);
    const auto& s = f.settings();
    Evaluators ev(f, L);
    AElement lam = AElement::degree0(lambda);
    AElement dlam = differential_d(lam);
    AElement comm = star_commutator(A, lam, s.theta);
    auto lhat = param_parts(ev, lam, A, L);
    std::vector<AElement> ahat{AElement(f.dim())};
    for (int m = 1; m < L; ++m)
        ahat.push_back(ev.place(m, A, {}));

    VerificationReport r;
    r.identity = "sw1";
    for (int m = 0; m < L; ++m) {
        AElement lhs = ev.place(m + 1, A, {dlam});
        if (m >= 1)
            lhs += ev.place(m, A, {comm});
        AElement rhs = differential_d(lhat[static_cast<std::size_t>(m)]);
        for (int i = 1; i <= m; ++i)
            rhs += star_commutator(ahat[static_cast<std::size_t>(i)], lhat[static_cast<std::size_t>(m - i)], s.theta_prime);
        record(r, m, lhs, rhs, f, theta_cap);
    }
    return r;
}

VerificationReport check_sw2(const Morphism& f, const AElement& A, const XPolynomial& lambda1,
                             const XPolynomial& lambda2, int L, std::optional<int> theta_cap)
{
    check_inputs(f, A, {&lambda1, &lambda2}, L);
    const auto& s = f.settings();
    Evaluators ev(f, L);
    AElement l1 = AElement::degree0(lambda1), l2 = AElement::degree0(lambda2);
    AElement d1 = differential_d(l1), d2 = differential_d(l2);
    AElement c1 = star_commutator(A, l1, s.theta), c2 = star_commutator(A, l2, s.theta);
    AElement bracket = star_commutator(l1, l2, s.theta);
    auto h1 = param_parts(ev, l1, A, L);
    auto h2 = param_parts(ev, l2, A, L);

    VerificationReport r;
    r.identity = "sw2";
    for (int m = 0; m + 1 < L; ++m) {
        AElement lhs = ev.place(m + 2, A, {l1, d2}) - ev.place(m + 2, A, {l2, d1});
        if (m >= 1)
            lhs += ev.place(m + 1, A, {l1, c2}) - ev.place(m + 1, A, {l2, c1});
        AElement rhs = ev.place(m + 1, A, {bracket}) * ThetaScalar(-1);
        for (int i = 0; i <= m; ++i)
            rhs += star_commutator(h1[static_cast<std::size_t>(i)], h2[static_cast<std::size_t>(m - i)], s.theta_prime);
        record(r, m, lhs, rhs, f, theta_cap);
    }
    return r;
}

TensorSymbol graded_symmetrization(const TensorSymbol& s)
{
    TensorSymbol out(s.dim(), s.arity(), s.bound());
    std::vector<int> perm(static_cast<std::size_t>(s.arity()));
    for (const auto& [key, c] : s.raw_terms()) {
        SymbolTerm t = s.decode(key);
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = static_cast<int>(i);
        do {
            SymbolTerm u = t;
            int swaps = 0;
            for (std::size_t i = 0; i < perm.size(); ++i) {
                u.slots[i] = t.slots[static_cast<std::size_t>(perm[i])];
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j] && t.slots[static_cast<std::size_t>(perm[i])].tag == 0 &&
                        t.slots[static_cast<std::size_t>(perm[j])].tag == 0)
                        ++swaps;
            }
            out.add_term(u, swaps % 2 == 0 ? c : -c);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

Morphism first_order_morphism(const MorphismSettings& s)
{
    if (!s.theta.is_zero())
        throw std::invalid_argument("the first-order closed form starts from the commutative product");
    MorphismSettings s2 = s;
    s2.L = std::max(2, s.L);
    Morphism f(s2);
    int n = s.n;
    f.push(identity_component(n));
    TensorSymbol f2(n, 2);
    MultiIndex zero(n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            ThetaScalar t = s.theta_prime(k, j);
            if (t.is_zero())
                continue;
            for (int i = 0; i < n; ++i) {
                // -theta^{kj} a_k d_j b_i + 1/2 theta^{kj} a_k d_i b_j, on xi^i
                f2.add_term(SymbolTerm{zero, i + 1, {SlotIndex{zero, k + 1}, SlotIndex{MultiIndex::unit(n, j), i + 1}}},
                            -t);
                f2.add_term(SymbolTerm{zero, i + 1, {SlotIndex{zero, k + 1}, SlotIndex{MultiIndex::unit(n, i), j + 1}}},
                            t * Rational(1, 2));
            }
            // 1/2 theta^{kj} d_k lambda a_j
            f2.add_term(SymbolTerm{zero, 0, {SlotIndex{MultiIndex::unit(n, k), 0}, SlotIndex{zero, j + 1}}},
                        t * Rational(1, 2));
        }
    f.push(std::move(f2));
    return f;
}

}  // namespace swmap
