#include "swmap/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace swmap {

template <VarFamily F>
Polynomial<F> Polynomial<F>::constant(int n, const ThetaScalar& c)
{
    Polynomial p(n);
    p.add_term(MultiIndex(n), c);
    return p;
}

template <VarFamily F>
Polynomial<F> Polynomial<F>::variable(int n, int i)
{
    if (i < 0 || i >= n)
        throw std::out_of_range("variable index out of range");
    Polynomial p(n);
    p.add_term(MultiIndex::unit(n, i), ThetaScalar(1));
    return p;
}

template <VarFamily F>
Polynomial<F> Polynomial<F>::monomial(const MultiIndex& m, const ThetaScalar& c)
{
    Polynomial p(m.dim());
    p.add_term(m, c);
    return p;
}

template <VarFamily F>
int Polynomial<F>::degree() const
{
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

template <VarFamily F>
ThetaScalar Polynomial<F>::coefficient(const MultiIndex& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? ThetaScalar{} : it->second;
}

template <VarFamily F>
void Polynomial<F>::add_term(const MultiIndex& m, const ThetaScalar& c)
{
    if (m.dim() != n_)
        throw std::invalid_argument("dimension mismatch");
    if (c.is_zero() || !in_bound(m))
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

template <VarFamily F>
Polynomial<F> Polynomial<F>::with_bound(std::optional<int> bound) const
{
    Polynomial r(n_, bound);
    for (const auto& [m, c] : terms_)
        r.add_term(m, c);
    return r;
}

template <VarFamily F>
void Polynomial<F>::check_same(const Polynomial& o) const
{
    if (o.n_ != n_)
        throw std::invalid_argument("polynomial dimension mismatch");
}

template <VarFamily F>
Polynomial<F>& Polynomial<F>::operator+=(const Polynomial& o)
{
    check_same(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

template <VarFamily F>
Polynomial<F>& Polynomial<F>::operator-=(const Polynomial& o)
{
    check_same(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

template <VarFamily F>
Polynomial<F>& Polynomial<F>::operator*=(const ThetaScalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = it->second * c;
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

template <VarFamily F>
Polynomial<F> Polynomial<F>::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

template <VarFamily G>
Polynomial<G> operator*(const Polynomial<G>& a, const Polynomial<G>& b)
{
    a.check_same(b);
    std::optional<int> bound = a.bound_;
    if (b.bound_)
        bound = bound ? std::min(*bound, *b.bound_) : b.bound_;
    Polynomial<G> r(a.n_, bound);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            if (!bound || ma.degree() + mb.degree() <= *bound)
                r.add_term(ma + mb, ca * cb);
    return r;
}

template <VarFamily F>
Polynomial<F> Polynomial<F>::partial(int i) const
{
    if (i < 0 || i >= n_)
        throw std::out_of_range("partial derivative index out of range");
    Polynomial r(n_, bound_);
    for (const auto& [m, c] : terms_) {
        int e = m[i];
        if (e == 0)
            continue;
        MultiIndex d = m;
        d.set(i, e - 1);
        r.add_term(d, c * Rational(e));
    }
    return r;
}

template <VarFamily F>
Polynomial<F> Polynomial<F>::specialized(const std::vector<std::optional<Rational>>& assignment) const
{
    Polynomial r(n_, bound_);
    for (const auto& [m, c] : terms_)
        r.add_term(m, c.specialized(assignment));
    return r;
}

template <VarFamily F>
Polynomial<F> Polynomial<F>::partially_specialized(
    const std::vector<std::optional<Rational>>& assignment) const
{
    Polynomial r(n_, bound_);
    for (const auto& [m, c] : terms_)
        r.add_term(m, c.partially_specialized(assignment));
    return r;
}

template <VarFamily F>
Polynomial<F> Polynomial<F>::theta_truncated(int k) const
{
    Polynomial r(n_, bound_);
    for (const auto& [m, c] : terms_)
        r.add_term(m, c.truncated(k));
    return r;
}

template <VarFamily F>
Polynomial<F> Polynomial<F>::theta_homogeneous_part(int k) const
{
    Polynomial r(n_, bound_);
    for (const auto& [m, c] : terms_)
        r.add_term(m, c.homogeneous_part(k));
    return r;
}

template <VarFamily F>
std::string Polynomial<F>::str(const std::vector<std::string>& sym_names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // highest degree first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first)
            os << " + ";
        first = false;
        bool is_const = m.degree() == 0;
        auto r = c.as_rational();
        if (!(r && *r == 1 && !is_const))
            os << "(" << c.str(sym_names) << ")";
        bool star = !(r && *r == 1 && !is_const);
        for (int i = 0; i < n_; ++i) {
            if (m[i] == 0)
                continue;
            if (star)
                os << "*";
            os << (F == VarFamily::X ? "x" : "p") << (i + 1);
            if (m[i] > 1)
                os << "^" << m[i];
            star = true;
        }
    }
    return os.str();
}

PPolynomial dilation_integral(const PPolynomial& f)
{
    PPolynomial r(f.dim(), f.bound());
    for (const auto& [m, c] : f.terms())
        r.add_term(m, c * Rational(1, m.degree() + 1));
    return r;
}

template class Polynomial<VarFamily::X>;
template class Polynomial<VarFamily::P>;
template XPolynomial operator*(const XPolynomial&, const XPolynomial&);
template PPolynomial operator*(const PPolynomial&, const PPolynomial&);

}  // namespace swmap
