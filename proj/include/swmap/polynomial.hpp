#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swmap/multi_index.hpp"
#include "swmap/theta_scalar.hpp"

namespace swmap {

enum class VarFamily { X, P };

template <VarFamily F>
class Polynomial;
template <VarFamily G>
Polynomial<G> operator*(const Polynomial<G>& a, const Polynomial<G>& b);

/// Sparse commutative polynomial with ThetaScalar coefficients, in x^1..x^n
/// (VarFamily::X) or p_1..p_n (VarFamily::P). An optional bound drops every
/// monomial of total degree above it.
template <VarFamily F>
class Polynomial {
public:
    using Terms = std::map<MultiIndex, ThetaScalar, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(int n, std::optional<int> bound = std::nullopt)
        : n_(MultiIndex::check_dim(n)), bound_(bound) {}

    static Polynomial constant(int n, const ThetaScalar& c);
    static Polynomial variable(int n, int i);
    static Polynomial monomial(const MultiIndex& m, const ThetaScalar& c);

    int dim() const { return n_; }
    std::optional<int> bound() const { return bound_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for zero
    ThetaScalar coefficient(const MultiIndex& m) const;

    void add_term(const MultiIndex& m, const ThetaScalar& c);
    Polynomial with_bound(std::optional<int> bound) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const ThetaScalar& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const ThetaScalar& c) { return a *= c; }
    friend Polynomial operator*(const ThetaScalar& c, Polynomial a) { return a *= c; }
    template <VarFamily G>
    friend Polynomial<G> operator*(const Polynomial<G>& a, const Polynomial<G>& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Formal partial derivative in variable i (0-based).
    Polynomial partial(int i) const;

    Polynomial specialized(const std::vector<std::optional<Rational>>& assignment) const;
    Polynomial partially_specialized(const std::vector<std::optional<Rational>>& assignment) const;
    /// Keep only coefficient terms of deformation degree <= k.
    Polynomial theta_truncated(int k) const;
    Polynomial theta_homogeneous_part(int k) const;

    std::string str(const std::vector<std::string>& sym_names) const;

private:
    void check_same(const Polynomial& o) const;
    bool in_bound(const MultiIndex& m) const { return !bound_ || m.degree() <= *bound_; }

    int n_ = 1;
    std::optional<int> bound_;
    Terms terms_;
};

using XPolynomial = Polynomial<VarFamily::X>;
using PPolynomial = Polynomial<VarFamily::P>;

/// \int_0^1 f(tp) dt, monomialwise p^a -> p^a / (|a| + 1).
PPolynomial dilation_integral(const PPolynomial& f);

extern template class Polynomial<VarFamily::X>;
extern template class Polynomial<VarFamily::P>;
extern template XPolynomial operator*(const XPolynomial&, const XPolynomial&);
extern template PPolynomial operator*(const PPolynomial&, const PPolynomial&);

}  // namespace swmap
