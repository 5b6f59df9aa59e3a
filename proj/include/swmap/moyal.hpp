#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swmap/deformation.hpp"
#include "swmap/polynomial.hpp"

namespace swmap {

/// Element a0(x) + a_i(x) xi^i of the algebra generated by x^i (degree 0)
/// and xi^i (degree 1) with xi^i xi^j = 0.
class AElement {
public:
    AElement() = default;
    explicit AElement(int n);
    AElement(XPolynomial a0, std::vector<XPolynomial> xi);

    static AElement scalar(int n, const ThetaScalar& c);
    static AElement degree0(XPolynomial a0);
    static AElement degree1(std::vector<XPolynomial> xi);
    /// x^i as an element (0-based i)
    static AElement x(int n, int i);
    /// xi^i as an element (0-based i)
    static AElement xi(int n, int i);

    int dim() const { return a0_.dim(); }
    const XPolynomial& a0() const { return a0_; }
    const XPolynomial& coeff(int i) const { return xi_.at(i); }
    const std::vector<XPolynomial>& xi_part() const { return xi_; }

    bool is_zero() const;
    bool is_degree0() const;  // no xi part
    bool is_degree1() const;  // no a0 part
    /// Max x-degree over all components, -1 for zero.
    int x_degree() const;

    AElement& operator+=(const AElement& o);
    AElement& operator-=(const AElement& o);
    AElement& operator*=(const ThetaScalar& c);
    friend AElement operator+(AElement a, const AElement& b) { return a += b; }
    friend AElement operator-(AElement a, const AElement& b) { return a -= b; }
    friend AElement operator*(AElement a, const ThetaScalar& c) { return a *= c; }
    friend AElement operator*(const ThetaScalar& c, AElement a) { return a *= c; }
    friend bool operator==(const AElement& a, const AElement& b) { return a.a0_ == b.a0_ && a.xi_ == b.xi_; }
    friend bool operator!=(const AElement& a, const AElement& b) { return !(a == b); }

    AElement specialized(const std::vector<std::optional<Rational>>& assignment) const;
    AElement theta_truncated(int k) const;

private:
    XPolynomial a0_;
    std::vector<XPolynomial> xi_;
};

/// "a0 + (a_1)*xi1 + ..." with deformation symbols named by names.
std::string to_string(const AElement& a, const std::vector<std::string>& names);

/// Weyl-Moyal product of two x-polynomials:
/// sum_k 1/k! (1/2 theta^{ij} d_i (x) d_j)^k f (x) g, multiplied.
XPolynomial moyal(const XPolynomial& f, const XPolynomial& g, const Deformation& theta);
XPolynomial moyal_commutator(const XPolynomial& f, const XPolynomial& g, const Deformation& theta);

/// Star product on A_theta; xi rides along and xi xi = 0.
AElement star(const AElement& a, const AElement& b, const Deformation& theta);
AElement star_commutator(const AElement& a, const AElement& b, const Deformation& theta);

/// d x^i = xi^i, d xi^i = 0.
AElement differential_d(const AElement& a);
/// d* a = x^i a_i(x).
AElement dstar(const AElement& a);
bool in_Z(const AElement& a);

/// D_a(c) = dc + a * c - c * a, a purely of degree 1.
AElement covariant_derivative(const AElement& a, const AElement& c, const Deformation& theta);

/// F_ij = d_i A_j - d_j A_i + [A_i, A_j]_*, stored as a full antisymmetric array.
class FieldStrength {
public:
    explicit FieldStrength(int n);
    int dim() const { return n_; }
    const XPolynomial& operator()(int i, int j) const { return f_[i * n_ + j]; }
    void set(int i, int j, XPolynomial v);  // also sets (j,i) = -v
    friend bool operator==(const FieldStrength& a, const FieldStrength& b) { return a.f_ == b.f_; }

private:
    int n_;
    std::vector<XPolynomial> f_;
};

FieldStrength field_strength(const AElement& gauge_field, const Deformation& theta);

/// Closed-form gauge field / parameter maps correct to first order in theta.
std::pair<AElement, XPolynomial> first_order_reference(const AElement& gauge_field,
                                                       const XPolynomial& lambda,
                                                       const Deformation& theta);

struct CohomologySplit {
    XPolynomial potential;  // b
    AElement exact;         // d(b)
    AElement cocycle;       // z, with d* z = 0
};

/// Splits a degree-1 element as a = d(b) + z with d* z = 0, using the radial
/// homotopy b(x) = \int_0^1 x^i a_i(tx) dt.
CohomologySplit cohomology_representative(const AElement& a);

}  // namespace swmap
