#include "swmap/moyal.hpp"

#include <stdexcept>

namespace swmap {

AElement::AElement(int n) : a0_(n), xi_(static_cast<std::size_t>(n), XPolynomial(n)) {}

AElement::AElement(XPolynomial a0, std::vector<XPolynomial> xi) : a0_(std::move(a0)), xi_(std::move(xi))
{
    if (static_cast<int>(xi_.size()) != a0_.dim())
        throw std::invalid_argument("AElement: xi part length != dimension");
    for (const auto& p : xi_)
        if (p.dim() != a0_.dim())
            throw std::invalid_argument("AElement: component dimension mismatch");
}

AElement AElement::scalar(int n, const ThetaScalar& c)
{
    AElement a(n);
    a.a0_ = XPolynomial::constant(n, c);
    return a;
}

AElement AElement::degree0(XPolynomial a0)
{
    int n = a0.dim();
    return AElement(std::move(a0), std::vector<XPolynomial>(static_cast<std::size_t>(n), XPolynomial(n)));
}

AElement AElement::degree1(std::vector<XPolynomial> xi)
{
    if (xi.empty())
        throw std::invalid_argument("AElement: empty xi part");
    int n = xi.front().dim();
    return AElement(XPolynomial(n), std::move(xi));
}

AElement AElement::x(int n, int i)
{
    return degree0(XPolynomial::variable(n, i));
}

AElement AElement::xi(int n, int i)
{
    AElement a(n);
    a.xi_.at(i) = XPolynomial::constant(n, ThetaScalar(1));
    return a;
}

bool AElement::is_zero() const
{
    return is_degree0() && a0_.is_zero();
}

bool AElement::is_degree0() const
{
    for (const auto& p : xi_)
        if (!p.is_zero())
            return false;
    return true;
}

bool AElement::is_degree1() const
{
    return a0_.is_zero();
}

int AElement::x_degree() const
{
    int d = a0_.degree();
    for (const auto& p : xi_)
        d = std::max(d, p.degree());
    return d;
}

AElement& AElement::operator+=(const AElement& o)
{
    if (o.dim() != dim())
        throw std::invalid_argument("AElement dimension mismatch");
    a0_ += o.a0_;
    for (std::size_t i = 0; i < xi_.size(); ++i)
        xi_[i] += o.xi_[i];
    return *this;
}

AElement& AElement::operator-=(const AElement& o)
{
    if (o.dim() != dim())
        throw std::invalid_argument("AElement dimension mismatch");
    a0_ -= o.a0_;
    for (std::size_t i = 0; i < xi_.size(); ++i)
        xi_[i] -= o.xi_[i];
    return *this;
}

AElement& AElement::operator*=(const ThetaScalar& c)
{
    a0_ *= c;
    for (auto& p : xi_)
        p *= c;
    return *this;
}

AElement AElement::specialized(const std::vector<std::optional<Rational>>& assignment) const
{
    AElement r(dim());
    r.a0_ = a0_.specialized(assignment);
    for (std::size_t i = 0; i < xi_.size(); ++i)
        r.xi_[i] = xi_[i].specialized(assignment);
    return r;
}

AElement AElement::theta_truncated(int k) const
{
    AElement r(dim());
    r.a0_ = a0_.theta_truncated(k);
    for (std::size_t i = 0; i < xi_.size(); ++i)
        r.xi_[i] = xi_[i].theta_truncated(k);
    return r;
}

namespace {

struct PairFactor {
    int i, j;
    ThetaScalar half_theta;  // theta^{ij} / 2
};

std::vector<PairFactor> ordered_pairs(const Deformation& theta)
{
    std::vector<PairFactor> pairs;
    for (int i = 0; i < theta.dim(); ++i)
        for (int j = 0; j < theta.dim(); ++j) {
            if (i == j)
                continue;
            ThetaScalar t = theta(i, j);
            if (!t.is_zero())
                pairs.push_back({i, j, t * Rational(1, 2)});
        }
    return pairs;
}

// The exponential factorizes over ordered pairs (i,j) since all the
// bidifferential operators d_i (x) d_j commute.
void expand_monomial_pair(const std::vector<PairFactor>& pairs, std::size_t pos, MultiIndex left,
                          MultiIndex right, const ThetaScalar& coef, XPolynomial& out)
{
    if (pos == pairs.size()) {
        out.add_term(left + right, coef);
        return;
    }
    const auto& pf = pairs[pos];
    int kmax = std::min(left[pf.i], right[pf.j]);
    ThetaScalar c = coef;
    for (int k = 0;; ++k) {
        expand_monomial_pair(pairs, pos + 1, left, right, c, out);
        if (k == kmax)
            break;
        // advance to order k+1: multiply by (theta/2) * left_i * right_j / (k+1)
        c = c * pf.half_theta * ratio(left[pf.i] * right[pf.j], k + 1);
        left.set(pf.i, left[pf.i] - 1);
        right.set(pf.j, right[pf.j] - 1);
    }
}

}  // namespace

std::string to_string(const AElement& a, const std::vector<std::string>& names)
{
    std::string out;
    if (!a.a0().is_zero())
        out = a.a0().str(names);
    for (int i = 0; i < a.dim(); ++i) {
        if (a.coeff(i).is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        out += "(" + a.coeff(i).str(names) + ")*xi" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

XPolynomial moyal(const XPolynomial& f, const XPolynomial& g, const Deformation& theta)
{
    if (f.dim() != g.dim() || f.dim() != theta.dim())
        throw std::invalid_argument("moyal: dimension mismatch");
    auto pairs = ordered_pairs(theta);
    XPolynomial out(f.dim());
    for (const auto& [ma, ca] : f.terms())
        for (const auto& [mb, cb] : g.terms())
            expand_monomial_pair(pairs, 0, ma, mb, ca * cb, out);
    return out;
}

XPolynomial moyal_commutator(const XPolynomial& f, const XPolynomial& g, const Deformation& theta)
{
    return moyal(f, g, theta) - moyal(g, f, theta);
}

AElement star(const AElement& a, const AElement& b, const Deformation& theta)
{
    if (a.dim() != b.dim() || a.dim() != theta.dim())
        throw std::invalid_argument("star: dimension mismatch");
    int n = a.dim();
    XPolynomial r0 = moyal(a.a0(), b.a0(), theta);
    std::vector<XPolynomial> r(static_cast<std::size_t>(n), XPolynomial(n));
    for (int j = 0; j < n; ++j) {
        if (!a.coeff(j).is_zero())
            r[j] += moyal(a.coeff(j), b.a0(), theta);
        if (!b.coeff(j).is_zero())
            r[j] += moyal(a.a0(), b.coeff(j), theta);
    }
    return AElement(std::move(r0), std::move(r));
}

AElement star_commutator(const AElement& a, const AElement& b, const Deformation& theta)
{
    return star(a, b, theta) - star(b, a, theta);
}

AElement differential_d(const AElement& a)
{
    int n = a.dim();
    std::vector<XPolynomial> r;
    r.reserve(n);
    for (int i = 0; i < n; ++i)
        r.push_back(a.a0().partial(i));
    return AElement(XPolynomial(n), std::move(r));
}

AElement dstar(const AElement& a)
{
    int n = a.dim();
    XPolynomial r(n);
    for (int i = 0; i < n; ++i)
        r += XPolynomial::variable(n, i) * a.coeff(i);
    return AElement::degree0(std::move(r));
}

bool in_Z(const AElement& a)
{
    return differential_d(a).is_zero() && dstar(a).is_zero();
}

AElement covariant_derivative(const AElement& a, const AElement& c, const Deformation& theta)
{
    if (!a.is_degree1())
        throw std::invalid_argument("covariant_derivative: connection must be of degree 1");
    return differential_d(c) + star(a, c, theta) - star(c, a, theta);
}

FieldStrength::FieldStrength(int n) : n_(n), f_(static_cast<std::size_t>(n * n), XPolynomial(n)) {}

void FieldStrength::set(int i, int j, XPolynomial v)
{
    f_[j * n_ + i] = -v;
    f_[i * n_ + j] = std::move(v);
}

FieldStrength field_strength(const AElement& gauge_field, const Deformation& theta)
{
    if (!gauge_field.is_degree1())
        throw std::invalid_argument("field_strength: gauge field must be of degree 1");
    int n = gauge_field.dim();
    FieldStrength F(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& Ai = gauge_field.coeff(i);
            const auto& Aj = gauge_field.coeff(j);
            F.set(i, j, Aj.partial(i) - Ai.partial(j) + moyal_commutator(Ai, Aj, theta));
        }
    return F;
}

std::pair<AElement, XPolynomial> first_order_reference(const AElement& gauge_field,
                                                       const XPolynomial& lambda,
                                                       const Deformation& theta)
{
    if (!gauge_field.is_degree1())
        throw std::invalid_argument("first_order_reference: gauge field must be of degree 1");
    int n = gauge_field.dim();
    const auto& A = gauge_field.xi_part();
    std::vector<XPolynomial> hat(A);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                ThetaScalar t = theta(k, j);
                if (t.is_zero() || A[k].is_zero())
                    continue;
                // d_j A_i + F_ji with the commutative F_ji = d_j A_i - d_i A_j
                XPolynomial bracket = A[i].partial(j) * ThetaScalar(2) - A[j].partial(i);
                hat[i] -= A[k] * bracket * (t * Rational(1, 2));
            }
    XPolynomial lhat = lambda;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ThetaScalar t = theta(i, j);
            if (!t.is_zero())
                lhat += lambda.partial(i) * A[j] * (t * Rational(1, 2));
        }
    return {AElement::degree1(std::move(hat)), lhat};
}

CohomologySplit cohomology_representative(const AElement& a)
{
    if (!a.is_degree1())
        throw std::invalid_argument("cohomology_representative: input must be of degree 1");
    int n = a.dim();
    XPolynomial b(n);
    for (int i = 0; i < n; ++i)
        for (const auto& [m, c] : a.coeff(i).terms())
            b.add_term(m + MultiIndex::unit(n, i), c * Rational(1, m.degree() + 1));
    AElement exact = differential_d(AElement::degree0(b));
    AElement z = a - exact;
    return {std::move(b), std::move(exact), std::move(z)};
}

}  // namespace swmap
