#include "swmap/theta_scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace swmap {

Rational parse_rational(const std::string& num, const std::string& den)
{
    Rational q;
    try {
        q = Rational(mpz_class(num), mpz_class(den));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + num + "/" + den);
    }
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

SymMonomial SymMonomial::variable(int index, int power)
{
    if (index < 0 || index >= kMaxSymbols)
        throw std::out_of_range("deformation symbol index out of range");
    if (power < 0 || power > 255)
        throw std::overflow_error("symbol exponent out of range");
    SymMonomial m;
    m.bits_ = static_cast<std::uint64_t>(power) << shift(index);
    return m;
}

int SymMonomial::degree() const
{
    int d = 0;
    for (int i = 0; i < kMaxSymbols; ++i)
        d += exponent(i);
    return d;
}

SymMonomial SymMonomial::operator*(SymMonomial other) const
{
    SymMonomial r;
    for (int i = 0; i < kMaxSymbols; ++i) {
        int e = exponent(i) + other.exponent(i);
        if (e > 255)
            throw std::overflow_error("symbol exponent overflow");
        r.bits_ |= static_cast<std::uint64_t>(e) << shift(i);
    }
    return r;
}

bool operator<(SymMonomial a, SymMonomial b)
{
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    return a.bits_ > b.bits_;
}

ThetaScalar::ThetaScalar(const Rational& c)
{
    if (c != 0)
        terms_.emplace_back(SymMonomial{}, c);
}

ThetaScalar ThetaScalar::symbol(int index)
{
    return monomial(SymMonomial::variable(index), Rational(1));
}

ThetaScalar ThetaScalar::monomial(SymMonomial m, const Rational& c)
{
    ThetaScalar s;
    if (c != 0)
        s.terms_.emplace_back(m, c);
    return s;
}

std::optional<Rational> ThetaScalar::as_rational() const
{
    if (terms_.empty())
        return Rational(0);
    if (terms_.size() == 1 && terms_[0].first == SymMonomial{})
        return terms_[0].second;
    return std::nullopt;
}

int ThetaScalar::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

void ThetaScalar::add_term(SymMonomial m, const Rational& c)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, SymMonomial k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    } else if (c != 0) {
        terms_.insert(it, Term{m, c});
    }
}

ThetaScalar& ThetaScalar::operator+=(const ThetaScalar& other)
{
    if (other.terms_.size() == 1) {
        add_term(other.terms_[0].first, other.terms_[0].second);
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = other.terms_.begin(), be = other.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0)
                out.emplace_back(a->first, c);
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

ThetaScalar& ThetaScalar::operator-=(const ThetaScalar& other)
{
    return *this += -other;
}

ThetaScalar ThetaScalar::operator-() const
{
    ThetaScalar r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

ThetaScalar& ThetaScalar::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= c;
    return *this;
}

ThetaScalar& ThetaScalar::operator*=(const ThetaScalar& other)
{
    *this = *this * other;
    return *this;
}

ThetaScalar operator*(const ThetaScalar& a, const ThetaScalar& b)
{
    ThetaScalar r;
    if (a.terms_.empty() || b.terms_.empty())
        return r;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        r.terms_.emplace_back(a.terms_[0].first * b.terms_[0].first,
                              a.terms_[0].second * b.terms_[0].second);
        return r;
    }
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

bool operator==(const ThetaScalar& a, const ThetaScalar& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second)
            return false;
    return true;
}

ThetaScalar ThetaScalar::truncated(int max_degree) const
{
    ThetaScalar r;
    for (const auto& t : terms_)
        if (t.first.degree() <= max_degree)
            r.terms_.push_back(t);
    return r;
}

ThetaScalar ThetaScalar::homogeneous_part(int degree) const
{
    ThetaScalar r;
    for (const auto& t : terms_)
        if (t.first.degree() == degree)
            r.terms_.push_back(t);
    return r;
}

ThetaScalar ThetaScalar::specialized(const std::vector<std::optional<Rational>>& assignment) const
{
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < kMaxSymbols; ++i)
            if (m.exponent(i) != 0 && (i >= static_cast<int>(assignment.size()) || !assignment[i]))
                throw std::invalid_argument("unassigned deformation symbol t" + std::to_string(i));
    return partially_specialized(assignment);
}

ThetaScalar ThetaScalar::partially_specialized(
    const std::vector<std::optional<Rational>>& assignment) const
{
    ThetaScalar r;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        SymMonomial rest;
        for (int i = 0; i < kMaxSymbols; ++i) {
            int e = m.exponent(i);
            if (e == 0)
                continue;
            if (i >= static_cast<int>(assignment.size()) || !assignment[i]) {
                rest = rest * SymMonomial::variable(i, e);
                continue;
            }
            Rational p = 1;
            for (int k = 0; k < e; ++k)
                p *= *assignment[i];
            v *= p;
        }
        r.add_term(rest, v);
    }
    return r;
}

std::string ThetaScalar::str(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        bool unit = (a == 1);
        if (!unit || m == SymMonomial{})
            os << a.get_str();
        bool need_star = !unit;
        for (int i = 0; i < kMaxSymbols; ++i) {
            int e = m.exponent(i);
            if (e == 0)
                continue;
            if (need_star)
                os << "*";
            os << (i < static_cast<int>(names.size()) ? names[i] : "t" + std::to_string(i));
            if (e > 1)
                os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace swmap
