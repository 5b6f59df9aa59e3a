#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace swmap {

using Rational = mpq_class;

Rational parse_rational(const std::string& num, const std::string& den = "1");
std::string to_string(const Rational& q);
/// num/den in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational ratio(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline constexpr int kMaxSymbols = 8;

/// Exponent vector over the deformation symbols t_1..t_m, packed 8 bits per
/// symbol; symbol 0 sits in the most significant byte so plain integer order
/// is lexicographic.
class SymMonomial {
public:
    SymMonomial() = default;
    static SymMonomial variable(int index, int power = 1);

    int exponent(int index) const { return static_cast<int>((bits_ >> shift(index)) & 0xFFu); }
    int degree() const;
    SymMonomial operator*(SymMonomial other) const;
    std::uint64_t bits() const { return bits_; }

    friend bool operator==(SymMonomial a, SymMonomial b) { return a.bits_ == b.bits_; }
    // graded lexicographic
    friend bool operator<(SymMonomial a, SymMonomial b);

private:
    static int shift(int index) { return 8 * (kMaxSymbols - 1 - index); }
    std::uint64_t bits_ = 0;
};

/// Sparse polynomial over Q in the commuting deformation symbols.
class ThetaScalar {
public:
    using Term = std::pair<SymMonomial, Rational>;

    ThetaScalar() = default;
    ThetaScalar(const Rational& c);  // NOLINT(google-explicit-constructor)
    ThetaScalar(long c) : ThetaScalar(Rational(c)) {}  // NOLINT
    ThetaScalar(int c) : ThetaScalar(Rational(c)) {}   // NOLINT
    static ThetaScalar symbol(int index);
    static ThetaScalar monomial(SymMonomial m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::optional<Rational> as_rational() const;
    int degree() const;  // -1 for zero

    ThetaScalar& operator+=(const ThetaScalar& other);
    ThetaScalar& operator-=(const ThetaScalar& other);
    ThetaScalar& operator*=(const Rational& c);
    ThetaScalar& operator*=(const ThetaScalar& other);
    ThetaScalar operator-() const;

    friend ThetaScalar operator+(ThetaScalar a, const ThetaScalar& b) { return a += b; }
    friend ThetaScalar operator-(ThetaScalar a, const ThetaScalar& b) { return a -= b; }
    friend ThetaScalar operator*(const ThetaScalar& a, const ThetaScalar& b);
    friend ThetaScalar operator*(ThetaScalar a, const Rational& c) { return a *= c; }
    friend bool operator==(const ThetaScalar& a, const ThetaScalar& b);
    friend bool operator!=(const ThetaScalar& a, const ThetaScalar& b) { return !(a == b); }

    /// Terms of total symbol degree <= max_degree.
    ThetaScalar truncated(int max_degree) const;
    ThetaScalar homogeneous_part(int degree) const;

    /// Substitute rationals for symbols; throws if a present symbol is unassigned.
    ThetaScalar specialized(const std::vector<std::optional<Rational>>& assignment) const;
    /// Same, but unassigned symbols stay symbolic.
    ThetaScalar partially_specialized(const std::vector<std::optional<Rational>>& assignment) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    void add_term(SymMonomial m, const Rational& c);
    std::vector<Term> terms_;  // sorted by SymMonomial order, no zero coefficients
};

}  // namespace swmap
