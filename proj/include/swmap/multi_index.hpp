#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>

namespace swmap {

inline constexpr int kMaxDim = 8;

/// Exponent vector of a monomial x^a or p^a in n variables.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int n) : n_(static_cast<std::uint8_t>(check_dim(n))) {}
    MultiIndex(int n, std::initializer_list<int> exps);
    static MultiIndex unit(int n, int i) { MultiIndex m(n); m.e_[i] = 1; return m; }

    int dim() const { return n_; }
    int operator[](int i) const { return e_[i]; }
    void set(int i, int v);
    int degree() const;

    bool divides(const MultiIndex& other) const;
    MultiIndex operator+(const MultiIndex& o) const;
    MultiIndex operator-(const MultiIndex& o) const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

    static int check_dim(int n)
    {
        if (n < 1 || n > kMaxDim)
            throw std::invalid_argument("dimension must be in 1..8");
        return n;
    }

private:
    std::array<std::uint8_t, kMaxDim> e_{};
    std::uint8_t n_ = 0;
};

/// Graded lexicographic order: total degree first, then x1 > x2 > ...
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const
    {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        for (int i = 0; i < a.dim(); ++i)
            if (a[i] != b[i])
                return a[i] < b[i];
        return false;
    }
};

inline MultiIndex::MultiIndex(int n, std::initializer_list<int> exps) : MultiIndex(n)
{
    if (static_cast<int>(exps.size()) != n)
        throw std::invalid_argument("exponent vector length != dimension");
    int i = 0;
    for (int v : exps)
        set(i++, v);
}

inline void MultiIndex::set(int i, int v)
{
    if (i < 0 || i >= n_)
        throw std::out_of_range("variable index out of range");
    if (v < 0 || v > 255)
        throw std::out_of_range("exponent out of range");
    e_[i] = static_cast<std::uint8_t>(v);
}

inline int MultiIndex::degree() const
{
    int d = 0;
    for (int i = 0; i < n_; ++i)
        d += e_[i];
    return d;
}

inline bool MultiIndex::divides(const MultiIndex& other) const
{
    for (int i = 0; i < n_; ++i)
        if (e_[i] > other.e_[i])
            return false;
    return true;
}

inline MultiIndex MultiIndex::operator+(const MultiIndex& o) const
{
    if (o.n_ != n_)
        throw std::invalid_argument("dimension mismatch");
    MultiIndex r(n_);
    for (int i = 0; i < n_; ++i)
        r.set(i, e_[i] + o.e_[i]);
    return r;
}

inline MultiIndex MultiIndex::operator-(const MultiIndex& o) const
{
    MultiIndex r(n_);
    for (int i = 0; i < n_; ++i)
        r.set(i, e_[i] - o.e_[i]);
    return r;
}

}  // namespace swmap
