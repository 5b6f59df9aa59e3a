#include "swmap/deformation.hpp"

#include <stdexcept>

#include "swmap/multi_index.hpp"

namespace swmap {

Deformation Deformation::zero(int n)
{
    Deformation d;
    d.n_ = MultiIndex::check_dim(n);
    d.upper_.assign(n * (n - 1) / 2, ThetaScalar{});
    return d;
}

Deformation Deformation::symbolic(int n, int first_symbol)
{
    Deformation d = zero(n);
    d.symbolic_ = true;
    d.first_symbol_ = first_symbol;
    if (first_symbol + d.symbol_count() > kMaxSymbols)
        throw std::invalid_argument("too many deformation symbols for this dimension");
    for (int k = 0; k < static_cast<int>(d.upper_.size()); ++k)
        d.upper_[k] = ThetaScalar::symbol(first_symbol + k);
    return d;
}

Deformation Deformation::from_matrix(const std::vector<std::vector<Rational>>& m)
{
    int n = static_cast<int>(m.size());
    Deformation d = zero(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            throw std::invalid_argument("deformation matrix is not square");
        if (m[i][i] != 0)
            throw std::invalid_argument("deformation matrix has a nonzero diagonal entry");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (m[i][j] != -m[j][i])
                throw std::invalid_argument("deformation matrix is not antisymmetric");
            d.upper_[d.index(i, j)] = ThetaScalar(m[i][j]);
        }
    return d;
}

ThetaScalar Deformation::operator()(int i, int j) const
{
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::out_of_range("deformation index out of range");
    if (i == j)
        return {};
    if (i < j)
        return upper_[index(i, j)];
    return -upper_[index(j, i)];
}

bool Deformation::is_zero() const
{
    for (const auto& e : upper_)
        if (!e.is_zero())
            return false;
    return true;
}

std::vector<std::string> symbol_names(const Deformation& source, const Deformation& target)
{
    std::vector<std::string> names(
        static_cast<std::size_t>(source.symbol_count() + target.symbol_count()));
    auto fill = [&](const Deformation& d, const char* prefix) {
        if (!d.is_symbolic())
            return;
        int k = d.first_symbol();
        for (int i = 0; i < d.dim(); ++i)
            for (int j = i + 1; j < d.dim(); ++j)
                names.at(k++) = prefix + std::to_string(i + 1) + std::to_string(j + 1);
    };
    fill(source, "t");
    fill(target, "s");
    return names;
}

}  // namespace swmap
