#pragma once

#include <string>
#include <vector>

#include "swmap/theta_scalar.hpp"

namespace swmap {

/// Constant antisymmetric deformation matrix theta^{ij}. Only the entries
/// with i < j are stored; swapped lookups are negated and the diagonal is 0.
class Deformation {
public:
    Deformation() = default;
    static Deformation zero(int n);
    /// Entry (i,j), i<j, becomes the symbol with index first_symbol + k in
    /// row-major upper-triangle order.
    static Deformation symbolic(int n, int first_symbol);
    /// Throws std::invalid_argument unless the matrix is square and antisymmetric.
    static Deformation from_matrix(const std::vector<std::vector<Rational>>& m);

    int dim() const { return n_; }
    ThetaScalar operator()(int i, int j) const;
    bool is_zero() const;
    /// Names of the symbols used, in index order (empty for numeric matrices).
    int first_symbol() const { return first_symbol_; }
    int symbol_count() const { return symbolic_ ? n_ * (n_ - 1) / 2 : 0; }
    bool is_symbolic() const { return symbolic_; }

    friend bool operator==(const Deformation& a, const Deformation& b)
    {
        return a.n_ == b.n_ && a.upper_ == b.upper_;
    }

private:
    int index(int i, int j) const { return i * n_ - i * (i + 1) / 2 + (j - i - 1); }

    int n_ = 0;
    bool symbolic_ = false;
    int first_symbol_ = 0;
    std::vector<ThetaScalar> upper_;
};

/// Symbol names for a session: "t<i><j>" for the source matrix and "s<i><j>"
/// for the target matrix, 1-based indices.
std::vector<std::string> symbol_names(const Deformation& source, const Deformation& target);

}  // namespace swmap
