#pragma once

#include <optional>
#include <vector>

#include "swmap/solver.hpp"

namespace swmap {

struct GaugeConfig {
    AElement A;  // degree 1
    XPolynomial lambda, lambda1, lambda2;
};

/// A_hat = sum_{l <= L} f'_l(A, ..., A).
AElement evaluate_gauge_field(const Morphism& f, const AElement& A, int L);
/// lambda_hat = sum_{l <= L} sum_k f''_{l,k}(A, .., lambda at k, .., A).
XPolynomial evaluate_gauge_param(const Morphism& f, const XPolynomial& lambda, const AElement& A, int L);

/// Parts of A_hat (index m = number of A's, m = 0..L) and lambda_hat (index m,
/// m = 0..L-1).
std::vector<AElement> gauge_field_parts(const Morphism& f, const AElement& A, int L);
std::vector<AElement> gauge_param_parts(const Morphism& f, const XPolynomial& lambda, const AElement& A, int L);

/// Infinitesimal gauge covariance: the variation of A_hat under
/// A -> A + dlambda + [A, lambda] equals dlambda_hat + [A_hat, lambda_hat]',
/// compared separately at each A-homogeneity m = 0..L-1. With theta_cap set,
/// only deformation degree <= theta_cap is compared.
VerificationReport check_sw1(const Morphism& f, const AElement& A, const XPolynomial& lambda, int L,
                             std::optional<int> theta_cap = std::nullopt);
/// Consistency: delta_2 lambda1_hat - delta_1 lambda2_hat
///   = [lambda1_hat, lambda2_hat]' - lambda_hat([lambda1, lambda2], A),
/// at each A-homogeneity m = 0..L-2.
VerificationReport check_sw2(const Morphism& f, const AElement& A, const XPolynomial& lambda1,
                             const XPolynomial& lambda2, int L, std::optional<int> theta_cap = std::nullopt);

/// sum over slot permutations with the Koszul sign of the tag-0 slots; two
/// cochains with the same symmetrization agree on all diagonal evaluations.
TensorSymbol graded_symmetrization(const TensorSymbol& s);

/// The closed-form first-order map from the commutative theory, as an order-2
/// morphism: f'_2(a, b)_i = -1/2 theta'^{kj} a_k (2 d_j b_i - d_i b_j),
/// f''_{2,0}(lambda, a) = 1/2 theta'^{ij} d_i lambda a_j, f''_{2,1} = 0.
/// Requires a zero source deformation.
Morphism first_order_morphism(const MorphismSettings& s);

}  // namespace swmap
