#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "swmap/tensor_symbol.hpp"
#include "swmap/verification.hpp"

namespace swmap {

/// Raised when a right-hand side fails its cocycle or projector check, or a
/// lower component breaks a precondition of the recursion.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MorphismSettings {
    int n = 2;
    Deformation theta;
    Deformation theta_prime;
    int L = 2;  // highest order
    int D = 3;  // x-degree per argument that evaluations must reproduce exactly
};

enum class ComponentKind { Prime, DoublePrime };

/// f'_l (all arguments of degree 1, output of degree 1) or f''_{l,k}
/// (argument k of degree 0, output of degree 0).
struct MorphismComponent {
    int order = 1;
    ComponentKind kind = ComponentKind::Prime;
    int position = 0;  // k for DoublePrime
    TensorSymbol symbol;
};

/// Truncated A-infinity morphism f_1, f_2, ... from A_theta to A_theta'.
/// Order l is stored as one symbol holding f'_l and all f''_{l,k}; its slot
/// degree bound is L*D + 2(L-l), so every order can feed the next one.
class Morphism {
public:
    Morphism() = default;
    explicit Morphism(MorphismSettings s);

    const MorphismSettings& settings() const { return s_; }
    int dim() const { return s_.n; }
    int order() const { return static_cast<int>(f_.size()); }  // highest order present
    int bound(int l) const { return s_.L * s_.D + 2 * (s_.L - l); }

    /// Assembled f_l; zero symbol for orders above order().
    TensorSymbol at(int l) const;
    void push(TensorSymbol f_l);
    void set(int l, TensorSymbol f_l);

    TensorSymbol prime(int l) const;
    TensorSymbol doubleprime(int l, int k) const;
    std::vector<MorphismComponent> components() const;
    static Morphism from_components(MorphismSettings s, const std::vector<MorphismComponent>& parts);

    friend bool operator==(const Morphism& a, const Morphism& b) { return a.f_ == b.f_; }

private:
    MorphismSettings s_;
    std::vector<TensorSymbol> f_;
};

/// f_1 = id: a0 -> a0 and a_i xi^i -> a_i xi^i.
TensorSymbol identity_component(int n);

/// Psi_l = M(f_{l-1}) - sum_i f_i *' f_{l-i}; delta f_l must equal it.
TensorSymbol build_psi(const Morphism& f, int l, int bound);
/// Right-hand side of the closed subsystem for f''_l: d_l f''_l = Theta''_l.
TensorSymbol build_theta_doubleprime(const Morphism& f, int l);
/// Right-hand side for f'_l: d_l f'_l = Theta'_l, using the solved f''_l.
TensorSymbol build_theta_prime(const Morphism& f, int l, const TensorSymbol& fpp_l);

/// f''_l = h Theta''_l, then f'_l = h Theta'_l, for l = 1..L.
Morphism solve_recursion(const MorphismSettings& s);
/// Solves the orders above f.order() up to `up_to` (default L) by the same recursion.
Morphism extend_recursion(Morphism f, std::optional<int> up_to = std::nullopt);

/// Evaluates delta f_l = Psi_l concretely on every tuple of basis monomials
/// with one or two degree-0 arguments, each of x-degree <= degree_bound.
VerificationReport verify_component_equations(const Morphism& f, int l, int degree_bound, int jobs = 1);

/// d_l f_l - d' f_l + Psi_l per order l = 1..L (all zero for a morphism).
std::vector<TensorSymbol> mc_residual(const Morphism& f);

}  // namespace swmap
