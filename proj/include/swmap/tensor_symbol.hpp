#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "swmap/moyal.hpp"
#include "swmap/slot_symbol.hpp"

namespace swmap {

/// One tensor slot p^alpha with a tag: tag 0 reads the x-part a0 of the
/// argument, tag j (1..n) reads the coefficient a_j of xi^j. Tag j carries
/// zeta_j in the slot symbol.
struct SlotIndex {
    MultiIndex p;
    int tag = 0;
    friend bool operator==(const SlotIndex&, const SlotIndex&) = default;
};

/// Decoded monomial of a tensor symbol: head x^a (xi^j)^{0|1} and l slots.
/// head_xi is 0 for no xi, j (1..n) for xi^j.
struct SymbolTerm {
    MultiIndex head;
    int head_xi = 0;
    std::vector<SlotIndex> slots;
    friend bool operator==(const SymbolTerm&, const SymbolTerm&) = default;
};

int slot_degree(const SymbolTerm& t);  // total p-degree over all slots
int tag0_count(const SymbolTerm& t);
/// Degree of the multilinear map: sum of slot degrees (tag 0 -> 0,
/// tag j -> -1), head degree, plus arity - 1.
int symbol_degree(const SymbolTerm& t);
/// Canonical order: head (grlex, then xi), then slots left to right.
bool canonical_less(const SymbolTerm& a, const SymbolTerm& b);

/// Symbol of an l-linear map A_theta^{(x) l} -> A_theta' whose action is
///   head(x) * prod_s d^{alpha_s} (component tag_s of a_s)
/// summed over terms. Slots are independent; the optional bound caps the
/// total p-degree over all slots.
class TensorSymbol {
public:
    using Map = std::unordered_map<std::string, ThetaScalar>;

    TensorSymbol() = default;
    TensorSymbol(int n, int arity, std::optional<int> bound = std::nullopt);

    int dim() const { return n_; }
    int arity() const { return arity_; }
    std::optional<int> bound() const { return bound_; }
    const Map& raw_terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    std::string encode(const SymbolTerm& t) const;
    SymbolTerm decode(const std::string& key) const;
    int key_slot_degree(const std::string& key) const;

    void add_term(const SymbolTerm& t, const ThetaScalar& c);
    void add_raw(const std::string& key, const ThetaScalar& c);
    ThetaScalar coefficient(const SymbolTerm& t) const;

    std::vector<std::pair<SymbolTerm, ThetaScalar>> sorted_terms() const;

    TensorSymbol& operator+=(const TensorSymbol& o);
    TensorSymbol& operator-=(const TensorSymbol& o);
    TensorSymbol& operator*=(const ThetaScalar& c);
    TensorSymbol operator-() const;
    friend TensorSymbol operator+(TensorSymbol a, const TensorSymbol& b) { return a += b; }
    friend TensorSymbol operator-(TensorSymbol a, const TensorSymbol& b) { return a -= b; }
    friend TensorSymbol operator*(TensorSymbol a, const ThetaScalar& c) { return a *= c; }
    friend bool operator==(const TensorSymbol& a, const TensorSymbol& b);
    friend bool operator!=(const TensorSymbol& a, const TensorSymbol& b) { return !(a == b); }

    TensorSymbol with_bound(std::optional<int> bound) const;
    TensorSymbol theta_truncated(int k) const;
    TensorSymbol theta_homogeneous_part(int k) const;
    TensorSymbol specialized(const std::vector<std::optional<Rational>>& assignment) const;
    /// Terms whose head carries xi (true) or not (false).
    TensorSymbol head_xi_part(bool with_xi) const;
    /// Terms with exactly k tag-0 slots.
    TensorSymbol tag0_part(int k) const;

private:
    void check_same(const TensorSymbol& o) const;

    int n_ = 1;
    int arity_ = 1;
    std::optional<int> bound_;
    Map terms_;
};

/// Tensor extensions of the slot operators, with the Koszul sign
/// (-1)^{number of tag-0 slots to the left}.
TensorSymbol tensor_partial(const TensorSymbol& s);  // sum_i eps_i d^{(i)}
TensorSymbol tensor_pi(const TensorSymbol& s);       // pi on every slot
TensorSymbol tensor_h(const TensorSymbol& s);        // sum_i eps_i id..id h pi..pi

/// Symbol of d' o F (the target differential applied after F).
TensorSymbol postcompose_d(const TensorSymbol& f);

/// Symbol of sum_i (-1)^{abar_1+..+abar_i} F(a_1,..,a_i * a_{i+1},..), the
/// source product inserted into every adjacent pair. Arity goes up by one.
TensorSymbol merge(const TensorSymbol& f, const Deformation& theta);

/// Symbol of (a_1..a_{k+m}) -> (-1)^{g_degree (abar_1+..+abar_k)} F(a_1..a_k) *' G(a_{k+1}..),
/// the target product of the outputs. Bound is the min of the two bounds
/// unless given explicitly.
TensorSymbol convolve(const TensorSymbol& f, const TensorSymbol& g, const Deformation& theta_prime, int g_degree,
                      std::optional<int> bound = std::nullopt);

/// Lookup-based evaluator: enumerates the derivatives each argument admits
/// and looks the resulting keys up in the term table.
class SymbolEvaluator {
public:
    explicit SymbolEvaluator(const TensorSymbol& s);
    AElement operator()(const std::vector<AElement>& args) const;

private:
    const TensorSymbol& s_;
    std::unordered_set<std::string> prefixes_;
    std::vector<std::string> heads_;
};

AElement realize(const TensorSymbol& s, const std::vector<AElement>& args);

/// No tag-0 slot with p-exponent zero, i.e. the map vanishes whenever some
/// argument is a constant.
bool is_normal(const TensorSymbol& s);
/// Arity 1 and sends the unit to the unit.
bool is_unital(const TensorSymbol& s);

/// Degrees (0 for tag 0, 1 otherwise) of the arguments a term reads.
std::vector<int> slot_signature(const SymbolTerm& t);

/// Arity-1 symbol with head 1: phi0 terms become tag-0 slots, phi^j terms
/// tag-j slots.
TensorSymbol from_slot_symbol(const SlotSymbol& s);

}  // namespace swmap
