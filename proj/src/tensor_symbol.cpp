#include "swmap/tensor_symbol.hpp"

#include <algorithm>
#include <stdexcept>

namespace swmap {

int slot_degree(const SymbolTerm& t)
{
    int d = 0;
    for (const auto& s : t.slots)
        d += s.p.degree();
    return d;
}

int tag0_count(const SymbolTerm& t)
{
    return static_cast<int>(std::count_if(t.slots.begin(), t.slots.end(), [](const SlotIndex& s) { return s.tag == 0; }));
}

int symbol_degree(const SymbolTerm& t)
{
    int l = static_cast<int>(t.slots.size());
    return -(l - tag0_count(t)) + (t.head_xi ? 1 : 0) + l - 1;
}

std::vector<int> slot_signature(const SymbolTerm& t)
{
    std::vector<int> sig;
    for (const auto& s : t.slots)
        sig.push_back(s.tag == 0 ? 0 : 1);
    return sig;
}

bool canonical_less(const SymbolTerm& a, const SymbolTerm& b)
{
    GrlexLess lt;
    if (a.head != b.head)
        return lt(a.head, b.head);
    if (a.head_xi != b.head_xi)
        return a.head_xi < b.head_xi;
    for (std::size_t i = 0; i < a.slots.size() && i < b.slots.size(); ++i) {
        if (a.slots[i].p != b.slots[i].p)
            return lt(a.slots[i].p, b.slots[i].p);
        if (a.slots[i].tag != b.slots[i].tag)
            return a.slots[i].tag < b.slots[i].tag;
    }
    return a.slots.size() < b.slots.size();
}

TensorSymbol::TensorSymbol(int n, int arity, std::optional<int> bound)
    : n_(MultiIndex::check_dim(n)), arity_(arity), bound_(bound)
{
    if (arity < 1)
        throw std::invalid_argument("tensor symbol arity must be >= 1");
}

// key layout: per slot n exponent bytes + tag byte, then head exponents, head xi
std::string TensorSymbol::encode(const SymbolTerm& t) const
{
    if (static_cast<int>(t.slots.size()) != arity_)
        throw std::invalid_argument("term arity mismatch");
    std::string key;
    key.reserve(static_cast<std::size_t>((arity_ + 1) * (n_ + 1)));
    for (const auto& s : t.slots) {
        for (int i = 0; i < n_; ++i)
            key.push_back(static_cast<char>(s.p[i]));
        key.push_back(static_cast<char>(s.tag));
    }
    for (int i = 0; i < n_; ++i)
        key.push_back(static_cast<char>(t.head[i]));
    key.push_back(static_cast<char>(t.head_xi));
    return key;
}

SymbolTerm TensorSymbol::decode(const std::string& key) const
{
    SymbolTerm t;
    std::size_t pos = 0;
    auto byte = [&](std::size_t i) { return static_cast<int>(static_cast<unsigned char>(key[i])); };
    for (int s = 0; s < arity_; ++s) {
        SlotIndex slot{MultiIndex(n_), 0};
        for (int i = 0; i < n_; ++i)
            slot.p.set(i, byte(pos++));
        slot.tag = byte(pos++);
        t.slots.push_back(slot);
    }
    t.head = MultiIndex(n_);
    for (int i = 0; i < n_; ++i)
        t.head.set(i, byte(pos++));
    t.head_xi = byte(pos);
    return t;
}

int TensorSymbol::key_slot_degree(const std::string& key) const
{
    int d = 0;
    for (int s = 0; s < arity_; ++s)
        for (int i = 0; i < n_; ++i)
            d += static_cast<unsigned char>(key[static_cast<std::size_t>(s * (n_ + 1) + i)]);
    return d;
}

void TensorSymbol::add_raw(const std::string& key, const ThetaScalar& c)
{
    if (c.is_zero())
        return;
    if (bound_ && key_slot_degree(key) > *bound_)
        return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void TensorSymbol::add_term(const SymbolTerm& t, const ThetaScalar& c)
{
    for (const auto& s : t.slots)
        if (s.tag < 0 || s.tag > n_ || s.p.dim() != n_)
            throw std::invalid_argument("bad slot in tensor symbol term");
    if (t.head_xi < 0 || t.head_xi > n_ || t.head.dim() != n_)
        throw std::invalid_argument("bad head in tensor symbol term");
    add_raw(encode(t), c);
}

ThetaScalar TensorSymbol::coefficient(const SymbolTerm& t) const
{
    auto it = terms_.find(encode(t));
    return it == terms_.end() ? ThetaScalar() : it->second;
}

std::vector<std::pair<SymbolTerm, ThetaScalar>> TensorSymbol::sorted_terms() const
{
    std::vector<std::pair<SymbolTerm, ThetaScalar>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
        out.emplace_back(decode(k), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

void TensorSymbol::check_same(const TensorSymbol& o) const
{
    if (o.n_ != n_ || o.arity_ != arity_)
        throw std::invalid_argument("tensor symbol shape mismatch");
}

TensorSymbol& TensorSymbol::operator+=(const TensorSymbol& o)
{
    check_same(o);
    for (const auto& [k, c] : o.terms_)
        add_raw(k, c);
    return *this;
}

TensorSymbol& TensorSymbol::operator-=(const TensorSymbol& o)
{
    check_same(o);
    for (const auto& [k, c] : o.terms_)
        add_raw(k, -c);
    return *this;
}

TensorSymbol& TensorSymbol::operator*=(const ThetaScalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

TensorSymbol TensorSymbol::operator-() const
{
    TensorSymbol r = *this;
    for (auto& [k, c] : r.terms_)
        c = -c;
    return r;
}

bool operator==(const TensorSymbol& a, const TensorSymbol& b)
{
    return a.n_ == b.n_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

TensorSymbol TensorSymbol::with_bound(std::optional<int> bound) const
{
    TensorSymbol r(n_, arity_, bound);
    for (const auto& [k, c] : terms_)
        r.add_raw(k, c);
    return r;
}

TensorSymbol TensorSymbol::theta_truncated(int k) const
{
    TensorSymbol r(n_, arity_, bound_);
    for (const auto& [key, c] : terms_)
        r.add_raw(key, c.truncated(k));
    return r;
}

TensorSymbol TensorSymbol::theta_homogeneous_part(int k) const
{
    TensorSymbol r(n_, arity_, bound_);
    for (const auto& [key, c] : terms_)
        r.add_raw(key, c.homogeneous_part(k));
    return r;
}

TensorSymbol TensorSymbol::specialized(const std::vector<std::optional<Rational>>& assignment) const
{
    TensorSymbol r(n_, arity_, bound_);
    for (const auto& [key, c] : terms_)
        r.add_raw(key, c.specialized(assignment));
    return r;
}

TensorSymbol TensorSymbol::head_xi_part(bool with_xi) const
{
    TensorSymbol r(n_, arity_, bound_);
    for (const auto& [key, c] : terms_)
        if ((key.back() != 0) == with_xi)
            r.add_raw(key, c);
    return r;
}

TensorSymbol TensorSymbol::tag0_part(int k) const
{
    TensorSymbol r(n_, arity_, bound_);
    for (const auto& [key, c] : terms_) {
        int count = 0;
        for (int s = 0; s < arity_; ++s)
            if (key[static_cast<std::size_t>(s * (n_ + 1) + n_)] == 0)
                ++count;
        if (count == k)
            r.add_raw(key, c);
    }
    return r;
}

}  // namespace swmap
