#include "swmap/tensor_symbol.hpp"

#include <algorithm>

namespace swmap {

namespace {

using SlotImage = std::vector<std::pair<SlotIndex, Rational>>;

SlotImage slot_partial(const SlotIndex& s)
{
    if (s.tag == 0)
        return {};
    return {{SlotIndex{s.p + MultiIndex::unit(s.p.dim(), s.tag - 1), 0}, Rational(1)}};
}

SlotImage slot_pi(const SlotIndex& s)
{
    int n = s.p.dim();
    if (s.tag == 0) {
        if (s.p.degree() == 0)
            return {{s, Rational(1)}};
        return {};
    }
    SlotImage out{{s, Rational(1)}};
    MultiIndex raised = s.p + MultiIndex::unit(n, s.tag - 1);
    Rational scale(1, s.p.degree() + 1);
    for (int m = 0; m < n; ++m) {
        if (raised[m] == 0)
            continue;
        SlotIndex t{raised - MultiIndex::unit(n, m), m + 1};
        Rational c = -Rational(raised[m]) * scale;
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == t; });
        if (it != out.end()) {
            it->second += c;
            if (it->second == 0)
                out.erase(it);
        } else {
            out.emplace_back(t, c);
        }
    }
    return out;
}

SlotImage slot_h(const SlotIndex& s)
{
    int d = s.p.degree();
    if (s.tag != 0 || d == 0)
        return {};
    int n = s.p.dim();
    SlotImage out;
    for (int i = 0; i < n; ++i)
        if (s.p[i] > 0)
            out.emplace_back(SlotIndex{s.p - MultiIndex::unit(n, i), i + 1}, ratio(s.p[i], d));
    return out;
}

// Emits every choice from the per-slot images into out.
void expand_product(const SymbolTerm& base, const ThetaScalar& c, const std::vector<SlotImage>& images,
                    TensorSymbol& out)
{
    for (const auto& img : images)
        if (img.empty())
            return;
    SymbolTerm t = base;
    std::vector<std::size_t> idx(images.size(), 0);
    while (true) {
        Rational f(1);
        for (std::size_t s = 0; s < images.size(); ++s) {
            t.slots[s] = images[s][idx[s]].first;
            f *= images[s][idx[s]].second;
        }
        out.add_term(t, c * f);
        std::size_t s = 0;
        while (s < images.size() && ++idx[s] == images[s].size())
            idx[s++] = 0;
        if (s == images.size())
            break;
    }
}

SlotImage identity(const SlotIndex& s) { return {{s, Rational(1)}}; }

}  // namespace

TensorSymbol tensor_partial(const TensorSymbol& s)
{
    TensorSymbol out(s.dim(), s.arity(), s.bound());
    for (const auto& [key, c] : s.raw_terms()) {
        SymbolTerm t = s.decode(key);
        int sign = 1;
        for (std::size_t i = 0; i < t.slots.size(); ++i) {
            std::vector<SlotImage> images;
            for (std::size_t j = 0; j < t.slots.size(); ++j)
                images.push_back(j == i ? slot_partial(t.slots[j]) : identity(t.slots[j]));
            expand_product(t, sign > 0 ? c : -c, images, out);
            if (t.slots[i].tag == 0)
                sign = -sign;
        }
    }
    return out;
}

TensorSymbol tensor_pi(const TensorSymbol& s)
{
    TensorSymbol out(s.dim(), s.arity(), s.bound());
    for (const auto& [key, c] : s.raw_terms()) {
        SymbolTerm t = s.decode(key);
        std::vector<SlotImage> images;
        for (const auto& slot : t.slots)
            images.push_back(slot_pi(slot));
        expand_product(t, c, images, out);
    }
    return out;
}

TensorSymbol tensor_h(const TensorSymbol& s)
{
    TensorSymbol out(s.dim(), s.arity(), s.bound());
    for (const auto& [key, c] : s.raw_terms()) {
        SymbolTerm t = s.decode(key);
        std::vector<SlotImage> pis;
        for (const auto& slot : t.slots)
            pis.push_back(slot_pi(slot));
        int sign = 1;
        for (std::size_t i = 0; i < t.slots.size(); ++i) {
            std::vector<SlotImage> images;
            for (std::size_t j = 0; j < t.slots.size(); ++j) {
                if (j < i)
                    images.push_back(identity(t.slots[j]));
                else if (j == i)
                    images.push_back(slot_h(t.slots[j]));
                else
                    images.push_back(pis[j]);
            }
            expand_product(t, sign > 0 ? c : -c, images, out);
            if (t.slots[i].tag == 0)
                sign = -sign;
        }
    }
    return out;
}

TensorSymbol postcompose_d(const TensorSymbol& f)
{
    int n = f.dim();
    TensorSymbol out(n, f.arity(), f.bound());
    for (const auto& [key, c] : f.raw_terms()) {
        if (key.back() != 0)
            continue;
        SymbolTerm t = f.decode(key);
        for (int i = 0; i < n; ++i) {
            SymbolTerm u = t;
            u.head_xi = i + 1;
            if (t.head[i] > 0) {
                u.head = t.head - MultiIndex::unit(n, i);
                out.add_term(u, c * Rational(t.head[i]));
                u.head = t.head;
            }
            for (std::size_t s = 0; s < t.slots.size(); ++s) {
                u.slots[s].p = t.slots[s].p + MultiIndex::unit(n, i);
                out.add_term(u, c);
                u.slots[s].p = t.slots[s].p;
            }
        }
    }
    return out;
}

bool is_normal(const TensorSymbol& s)
{
    for (const auto& [key, c] : s.raw_terms())
        for (const auto& slot : s.decode(key).slots)
            if (slot.tag == 0 && slot.p.degree() == 0)
                return false;
    return true;
}

bool is_unital(const TensorSymbol& s)
{
    if (s.arity() != 1)
        return false;
    int n = s.dim();
    return realize(s, {AElement::scalar(n, 1)}) == AElement::scalar(n, 1);
}

TensorSymbol from_slot_symbol(const SlotSymbol& s)
{
    int n = s.dim();
    TensorSymbol out(n, 1, s.bound());
    SymbolTerm t{MultiIndex(n), 0, {SlotIndex{MultiIndex(n), 0}}};
    for (const auto& [m, c] : s.phi0().terms()) {
        t.slots[0] = SlotIndex{m, 0};
        out.add_term(t, c);
    }
    for (int j = 0; j < n; ++j)
        for (const auto& [m, c] : s.phi(j).terms()) {
            t.slots[0] = SlotIndex{m, j + 1};
            out.add_term(t, c);
        }
    return out;
}

}  // namespace swmap
