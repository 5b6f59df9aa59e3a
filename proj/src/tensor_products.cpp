#include <map>
#include <stdexcept>

#include "swmap/tensor_symbol.hpp"

namespace swmap {

namespace {

struct PairTerm {
    MultiIndex left, right;
    ThetaScalar coef;
};

std::vector<std::pair<int, int>> nonzero_pairs(const Deformation& theta)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < theta.dim(); ++i)
        for (int j = 0; j < theta.dim(); ++j)
            if (i != j && !theta(i, j).is_zero())
                out.emplace_back(i, j);
    return out;
}

Rational binomial(int n, int k)
{
    Rational r(1);
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

// Symbol of p^alpha read on a product: (p + q)^alpha exp(1/2 theta^{ij} p_i q_j),
// keeping total degree <= budget.
std::vector<PairTerm> split_product(const MultiIndex& alpha, const Deformation& theta, int budget)
{
    int n = alpha.dim();
    std::vector<PairTerm> cur;
    MultiIndex beta(n);
    // enumerate beta <= alpha
    while (true) {
        Rational c(1);
        for (int k = 0; k < n; ++k)
            c *= binomial(alpha[k], beta[k]);
        cur.push_back({beta, alpha - beta, ThetaScalar(c)});
        int k = 0;
        while (k < n && beta[k] == alpha[k])
            beta.set(k++, 0);
        if (k == n)
            break;
        beta.set(k, beta[k] + 1);
    }
    for (auto [i, j] : nonzero_pairs(theta)) {
        ThetaScalar half = theta(i, j) * Rational(1, 2);
        std::vector<PairTerm> next;
        for (const auto& t : cur) {
            ThetaScalar c = t.coef;
            MultiIndex l = t.left, r = t.right;
            for (int k = 0; t.left.degree() + t.right.degree() + 2 * k <= budget; ++k) {
                next.push_back({l, r, c});
                c = c * half * Rational(1, k + 1);
                l = l + MultiIndex::unit(n, i);
                r = r + MultiIndex::unit(n, j);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

TensorSymbol merge(const TensorSymbol& f, const Deformation& theta)
{
    int n = f.dim();
    if (theta.dim() != n)
        throw std::invalid_argument("merge: deformation dimension mismatch");
    if (!f.bound() && !theta.is_zero())
        throw std::invalid_argument("merge: deformed product needs a degree bound");
    constexpr int kUnbounded = 1 << 20;
    int bound = f.bound().value_or(kUnbounded);
    TensorSymbol out(n, f.arity() + 1, f.bound());
    std::map<std::pair<MultiIndex, int>, std::vector<PairTerm>,
             decltype([](const auto& a, const auto& b) {
                 if (a.second != b.second)
                     return a.second < b.second;
                 return GrlexLess{}(a.first, b.first);
             })>
        cache;
    for (const auto& [key, c] : f.raw_terms()) {
        SymbolTerm t = f.decode(key);
        int total = slot_degree(t);
        int tag0_left = 0;
        for (std::size_t i = 0; i < t.slots.size(); ++i) {
            const SlotIndex& slot = t.slots[i];
            int budget = bound - (total - slot.p.degree());
            auto it = cache.find({slot.p, budget});
            if (it == cache.end())
                it = cache.emplace(std::make_pair(slot.p, budget), split_product(slot.p, theta, budget)).first;
            SymbolTerm u;
            u.head = t.head;
            u.head_xi = t.head_xi;
            u.slots.assign(t.slots.begin(), t.slots.begin() + static_cast<long>(i));
            u.slots.push_back(slot);
            u.slots.push_back(slot);
            u.slots.insert(u.slots.end(), t.slots.begin() + static_cast<long>(i) + 1, t.slots.end());
            // routing of the component read by the slot: a0 of a product reads
            // a0 twice, a_j reads (a_j, b0) and (a0, b_j)
            std::vector<std::pair<int, int>> routes;
            if (slot.tag == 0)
                routes = {{0, 0}};
            else
                routes = {{slot.tag, 0}, {0, slot.tag}};
            for (auto [lt, rt] : routes) {
                int sign_count = tag0_left + (lt == 0 ? 1 : 0);
                ThetaScalar sc = sign_count % 2 ? -c : c;
                for (const auto& pt : it->second) {
                    u.slots[i] = SlotIndex{pt.left, lt};
                    u.slots[i + 1] = SlotIndex{pt.right, rt};
                    out.add_term(u, sc * pt.coef);
                }
            }
            if (slot.tag == 0)
                ++tag0_left;
        }
    }
    return out;
}

namespace {

struct Partial {
    SymbolTerm term;
    Rational coef;
    int used;  // p-degree added to slots
};

Rational falling(int n, int k)
{
    Rational r(1);
    for (int i = 0; i < k; ++i)
        r *= n - i;
    return r;
}

// (D_i)^k with D_i = d/dx^i on the head plus p_i on every slot.
void expand_derivative(const SymbolTerm& t, int i, int k, int max_use, std::vector<Partial>& out)
{
    std::size_t l = t.slots.size();
    std::vector<int> ks(l, 0);
    Rational kfact = falling(k, k);
    // recursive distribution of k among slots, remainder to the head
    auto rec = [&](auto&& self, std::size_t s, int left, Rational c) -> void {
        if (s == l) {
            if (left > t.head[i])
                return;
            Partial p{t, c * falling(t.head[i], left) / falling(left, left), k - left};
            MultiIndex h = t.head;
            h.set(i, t.head[i] - left);
            p.term.head = h;
            for (std::size_t q = 0; q < l; ++q)
                if (ks[q]) {
                    MultiIndex pq = t.slots[q].p;
                    pq.set(i, pq[i] + ks[q]);
                    p.term.slots[q].p = pq;
                }
            out.push_back(std::move(p));
            return;
        }
        int used = k - left;
        for (int a = 0; a <= left && used + a <= max_use; ++a) {
            ks[s] = a;
            self(self, s + 1, left - a, c / falling(a, a));
        }
        ks[s] = 0;
    };
    rec(rec, 0, k, kfact);
}

}  // namespace

TensorSymbol convolve(const TensorSymbol& f, const TensorSymbol& g, const Deformation& theta_prime, int g_degree,
                      std::optional<int> bound)
{
    int n = f.dim();
    if (g.dim() != n || theta_prime.dim() != n)
        throw std::invalid_argument("convolve: dimension mismatch");
    if (!bound) {
        bound = f.bound();
        if (g.bound())
            bound = bound ? std::min(*bound, *g.bound()) : g.bound();
    }
    if (!bound && !theta_prime.is_zero())
        throw std::invalid_argument("convolve: deformed product needs a degree bound");
    constexpr int kUnbounded = 1 << 20;
    int limit = bound.value_or(kUnbounded);
    auto pairs = nonzero_pairs(theta_prime);
    std::vector<ThetaScalar> halves;
    for (auto [i, j] : pairs)
        halves.push_back(theta_prime(i, j) * Rational(1, 2));

    TensorSymbol out(n, f.arity() + g.arity(), bound);
    std::vector<std::pair<SymbolTerm, ThetaScalar>> fl, gl;
    for (const auto& [k, c] : f.raw_terms())
        fl.emplace_back(f.decode(k), c);
    for (const auto& [k, c] : g.raw_terms())
        gl.emplace_back(g.decode(k), c);

    struct Work {
        SymbolTerm left, right;
        ThetaScalar coef;
        int used;
    };
    std::vector<Partial> lexp, rexp;
    for (const auto& [tf, cf] : fl) {
        int sf = slot_degree(tf);
        bool odd = (g_degree % 2 != 0) && (tag0_count(tf) % 2 != 0);
        for (const auto& [tg, cg] : gl) {
            if (tf.head_xi && tg.head_xi)
                continue;
            int budget = limit - sf - slot_degree(tg);
            if (budget < 0)
                continue;
            ThetaScalar c0 = cf * cg;
            std::vector<Work> cur{{tf, tg, odd ? -c0 : c0, 0}};
            for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
                auto [i, j] = pairs[pi];
                std::vector<Work> next;
                for (const auto& w : cur) {
                    int rem = budget - w.used;
                    ThetaScalar power(1);
                    for (int k = 0;; ++k) {
                        int need = std::max(0, k - w.left.head[i]) + std::max(0, k - w.right.head[j]);
                        if (need > rem)
                            break;
                        lexp.clear();
                        rexp.clear();
                        expand_derivative(w.left, i, k, rem, lexp);
                        expand_derivative(w.right, j, k, rem, rexp);
                        for (const auto& a : lexp)
                            for (const auto& b : rexp)
                                if (a.used + b.used <= rem)
                                    next.push_back({a.term, b.term, w.coef * power * (a.coef * b.coef),
                                                    w.used + a.used + b.used});
                        power = power * halves[pi] * Rational(1, k + 1);
                    }
                }
                cur = std::move(next);
            }
            for (const auto& w : cur) {
                SymbolTerm u;
                u.head = w.left.head + w.right.head;
                u.head_xi = w.left.head_xi ? w.left.head_xi : w.right.head_xi;
                u.slots = w.left.slots;
                u.slots.insert(u.slots.end(), w.right.slots.begin(), w.right.slots.end());
                out.add_term(u, w.coef);
            }
        }
    }
    return out;
}

}  // namespace swmap
