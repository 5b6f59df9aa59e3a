#include "swmap/ambiguity.hpp"

#include <map>
#include <string>

#include "swmap/basis.hpp"

namespace swmap {

namespace {

bool all_zeta(const SymbolTerm& t)
{
    for (const auto& s : t.slots)
        if (s.tag == 0)
            return false;
    return true;
}

// Slot part of a term: exponents of all slots flattened, slot-major.
using SlotPoly = std::map<std::vector<int>, ThetaScalar>;

void add_to(SlotPoly& p, const std::vector<int>& k, const ThetaScalar& c)
{
    auto it = p.find(k);
    if (it == p.end()) {
        if (!c.is_zero())
            p.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        p.erase(it);
}

int total(const std::vector<int>& k)
{
    int d = 0;
    for (int e : k)
        d += e;
    return d;
}

SlotPoly truncated(const SlotPoly& p, int deg)
{
    SlotPoly out;
    for (const auto& [k, c] : p)
        if (total(k) <= deg)
            out.emplace(k, c);
    return out;
}

// P_i * q where P_i = sum over slots of p_i.
SlotPoly times_p(const SlotPoly& q, int n, int l, int i)
{
    SlotPoly out;
    for (const auto& [k, c] : q)
        for (int s = 0; s < l; ++s) {
            auto m = k;
            ++m[static_cast<std::size_t>(s * n + i)];
            add_to(out, m, c);
        }
    return out;
}

// Exact division by P_i, leading variable p_i of the first slot.
std::optional<SlotPoly> divide_p(SlotPoly r, int n, int l, int i)
{
    SlotPoly q;
    auto u = static_cast<std::size_t>(i);
    for (;;) {
        auto best = r.end();
        for (auto it = r.begin(); it != r.end(); ++it)
            if (it->first[u] > 0 && (best == r.end() || it->first[u] > best->first[u]))
                best = it;
        if (best == r.end())
            break;
        auto m = best->first;
        ThetaScalar c = best->second;
        --m[u];
        add_to(q, m, c);
        for (int s = 0; s < l; ++s) {
            auto k = m;
            ++k[static_cast<std::size_t>(s * n + i)];
            add_to(r, k, -c);
        }
    }
    if (!r.empty())
        return std::nullopt;
    return q;
}

struct Group {
    std::vector<int> tags;
    std::map<std::pair<std::vector<int>, int>, SlotPoly> by_head;  // (head exps, xi index 0-based)
};

std::vector<int> exps(const MultiIndex& m)
{
    std::vector<int> v(static_cast<std::size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i)
        v[static_cast<std::size_t>(i)] = m[i];
    return v;
}

}  // namespace

AmbiguityCocycle make_cocycle(int order, const TensorSymbol& z, const TensorSymbol& c)
{
    if (order < 1)
        throw std::invalid_argument("cocycle order must be >= 1");
    if (z.arity() != order || c.arity() != order || z.dim() != c.dim())
        throw std::invalid_argument("cocycle parts do not match the order");
    for (const auto& [key, coef] : z.raw_terms()) {
        SymbolTerm t = z.decode(key);
        if (t.head_xi == 0 || !all_zeta(t))
            throw std::invalid_argument("z must have a xi head and zeta slots only");
    }
    if (!tensor_partial(z).is_zero())
        throw std::invalid_argument("z slots are not in Z_{-1}");
    for (const auto& [key, coef] : c.raw_terms()) {
        SymbolTerm t = c.decode(key);
        if (t.head_xi != 0 || !all_zeta(t))
            throw std::invalid_argument("c must have a head without xi and zeta slots only");
    }
    AmbiguityCocycle out{order, z, c, z + postcompose_d(c) + tensor_partial(c)};
    if (tensor_partial(out.g) != postcompose_d(out.g))
        throw SolverError("assembled cocycle is not closed");
    return out;
}

Morphism shift_by_cocycle(const Morphism& f, const AmbiguityCocycle& g)
{
    int l = g.order;
    if (l > f.order())
        throw std::invalid_argument("cocycle order exceeds the morphism");
    if (g.g.dim() != f.dim())
        throw std::invalid_argument("cocycle dimension mismatch");
    if (g.g.is_zero())
        return f;
    Morphism out(f.settings());
    for (int k = 1; k < l; ++k)
        out.push(f.at(k));
    out.push(f.at(l) + g.g.with_bound(f.bound(l)));
    return extend_recursion(std::move(out));
}

bool is_d_exact(const TensorSymbol& z, int valid_degree)
{
    int n = z.dim(), l = z.arity();
    std::map<std::vector<int>, Group> groups;
    int H = 0;
    for (const auto& [key, c] : z.raw_terms()) {
        SymbolTerm t = z.decode(key);
        if (t.head_xi == 0 || !all_zeta(t))
            throw std::invalid_argument("exactness test expects a xi head and zeta slots");
        std::vector<int> tags, flat;
        for (const auto& s : t.slots) {
            tags.push_back(s.tag);
            for (int i = 0; i < n; ++i)
                flat.push_back(s.p[i]);
        }
        auto& g = groups[tags];
        g.tags = tags;
        add_to(g.by_head[{exps(t.head), t.head_xi - 1}], flat, c);
        H = std::max(H, t.head.degree());
    }
    for (auto& [tags, g] : groups) {
        // c'(a) from the top head degree down
        std::map<std::vector<int>, SlotPoly> cp;
        auto heads = monomials_up_to(n, H);
        for (int k = H; k >= 0; --k) {
            int check_deg = k == H ? valid_degree : valid_degree - (H - k);
            if (check_deg < 0)
                break;
            for (const auto& a : heads) {
                if (a.degree() != k)
                    continue;
                auto av = exps(a);
                std::vector<SlotPoly> r(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    auto& ri = r[static_cast<std::size_t>(i)];
                    auto it = g.by_head.find({av, i});
                    if (it != g.by_head.end())
                        ri = truncated(it->second, check_deg);
                    auto up = av;
                    ++up[static_cast<std::size_t>(i)];
                    auto cu = cp.find(up);
                    if (cu != cp.end())
                        for (const auto& [m, c] : cu->second)
                            if (total(m) <= check_deg)
                                add_to(ri, m, -c * ThetaScalar(Rational(av[static_cast<std::size_t>(i)] + 1)));
                }
                auto q = divide_p(r[0], n, l, 0);
                if (!q)
                    return false;
                for (int i = 1; i < n; ++i)
                    if (truncated(times_p(*q, n, l, i), check_deg) != r[static_cast<std::size_t>(i)])
                        return false;
                if (!q->empty())
                    cp[av] = std::move(*q);
            }
        }
    }
    return true;
}

CohomologyClassReport obstruction_class(const Morphism& f, const Morphism& ft)
{
    const auto& a = f.settings();
    const auto& b = ft.settings();
    if (a.n != b.n || a.L != b.L || a.D != b.D || !(a.theta == b.theta) || !(a.theta_prime == b.theta_prime))
        throw std::invalid_argument("morphisms differ in their metadata");
    CohomologyClassReport rep;
    int top = std::max(f.order(), ft.order());
    for (int l = 1; l <= top; ++l) {
        TensorSymbol diff = ft.at(l) - f.at(l);
        if (diff.is_zero())
            continue;
        rep.order = l;
        if (tensor_partial(diff) != postcompose_d(diff))
            throw SolverError("difference at order " + std::to_string(l) + " is not closed");
        TensorSymbol c0 = tensor_h(diff.head_xi_part(false));
        int valid = f.bound(l);
        TensorSymbol z = diff.head_xi_part(true) - postcompose_d(c0);
        for (const auto& [key, c] : c0.raw_terms())
            if (c0.decode(key).head.degree() > 0) {
                valid -= 1;  // d' of c0 misses the head derivative of the unknown top degree
                break;
            }
        z = z.with_bound(valid);
        if (tensor_pi(z) != z)
            throw SolverError("class representative is not pi-fixed");
        rep.zero = is_d_exact(z, valid);
        rep.representative = rep.zero ? TensorSymbol(f.dim(), l, valid) : z;
        return rep;
    }
    rep.representative = TensorSymbol(f.dim(), 1);
    return rep;
}

namespace {

// Cochain of the convolution algebra: scalar arity-0 part and arity 1..L.
struct Cochain {
    int degree = 0;
    ThetaScalar unit;
    std::vector<TensorSymbol> parts;  // parts[m-1] has arity m
};

Cochain zero_cochain(const Morphism& f, int L, int degree)
{
    Cochain x;
    x.degree = degree;
    for (int m = 1; m <= L; ++m)
        x.parts.emplace_back(f.dim(), m, f.bound(m));
    return x;
}

Cochain multiply(const Morphism& f, const Cochain& x, const Cochain& y, int L)
{
    if (!y.unit.is_zero() && y.degree % 2 != 0)
        throw std::logic_error("odd cochain with a unit part");
    const auto& tp = f.settings().theta_prime;
    Cochain z = zero_cochain(f, L, x.degree + y.degree);
    z.unit = x.unit * y.unit;
    for (int m = 1; m <= L; ++m) {
        auto& out = z.parts[static_cast<std::size_t>(m - 1)];
        out += y.parts[static_cast<std::size_t>(m - 1)] * x.unit;
        out += x.parts[static_cast<std::size_t>(m - 1)] * y.unit;
        for (int i = 1; i < m; ++i) {
            const auto& xi = x.parts[static_cast<std::size_t>(i - 1)];
            const auto& yj = y.parts[static_cast<std::size_t>(m - i - 1)];
            if (xi.is_zero() || yj.is_zero())
                continue;
            out += convolve(xi, yj, tp, y.degree, f.bound(m));
        }
    }
    return z;
}

Cochain scaled(Cochain x, const ThetaScalar& s)
{
    x.unit *= s;
    for (auto& p : x.parts)
        p *= s;
    return x;
}

Cochain sum(Cochain x, const Cochain& y)
{
    x.unit += y.unit;
    for (std::size_t m = 0; m < x.parts.size(); ++m)
        x.parts[m] += y.parts[m];
    return x;
}

// D X = d' X + (-1)^{|X|} (d_l X + merge X)
Cochain differential(const Morphism& f, const Cochain& x, int L)
{
    Cochain z = zero_cochain(f, L, x.degree + 1);
    ThetaScalar sign(x.degree % 2 == 0 ? 1 : -1);
    for (int m = 1; m <= L; ++m) {
        auto& out = z.parts[static_cast<std::size_t>(m - 1)];
        const auto& xm = x.parts[static_cast<std::size_t>(m - 1)];
        out += postcompose_d(xm);
        TensorSymbol inner = tensor_partial(xm);
        if (m >= 2)
            inner += merge(x.parts[static_cast<std::size_t>(m - 2)].with_bound(f.bound(m)), f.settings().theta);
        out += inner * sign;
    }
    return z;
}

Cochain exponential(const Morphism& f, const Cochain& c, int L)
{
    Cochain out = zero_cochain(f, L, 0);
    out.unit = ThetaScalar(1);
    Cochain power = out;
    for (int k = 1; k <= L; ++k) {
        power = scaled(multiply(f, power, c, L), ThetaScalar(ratio(1, k)));
        out = sum(out, power);
    }
    return out;
}

}  // namespace

Morphism gauge_transform(const Morphism& f, const TensorSymbol& c, int L)
{
    int l = c.arity();
    if (L < 1 || L > f.order())
        throw std::invalid_argument("gauge truncation exceeds the morphism");
    if (c.dim() != f.dim())
        throw std::invalid_argument("gauge cochain dimension mismatch");
    for (const auto& [key, coef] : c.raw_terms()) {
        SymbolTerm t = c.decode(key);
        if (t.head_xi != 0 || !all_zeta(t))
            throw std::invalid_argument("gauge cochain must have a head without xi and zeta slots only");
    }
    if (c.is_zero() || l > L)
        return f;
    Cochain cc = zero_cochain(f, L, 0);
    cc.parts[static_cast<std::size_t>(l - 1)] = c.with_bound(f.bound(l));
    Cochain g = exponential(f, cc, L);
    Cochain ginv = exponential(f, scaled(cc, ThetaScalar(-1)), L);
    Cochain fc = zero_cochain(f, L, 1);
    for (int m = 1; m <= L; ++m)
        fc.parts[static_cast<std::size_t>(m - 1)] = f.at(m);
    Cochain out = sum(multiply(f, multiply(f, ginv, fc, L), g, L), multiply(f, ginv, differential(f, g, L), L));
    MorphismSettings s = f.settings();
    Morphism res(s);
    for (int m = 1; m <= L; ++m)
        res.push(out.parts[static_cast<std::size_t>(m - 1)]);
    return res;
}

}  // namespace swmap
