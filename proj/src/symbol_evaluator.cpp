#include <stdexcept>

#include "swmap/tensor_symbol.hpp"

namespace swmap {

SymbolEvaluator::SymbolEvaluator(const TensorSymbol& s) : s_(s)
{
    std::size_t width = static_cast<std::size_t>(s.dim() + 1);
    std::size_t slots_len = width * static_cast<std::size_t>(s.arity());
    std::unordered_set<std::string> heads;
    for (const auto& [key, c] : s.raw_terms()) {
        for (std::size_t len = width; len <= slots_len; len += width)
            prefixes_.insert(key.substr(0, len));
        heads.insert(key.substr(slots_len));
    }
    heads_.assign(heads.begin(), heads.end());
}

namespace {

struct Candidate {
    std::string bytes;   // slot exponents + tag
    MultiIndex residual; // x-monomial left after differentiation
    ThetaScalar coef;
};

void slot_candidates(const AElement& a, int n, std::optional<int> bound, std::vector<Candidate>& out)
{
    for (int tag = 0; tag <= n; ++tag) {
        const XPolynomial& comp = tag == 0 ? a.a0() : a.coeff(tag - 1);
        for (const auto& [beta, c] : comp.terms()) {
            MultiIndex alpha(n);
            while (true) {
                if (!bound || alpha.degree() <= *bound) {
                    Rational f(1);
                    for (int k = 0; k < n; ++k)
                        for (int r = 0; r < alpha[k]; ++r)
                            f *= beta[k] - r;
                    std::string bytes;
                    for (int k = 0; k < n; ++k)
                        bytes.push_back(static_cast<char>(alpha[k]));
                    bytes.push_back(static_cast<char>(tag));
                    out.push_back({std::move(bytes), beta - alpha, c * f});
                }
                int k = 0;
                while (k < n && alpha[k] == beta[k])
                    alpha.set(k++, 0);
                if (k == n)
                    break;
                alpha.set(k, alpha[k] + 1);
            }
        }
    }
}

}  // namespace

AElement SymbolEvaluator::operator()(const std::vector<AElement>& args) const
{
    int n = s_.dim();
    if (static_cast<int>(args.size()) != s_.arity())
        throw std::invalid_argument("realize: wrong number of arguments");
    std::vector<std::vector<Candidate>> cands(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].dim() != n)
            throw std::invalid_argument("realize: argument dimension mismatch");
        slot_candidates(args[i], n, s_.bound(), cands[i]);
    }
    XPolynomial a0(n);
    std::vector<XPolynomial> xi(static_cast<std::size_t>(n), XPolynomial(n));
    std::string key;
    auto rec = [&](auto&& self, std::size_t s, const MultiIndex& mono, const ThetaScalar& coef) -> void {
        if (s == args.size()) {
            for (const auto& h : heads_) {
                auto it = s_.raw_terms().find(key + h);
                if (it == s_.raw_terms().end())
                    continue;
                MultiIndex head(n);
                for (int k = 0; k < n; ++k)
                    head.set(k, static_cast<unsigned char>(h[static_cast<std::size_t>(k)]));
                int hx = static_cast<unsigned char>(h.back());
                XPolynomial& target = hx == 0 ? a0 : xi[static_cast<std::size_t>(hx - 1)];
                target.add_term(mono + head, it->second * coef);
            }
            return;
        }
        std::size_t len = key.size();
        for (const auto& c : cands[s]) {
            key += c.bytes;
            if (prefixes_.count(key))
                self(self, s + 1, mono + c.residual, coef * c.coef);
            key.resize(len);
        }
    };
    rec(rec, 0, MultiIndex(n), ThetaScalar(1));
    return AElement(std::move(a0), std::move(xi));
}

AElement realize(const TensorSymbol& s, const std::vector<AElement>& args)
{
    return SymbolEvaluator(s)(args);
}

}  // namespace swmap
