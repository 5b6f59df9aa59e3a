#include "swmap/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace swmap::io {

namespace {

int get_int(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw SchemaError(std::string("missing integer field '") + key + "'");
    return j.at(key).get<int>();
}

const json& get(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

MultiIndex index_from_json(const json& j, int n)
{
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw SchemaError("exponent vector has the wrong length");
    MultiIndex m(n);
    for (int i = 0; i < n; ++i) {
        if (!j[static_cast<std::size_t>(i)].is_number_integer())
            throw SchemaError("exponent must be an integer");
        int e = j[static_cast<std::size_t>(i)].get<int>();
        if (e < 0 || e > 255)
            throw SchemaError("exponent out of range");
        m.set(i, e);
    }
    return m;
}

json index_to_json(const MultiIndex& m)
{
    json j = json::array();
    for (int i = 0; i < m.dim(); ++i)
        j.push_back(m[i]);
    return j;
}

Rational rational_from_json(const json& j)
{
    try {
        if (j.is_number_integer())
            return Rational(j.get<long>());
        if (j.is_string()) {
            auto s = j.get<std::string>();
            auto slash = s.find('/');
            if (slash == std::string::npos)
                return parse_rational(s);
            return parse_rational(s.substr(0, slash), s.substr(slash + 1));
        }
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    throw SchemaError("rational must be an integer or a string");
}

}  // namespace

json to_json(const Rational& q)
{
    return swmap::to_string(q);
}

json to_json(const ThetaScalar& c)
{
    json j = json::array();
    for (const auto& [m, q] : c.terms()) {
        json e = json::array();
        int top = 0;
        for (int k = 0; k < kMaxSymbols; ++k)
            if (m.exponent(k) != 0)
                top = k + 1;
        for (int k = 0; k < top; ++k)
            e.push_back(m.exponent(k));
        j.push_back(json{{"sym_exp", e}, {"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}});
    }
    return j;
}

ThetaScalar theta_scalar_from_json(const json& j, int symbols)
{
    if (!j.is_array())
        throw SchemaError("coefficient must be a list of terms");
    ThetaScalar out;
    for (const auto& t : j) {
        const auto& e = get(t, "sym_exp");
        if (!e.is_array() || static_cast<int>(e.size()) > symbols)
            throw SchemaError("coefficient refers to an unknown deformation symbol");
        SymMonomial m;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k].is_number_integer() || e[k].get<int>() < 0 || e[k].get<int>() > 255)
                throw SchemaError("bad symbol exponent");
            if (e[k].get<int>() > 0)
                m = m * SymMonomial::variable(static_cast<int>(k), e[k].get<int>());
        }
        const auto& num = get(t, "num");
        const auto& den = get(t, "den");
        if (!num.is_string() || !den.is_string())
            throw SchemaError("num and den must be strings");
        Rational q;
        try {
            q = parse_rational(num.get<std::string>(), den.get<std::string>());
        } catch (const std::invalid_argument& ex) {
            throw SchemaError(ex.what());
        }
        out += ThetaScalar::monomial(m, q);
    }
    return out;
}

json to_json(const XPolynomial& p)
{
    json j = json::array();
    for (const auto& [m, c] : p.terms())
        j.push_back(json{{"exp", index_to_json(m)}, {"coef", to_json(c)}});
    return j;
}

XPolynomial xpoly_from_json(const json& j, int n, int symbols)
{
    if (!j.is_array())
        throw SchemaError("polynomial must be a list of terms");
    XPolynomial p(n);
    for (const auto& t : j)
        p.add_term(index_from_json(get(t, "exp"), n), theta_scalar_from_json(get(t, "coef"), symbols));
    return p;
}

json to_json(const AElement& a)
{
    json xi = json::array();
    for (int i = 0; i < a.dim(); ++i)
        xi.push_back(to_json(a.coeff(i)));
    return json{{"a0", to_json(a.a0())}, {"xi", xi}};
}

AElement aelement_from_json(const json& j, int n, int symbols)
{
    XPolynomial a0 = xpoly_from_json(get(j, "a0"), n, symbols);
    const auto& xj = get(j, "xi");
    if (!xj.is_array() || static_cast<int>(xj.size()) != n)
        throw SchemaError("xi part must have n entries");
    std::vector<XPolynomial> xi;
    for (const auto& p : xj)
        xi.push_back(xpoly_from_json(p, n, symbols));
    return AElement(std::move(a0), std::move(xi));
}

json field_strength_json(const AElement& A, const Deformation& theta)
{
    FieldStrength F = field_strength(A, theta);
    json j = json::array();
    for (int i = 0; i < F.dim(); ++i)
        for (int k = i + 1; k < F.dim(); ++k)
            j.push_back(to_json(F(i, k)));
    return j;
}

json to_json(const TensorSymbol& s)
{
    json terms = json::array();
    for (const auto& [t, c] : s.sorted_terms()) {
        json slots = json::array();
        for (const auto& sl : t.slots)
            slots.push_back(json{{"p", index_to_json(sl.p)}, {"tag", sl.tag}});
        json head{{"exp", index_to_json(t.head)}, {"xi", t.head_xi == 0 ? json(nullptr) : json(t.head_xi)}};
        terms.push_back(json{{"coef", to_json(c)}, {"head", head}, {"slots", slots}});
    }
    json j{{"arity", s.arity()}};
    if (s.bound())
        j["bound"] = *s.bound();
    j["terms"] = terms;
    return j;
}

TensorSymbol tensor_symbol_from_json(const json& j, int n, int symbols)
{
    int arity = get_int(j, "arity");
    if (arity < 1)
        throw SchemaError("arity must be >= 1");
    std::optional<int> bound;
    if (j.contains("bound"))
        bound = get_int(j, "bound");
    TensorSymbol s(n, arity, bound);
    const auto& terms = get(j, "terms");
    if (!terms.is_array())
        throw SchemaError("terms must be a list");
    for (const auto& t : terms) {
        SymbolTerm term;
        const auto& head = get(t, "head");
        term.head = index_from_json(get(head, "exp"), n);
        const auto& xi = get(head, "xi");
        if (xi.is_null())
            term.head_xi = 0;
        else if (xi.is_number_integer() && xi.get<int>() >= 1 && xi.get<int>() <= n)
            term.head_xi = xi.get<int>();
        else
            throw SchemaError("head xi must be null or 1..n");
        const auto& slots = get(t, "slots");
        if (!slots.is_array() || static_cast<int>(slots.size()) != arity)
            throw SchemaError("slot count does not match the arity");
        for (const auto& sl : slots) {
            int tag = get_int(sl, "tag");
            if (tag < 0 || tag > n)
                throw SchemaError("slot tag must be in 0..n");
            term.slots.push_back(SlotIndex{index_from_json(get(sl, "p"), n), tag});
        }
        s.add_term(term, theta_scalar_from_json(get(t, "coef"), symbols));
    }
    return s;
}

json to_json(const VerificationReport& r)
{
    return json{{"identity", r.identity},
                {"degrees_checked", r.degrees_checked},
                {"pass", r.pass},
                {"witness", r.witness ? json(*r.witness) : json(nullptr)},
                {"checked", r.checked}};
}

json to_json(const CohomologyClassReport& r, const std::vector<std::string>& names)
{
    json j{{"order", r.order}, {"zero", r.zero}};
    j["representative"] = to_json(r.representative);
    j["text"] = to_string(r.representative, names);
    return j;
}

json to_json(const AmbiguityCocycle& g)
{
    return json{{"order", g.order}, {"z", to_json(g.z)}, {"c", to_json(g.c)}};
}

AmbiguityCocycle cocycle_from_json(const json& j, int n, int symbols)
{
    int l = get_int(j, "order");
    try {
        return make_cocycle(l, tensor_symbol_from_json(get(j, "z"), n, symbols),
                            tensor_symbol_from_json(get(j, "c"), n, symbols));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

Deformation deformation_from_json(const json& spec, int n, int first_symbol)
{
    if (spec.is_string() || spec.is_number_integer()) {
        std::string s = spec.is_string() ? spec.get<std::string>() : std::to_string(spec.get<long>());
        if (s == "0")
            return Deformation::zero(n);
        if (s == "sym") {
            try {
                return Deformation::symbolic(n, first_symbol);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
        throw ConfigError("deformation must be 0, sym, or a matrix");
    }
    if (!spec.is_array() || static_cast<int>(spec.size()) != n)
        throw ConfigError("deformation matrix must be n x n");
    std::vector<std::vector<Rational>> m;
    for (const auto& row : spec) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ConfigError("deformation matrix must be n x n");
        std::vector<Rational> r;
        try {
            for (const auto& e : row)
                r.push_back(rational_from_json(e));
        } catch (const SchemaError& e) {
            throw ConfigError(e.what());
        }
        m.push_back(std::move(r));
    }
    try {
        return Deformation::from_matrix(m);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

json deformation_to_json(const Deformation& d)
{
    if (d.is_symbolic())
        return "sym";
    json m = json::array();
    for (int i = 0; i < d.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < d.dim(); ++j) {
            auto q = d(i, j).as_rational();
            row.push_back(swmap::to_string(q ? Rational(*q) : Rational(0)));
        }
        m.push_back(row);
    }
    return m;
}

json morphism_to_json(const Morphism& f)
{
    const auto& s = f.settings();
    json bounds = json::array();
    for (int l = 1; l <= s.L; ++l)
        bounds.push_back(f.bound(l));
    json meta{{"n", s.n},
              {"theta", deformation_to_json(s.theta)},
              {"theta_prime", deformation_to_json(s.theta_prime)},
              {"L", s.L},
              {"D", s.D},
              {"gauge", "pi-orthogonal"},
              {"symbols", symbol_names(s.theta, s.theta_prime)},
              {"bounds", bounds}};
    json comps = json::array();
    for (const auto& c : f.components()) {
        json e{{"order", c.order}, {"kind", c.kind == ComponentKind::Prime ? "prime" : "doubleprime"}};
        if (c.kind == ComponentKind::DoublePrime)
            e["position"] = c.position;
        e["symbol"] = to_json(c.symbol);
        comps.push_back(e);
    }
    return json{{"schema_version", kSchemaVersion}, {"metadata", meta}, {"components", comps}};
}

Morphism morphism_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("schema_version") || j.at("schema_version") != kSchemaVersion)
        throw SchemaError("unsupported schema_version");
    const auto& meta = get(j, "metadata");
    MorphismSettings s;
    s.n = get_int(meta, "n");
    s.L = get_int(meta, "L");
    s.D = get_int(meta, "D");
    if (s.n < 1 || s.n > kMaxDim)
        throw SchemaError("dimension out of range");
    try {
        s.theta = deformation_from_json(get(meta, "theta"), s.n, 0);
        s.theta_prime = deformation_from_json(get(meta, "theta_prime"), s.n, s.theta.symbol_count());
    } catch (const ConfigError& e) {
        throw SchemaError(e.what());
    }
    int symbols = s.theta.symbol_count() + s.theta_prime.symbol_count();
    if (meta.contains("symbols") && meta.at("symbols") != json(symbol_names(s.theta, s.theta_prime)))
        throw SchemaError("symbol list does not match the deformations");
    std::vector<MorphismComponent> parts;
    for (const auto& c : get(j, "components")) {
        MorphismComponent m;
        m.order = get_int(c, "order");
        const auto& kind = get(c, "kind");
        if (kind == "prime")
            m.kind = ComponentKind::Prime;
        else if (kind == "doubleprime") {
            m.kind = ComponentKind::DoublePrime;
            m.position = get_int(c, "position");
            if (m.position < 0 || m.position >= m.order)
                throw SchemaError("doubleprime position out of range");
        } else
            throw SchemaError("component kind must be prime or doubleprime");
        if (m.order < 1 || m.order > s.L)
            throw SchemaError("component order out of range");
        m.symbol = tensor_symbol_from_json(get(c, "symbol"), s.n, symbols);
        parts.push_back(std::move(m));
    }
    try {
        return Morphism::from_components(s, parts);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out)
        throw std::runtime_error("write failed for " + path);
}

SessionConfig config_from_json(const json& j, SessionConfig base)
{
    if (!j.is_object())
        throw ConfigError("config must be a JSON object");
    auto num = [&](const char* key, auto& target) {
        if (!j.contains(key))
            return;
        if (!j.at(key).is_number_integer())
            throw ConfigError(std::string("config field '") + key + "' must be an integer");
        target = j.at(key).get<std::remove_reference_t<decltype(target)>>();
    };
    num("n", base.n);
    num("L", base.L);
    num("D", base.D);
    num("seed", base.seed);
    num("jobs", base.jobs);
    if (j.contains("theta"))
        base.theta = j.at("theta");
    if (j.contains("theta_prime"))
        base.theta_prime = j.at("theta_prime");
    return base;
}

MorphismSettings to_settings(const SessionConfig& c)
{
    if (c.n < 1 || c.n > kMaxDim)
        throw ConfigError("n must be in 1..8");
    if (c.L < 1)
        throw ConfigError("L must be >= 1");
    if (c.D < 1)
        throw ConfigError("D must be >= 1");
    MorphismSettings s;
    s.n = c.n;
    s.L = c.L;
    s.D = c.D;
    s.theta = deformation_from_json(c.theta, c.n, 0);
    s.theta_prime = deformation_from_json(c.theta_prime, c.n, s.theta.symbol_count());
    if (s.theta.symbol_count() + s.theta_prime.symbol_count() > kMaxSymbols)
        throw ConfigError("too many deformation symbols (at most 8)");
    return s;
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, int n) : s_(text), n_(n) {}

    XPolynomial parse()
    {
        XPolynomial p(n_);
        skip();
        if (pos_ == s_.size())
            fail("empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first)
                fail("expected + or -");
            first = false;
            auto [m, q] = term();
            p.add_term(m, ThetaScalar(q * sign));
            skip();
        }
        return p;
    }

private:
    std::pair<MultiIndex, Rational> term()
    {
        MultiIndex m(n_);
        Rational q(1);
        bool any = false;
        for (;;) {
            skip();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                q *= number();
                skip();
                if (peek() == '/') {
                    ++pos_;
                    skip();
                    Rational d = number();
                    if (d == 0)
                        fail("zero denominator");
                    q /= d;
                }
            } else if (peek() == 'x') {
                ++pos_;
                int i = static_cast<int>(integer());
                if (i < 1 || i > n_)
                    fail("variable index out of range");
                int e = 1;
                skip();
                if (peek() == '^') {
                    ++pos_;
                    skip();
                    e = static_cast<int>(integer());
                }
                if (m[i - 1] + e > 255)
                    fail("exponent too large");
                m.set(i - 1, m[i - 1] + e);
            } else
                fail("expected a number or a variable");
            any = true;
            skip();
            if (peek() != '*')
                break;
            ++pos_;
        }
        if (!any)
            fail("empty term");
        return {m, q};
    }

    Rational number()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return Rational(mpz_class(s_.substr(start, pos_ - start)));
    }

    long integer()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_ || pos_ - start > 6)
            fail("expected a small integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("cannot parse '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
    }

    const std::string& s_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

XPolynomial parse_xpoly(const std::string& text, int n)
{
    return PolyParser(text, n).parse();
}

AElement parse_field(const std::string& text, int n)
{
    std::vector<XPolynomial> xi;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';'))
        xi.push_back(parse_xpoly(part, n));
    if (static_cast<int>(xi.size()) != n)
        throw std::invalid_argument("field needs " + std::to_string(n) + " components separated by ';'");
    return AElement::degree1(std::move(xi));
}

std::string to_string(const TensorSymbol& s, const std::vector<std::string>& names)
{
    std::ostringstream out;
    auto mono = [](const MultiIndex& m, const char* var) {
        std::string r;
        for (int i = 0; i < m.dim(); ++i) {
            if (m[i] == 0)
                continue;
            if (!r.empty())
                r += "*";
            r += var + std::to_string(i + 1);
            if (m[i] > 1)
                r += "^" + std::to_string(m[i]);
        }
        return r.empty() ? std::string("1") : r;
    };
    for (const auto& [t, c] : s.sorted_terms()) {
        out << "(" << c.str(names) << ") " << mono(t.head, "x");
        if (t.head_xi)
            out << "*xi" << t.head_xi;
        for (const auto& sl : t.slots)
            out << " [" << mono(sl.p, "p") << (sl.tag == 0 ? std::string(" a0") : " a" + std::to_string(sl.tag)) << "]";
        out << "\n";
    }
    return out.str();
}

}  // namespace swmap::io
