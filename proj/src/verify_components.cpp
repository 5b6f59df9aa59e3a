#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "swmap/basis.hpp"
#include "swmap/solver.hpp"

namespace swmap {

namespace {

ThetaScalar sign_of(int bar_sum) { return ThetaScalar(bar_sum % 2 == 0 ? 1 : -1); }

int bar(const AElement& a) { return a.is_degree0() && !a.is_zero() ? -1 : 0; }

// Tuples with degree-0 arguments exactly at the given positions.
struct Pattern {
    std::vector<int> degree;  // per position
    long count = 1;
};

}  // namespace

VerificationReport verify_component_equations(const Morphism& f, int l, int degree_bound, int jobs)
{
    const auto& s = f.settings();
    int n = s.n;
    VerificationReport report;
    report.identity = "component-equations";
    report.degrees_checked = {l};
    if (l < 1 || l > f.order())
        throw std::invalid_argument("component order not present");
    if (l * degree_bound > f.bound(l))
        throw std::invalid_argument("basis degree exceeds the range the truncation reproduces");

    std::vector<TensorSymbol> comps;
    for (int k = 1; k <= l; ++k)
        comps.push_back(f.at(k));
    std::vector<SymbolEvaluator> ev;
    ev.reserve(comps.size());
    for (const auto& c : comps)
        ev.emplace_back(c);
    auto F = [&](int k, const std::vector<AElement>& args) { return ev[static_cast<std::size_t>(k - 1)](args); };

    auto b0 = monomial_basis(n, 0, degree_bound);
    auto b1 = monomial_basis(n, 1, degree_bound);

    std::vector<Pattern> patterns;
    for (int i = 0; i < l; ++i)
        for (int j = i; j < l; ++j) {
            Pattern p;
            p.degree.assign(static_cast<std::size_t>(l), 1);
            p.degree[static_cast<std::size_t>(i)] = 0;
            p.degree[static_cast<std::size_t>(j)] = 0;
            for (int d : p.degree)
                p.count *= static_cast<long>(d == 0 ? b0.size() : b1.size());
            patterns.push_back(p);
        }
    long total = 0;
    for (const auto& p : patterns)
        total += p.count;

    // returns true when delta f_l = Psi_l holds on the tuple
    auto check = [&](const std::vector<AElement>& a) {
        AElement lhs = differential_d(F(l, a));
        int bars = 0;
        for (int i = 0; i < l; ++i) {
            auto changed = a;
            changed[static_cast<std::size_t>(i)] = differential_d(a[static_cast<std::size_t>(i)]);
            lhs -= F(l, changed) * sign_of(bars);
            bars += bar(a[static_cast<std::size_t>(i)]);
        }
        AElement rhs(n);
        bars = 0;
        for (int i = 1; i < l; ++i) {
            bars += bar(a[static_cast<std::size_t>(i - 1)]);
            std::vector<AElement> merged(a.begin(), a.begin() + (i - 1));
            merged.push_back(star(a[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)], s.theta));
            merged.insert(merged.end(), a.begin() + i + 1, a.end());
            rhs += F(l - 1, merged) * sign_of(bars);
            std::vector<AElement> left(a.begin(), a.begin() + i), right(a.begin() + i, a.end());
            rhs -= star(F(i, left), F(l - i, right), s.theta_prime) * sign_of(bars);
        }
        return lhs == rhs;
    };

    auto tuple_at = [&](long index, std::vector<AElement>& a, std::string& label) {
        std::size_t pi = 0;
        while (index >= patterns[pi].count)
            index -= patterns[pi++].count;
        a.assign(static_cast<std::size_t>(l), AElement(n));
        std::vector<std::string> names(static_cast<std::size_t>(l));
        for (int i = l - 1; i >= 0; --i) {
            const auto& basis = patterns[pi].degree[static_cast<std::size_t>(i)] == 0 ? b0 : b1;
            long m = static_cast<long>(basis.size());
            const auto& e = basis[static_cast<std::size_t>(index % m)];
            index /= m;
            a[static_cast<std::size_t>(i)] = e.element;
            names[static_cast<std::size_t>(i)] = e.label;
        }
        label = "(";
        for (int i = 0; i < l; ++i)
            label += (i ? ", " : "") + names[static_cast<std::size_t>(i)];
        label += ")";
    };

    std::atomic<long> first_fail{std::numeric_limits<long>::max()};
    std::atomic<long> checked{0};
    auto worker = [&](int t, int nthreads) {
        std::vector<AElement> a;
        std::string label;
        for (long idx = t; idx < total; idx += nthreads) {
            if (idx > first_fail.load())
                break;
            tuple_at(idx, a, label);
            ++checked;
            if (!check(a)) {
                long cur = first_fail.load();
                while (idx < cur && !first_fail.compare_exchange_weak(cur, idx)) {
                }
            }
        }
    };
    int nthreads = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t)
        pool.emplace_back(worker, t, nthreads);
    worker(0, nthreads);
    for (auto& th : pool)
        th.join();

    report.checked = checked.load();
    if (first_fail.load() != std::numeric_limits<long>::max()) {
        std::vector<AElement> a;
        std::string label;
        tuple_at(first_fail.load(), a, label);
        report.pass = false;
        report.witness = label;
    }
    return report;
}

}  // namespace swmap
