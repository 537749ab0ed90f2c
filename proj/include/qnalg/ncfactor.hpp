#ifndef QNALG_NCFACTOR_HPP
#define QNALG_NCFACTOR_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"
#include "errors.hpp"
#include "qn/subset.hpp"
#include "quasidet.hpp"
#include "random.hpp"

namespace qnalg
{

using qn::Subset;

// Polynomial in a central variable t, left coefficients stored from t^n down
// to t^0. The zero polynomial is the empty list.
template <DivisionContext C>
struct OrePoly
{
    using T = typename C::value_type;
    std::vector<T> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const OrePoly &, const OrePoly &) = default;
};

template <DivisionContext C>
OrePoly<C> make_ore_poly(const C &ctx, std::vector<typename C::value_type> coeffs)
{
    auto first = std::find_if(coeffs.begin(), coeffs.end(), [&](const auto &c) { return !ctx.is_zero(c); });
    coeffs.erase(coeffs.begin(), first);
    return OrePoly<C>{std::move(coeffs)};
}

// t - xi
template <DivisionContext C>
OrePoly<C> linear_factor(const C &ctx, const typename C::value_type &xi)
{
    return OrePoly<C>{{ctx.one(), -xi}};
}

template <DivisionContext C>
OrePoly<C> ore_mul(const C &ctx, const OrePoly<C> &p, const OrePoly<C> &q)
{
    if (p.is_zero() || q.is_zero()) {
        return {};
    }
    const std::size_t np = p.coeffs.size(), nq = q.coeffs.size();
    std::vector<typename C::value_type> out(np + nq - 1, ctx.zero());
    for (std::size_t a = 0; a < np; ++a) {
        for (std::size_t b = 0; b < nq; ++b) {
            out[a + b] = out[a + b] + p.coeffs[a] * q.coeffs[b];
        }
    }
    return make_ore_poly(ctx, std::move(out));
}

template <DivisionContext C>
struct LinearDivision
{
    OrePoly<C> quotient;
    typename C::value_type remainder;
};

// P = Q (t - xi) + rem, where rem = a_0 xi^n + ... + a_n.
template <DivisionContext C>
LinearDivision<C> right_divide_linear(const C &ctx, const OrePoly<C> &p, const typename C::value_type &xi)
{
    if (p.degree() < 1) {
        throw Error("right division by a linear factor needs degree >= 1");
    }
    std::vector<typename C::value_type> q;
    typename C::value_type carry = ctx.zero();
    for (std::size_t k = 0; k + 1 < p.coeffs.size(); ++k) {
        carry = p.coeffs[k] + carry * xi;
        q.push_back(carry);
    }
    return {make_ore_poly(ctx, std::move(q)), p.coeffs.back() + carry * xi};
}

template <DivisionContext C>
std::string render_poly(const C &ctx, const OrePoly<C> &p, const std::string &var = "t")
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const int n = p.degree();
    for (int k = 0; k <= n; ++k) {
        const auto &c = p.coeffs[static_cast<std::size_t>(k)];
        if (ctx.is_zero(c)) {
            continue;
        }
        const int e = n - k;
        std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
        std::string coef = ctx.render(c);
        if (!out.empty()) {
            out += " + ";
        }
        if (mono.empty()) {
            const std::string r = coef;
            const bool compound = r.find_first_of("+-", 1) != std::string::npos || r.front() == '-';
            out += !out.empty() && compound ? "(" + r + ")" : r;
        } else if (c == ctx.one()) {
            out += mono;
        } else {
            out += "(" + coef + ")" + mono;
        }
    }
    return out;
}

// ---- the x_{A,i} ----

// V(ys) x V(ys)^{-1}; failure to build or invert V is a genericity failure.
template <DivisionContext C>
typename C::value_type vandermonde_conjugate(const C &ctx, std::span<const typename C::value_type> ys,
                                             const typename C::value_type &x, bool inverse_first = false)
{
    typename C::value_type v, vinv;
    try {
        v = vandermonde_qd(ctx, ys);
        vinv = ctx.invert(v);
    } catch (const NotInvertible &e) {
        throw GenericityFailure(std::string("Vandermonde quasideterminant not invertible: ") + e.what());
    } catch (const SubmatrixNotInvertible &e) {
        throw GenericityFailure(std::string("Vandermonde quasideterminant undefined: ") + e.what());
    }
    return inverse_first ? vinv * x * v : v * x * vinv;
}

// Roots x_1..x_n with a per-object cache of x_{A,i} keyed by (A, i).
template <DivisionContext C>
class RootSet
{
public:
    using T = typename C::value_type;

    RootSet(C ctx, std::vector<T> roots) : m_ctx(std::move(ctx)), m_roots(std::move(roots))
    {
        qn::check_n(n());
        for (std::size_t a = 0; a < m_roots.size(); ++a) {
            for (std::size_t b = a + 1; b < m_roots.size(); ++b) {
                if (m_roots[a] == m_roots[b]) {
                    m_duplicate = {static_cast<int>(a) + 1, static_cast<int>(b) + 1};
                }
            }
        }
    }

    const C &ctx() const { return m_ctx; }
    int n() const { return static_cast<int>(m_roots.size()); }
    const std::vector<T> &roots() const { return m_roots; }
    const T &root(int i) const { return m_roots.at(static_cast<std::size_t>(i - 1)); }
    // First pair of equal roots, or (0, 0).
    std::pair<int, int> duplicate() const { return m_duplicate; }

    // x_{A,i} = V x_i V^{-1}, V the Vandermonde quasideterminant of the roots
    // over `order` followed by i.
    T compute(const std::vector<int> &order, int i) const
    {
        check_index(order, i);
        std::vector<T> ys;
        for (int a : order) {
            ys.push_back(root(a));
        }
        ys.push_back(root(i));
        return vandermonde_conjugate<C>(m_ctx, ys, root(i));
    }

    const T &x(Subset a, int i)
    {
        auto key = std::make_pair(a.mask(), i);
        auto it = m_cache.find(key);
        if (it == m_cache.end()) {
            T value;
            try {
                value = compute(a.elements(), i);
            } catch (const GenericityFailure &e) {
                throw GenericityFailure("x_{" + a.str() + "," + std::to_string(i) + "}: " + e.what());
            }
            it = m_cache.emplace(key, std::move(value)).first;
        }
        return it->second;
    }

    std::size_t cache_size() const { return m_cache.size(); }

private:
    void check_index(const std::vector<int> &order, int i) const
    {
        Subset seen;
        for (int a : order) {
            if (a < 1 || a > n() || seen.contains(a)) {
                throw Error("bad subset listing for x_{A,i}");
            }
            seen = seen.with(a);
        }
        if (i < 1 || i > n() || seen.contains(i)) {
            throw Error("index " + std::to_string(i) + " must lie in 1..n outside A");
        }
    }

    C m_ctx;
    std::vector<T> m_roots;
    std::pair<int, int> m_duplicate{0, 0};
    std::map<std::pair<std::uint16_t, int>, T> m_cache;
};

template <DivisionContext C>
typename C::value_type x_Ai(RootSet<C> &roots, Subset a, int i)
{
    return roots.x(a, i);
}

// x_{A,i} from the values x_{B,.}, with A \ B listed ascending.
template <DivisionContext C>
typename C::value_type x_Ai_relative(RootSet<C> &roots, Subset b, Subset a, int i)
{
    if (!b.subset_of(a) || a.contains(i)) {
        throw Error("x_Ai_relative needs B inside A and i outside A");
    }
    std::vector<typename C::value_type> ys;
    for (int e : (a - b).elements()) {
        ys.push_back(roots.x(b, e));
    }
    ys.push_back(roots.x(b, i));
    return vandermonde_conjugate<C>(roots.ctx(), ys, roots.x(b, i));
}

// The downward form: x_{C,j} = V^{-1} x_{B,j} V with V the Vandermonde
// quasideterminant of x_{C,j_1}, ..., x_{C,j_q}, x_{C,j}, where B \ C lists the j_s.
template <DivisionContext C>
typename C::value_type x_Cj_relative_down(RootSet<C> &roots, Subset b, Subset c, int j)
{
    if (!c.subset_of(b) || b.contains(j)) {
        throw Error("x_Cj_relative_down needs C inside B and j outside B");
    }
    std::vector<typename C::value_type> ys;
    for (int e : (b - c).elements()) {
        ys.push_back(roots.x(c, e));
    }
    ys.push_back(roots.x(c, j));
    return vandermonde_conjugate<C>(roots.ctx(), ys, roots.x(b, j), true);
}

// ---- genericity ----

struct GenericityIssue
{
    enum class Kind { duplicate_roots, undefined, coincident };
    Kind kind;
    Subset a;
    int i = 0;
    int j = 0;
    std::string detail;

    std::string str() const
    {
        switch (kind) {
        case Kind::duplicate_roots:
            return "roots " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
        case Kind::undefined:
            return "x_{" + a.str() + "," + std::to_string(i) + "} undefined: " + detail;
        case Kind::coincident:
            return "x_{" + a.str() + "," + std::to_string(i) + "} = x_{" + a.str() + "," + std::to_string(j) + "}";
        }
        return {};
    }
};

struct GenericityReport
{
    std::vector<GenericityIssue> issues;
    std::size_t values_checked = 0;

    bool generic() const { return issues.empty(); }
};

// Every x_{A,i} must be defined, and for each A the values x_{A,i}, i outside
// A, must be pairwise distinct.
template <DivisionContext C>
GenericityReport genericity_check(RootSet<C> &roots)
{
    GenericityReport report;
    if (auto [p, q] = roots.duplicate(); p != 0) {
        report.issues.push_back({GenericityIssue::Kind::duplicate_roots, {}, p, q, {}});
    }
    const int n = roots.n();
    for (Subset a : qn::subsets_of(Subset::full(n))) {
        std::vector<std::pair<int, typename C::value_type>> level;
        for (int i = 1; i <= n; ++i) {
            if (a.contains(i)) {
                continue;
            }
            try {
                level.emplace_back(i, roots.x(a, i));
                ++report.values_checked;
            } catch (const GenericityFailure &e) {
                report.issues.push_back({GenericityIssue::Kind::undefined, a, i, 0, e.what()});
            }
        }
        for (std::size_t p = 0; p < level.size(); ++p) {
            for (std::size_t q = p + 1; q < level.size(); ++q) {
                if (level[p].second == level[q].second) {
                    report.issues.push_back(
                        {GenericityIssue::Kind::coincident, a, level[p].first, level[q].first, {}});
                }
            }
        }
    }
    return report;
}

template <DivisionContext C>
void require_generic(RootSet<C> &roots)
{
    const GenericityReport report = genericity_check(roots);
    if (!report.generic()) {
        throw GenericityFailure("roots not generic: " + report.issues.front().str());
    }
}

// Draws root sets until one passes the genericity check.
template <DivisionContext C>
RootSet<C> random_generic_roots(const C &ctx, Rng &rng, int n, int max_tries = 100)
{
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<typename C::value_type> xs;
        for (int i = 0; i < n; ++i) {
            xs.push_back(random_element(ctx, rng));
        }
        RootSet<C> roots(ctx, std::move(xs));
        if (genericity_check(roots).generic()) {
            return roots;
        }
    }
    throw GenericityFailure("no generic root set after " + std::to_string(max_tries) + " draws");
}

// ---- factorizations ----

template <DivisionContext C>
struct Factorization
{
    std::vector<int> ordering;                  // i_1, ..., i_n
    std::vector<typename C::value_type> factors; // xi_1, ..., xi_n; xi_k = x_{i_1..i_{k-1}, i_k}
    OrePoly<C> expanded;                        // a_0 (t - xi_n) ... (t - xi_1)
};

template <DivisionContext C>
struct FactorizationSet
{
    OrePoly<C> polynomial;
    std::vector<Factorization<C>> factorizations;
};

inline constexpr int kMaxFactorN = 8;

template <DivisionContext C>
std::vector<typename C::value_type> ordering_factors(RootSet<C> &roots, const std::vector<int> &ordering)
{
    if (static_cast<int>(ordering.size()) != roots.n()) {
        throw Error("ordering must list every root once");
    }
    std::vector<typename C::value_type> out;
    Subset prefix;
    for (int i : ordering) {
        if (i < 1 || i > roots.n() || prefix.contains(i)) {
            throw Error("ordering must be a permutation of 1..n");
        }
        out.push_back(roots.x(prefix, i));
        prefix = prefix.with(i);
    }
    return out;
}

template <DivisionContext C>
Factorization<C> factorize(RootSet<C> &roots, const std::vector<int> &ordering, const typename C::value_type &a0)
{
    const C &ctx = roots.ctx();
    Factorization<C> f{ordering, ordering_factors(roots, ordering), OrePoly<C>{{a0}}};
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
        f.expanded = ore_mul(ctx, f.expanded, linear_factor(ctx, *it));
    }
    return f;
}

// All n! factorizations, orderings in lexicographic order. Every expansion
// must agree; a disagreement, or a cached x_{A,i} that differs from a fresh
// computation with A listed in reverse, is a ConsistencyViolation.
template <DivisionContext C>
FactorizationSet<C> factorize_all(RootSet<C> &roots, const typename C::value_type &a0)
{
    const int n = roots.n();
    if (n > kMaxFactorN) {
        throw ResourceLimit("factorize_all supports n <= " + std::to_string(kMaxFactorN));
    }
    if (roots.ctx().is_zero(a0)) {
        throw Error("leading coefficient must be nonzero");
    }
    require_generic(roots);
    FactorizationSet<C> out;
    std::vector<int> ordering(static_cast<std::size_t>(n));
    std::iota(ordering.begin(), ordering.end(), 1);
    do {
        Factorization<C> f = factorize(roots, ordering, a0);
        if (out.factorizations.empty()) {
            out.polynomial = f.expanded;
        } else if (!(f.expanded == out.polynomial)) {
            throw ConsistencyViolation("expansions differ between orderings");
        }
        out.factorizations.push_back(std::move(f));
    } while (std::next_permutation(ordering.begin(), ordering.end()));

    // Spot-check the cache on the last ordering's factors.
    const auto &last = out.factorizations.back();
    Subset prefix;
    std::vector<int> listed;
    for (std::size_t k = 0; k < last.ordering.size(); ++k) {
        std::vector<int> reversed(listed.rbegin(), listed.rend());
        if (!(roots.compute(reversed, last.ordering[k]) == last.factors[k])) {
            throw ConsistencyViolation("cached x_{A,i} disagrees with recomputation");
        }
        listed.push_back(last.ordering[k]);
    }
    return out;
}

// c_m = sum over j_1 > ... > j_m of y_{j_1} ... y_{j_m}, m = 0..n, with
// y_k = x_{i_1..i_{k-1}, i_k}. The expansion has a_m = (-1)^m a_0 c_m.
template <DivisionContext C>
std::vector<typename C::value_type> vieta(RootSet<C> &roots, const std::vector<int> &ordering)
{
    const C &ctx = roots.ctx();
    const std::vector<typename C::value_type> y = ordering_factors(roots, ordering);
    const std::size_t n = y.size();
    // e[m] after processing y_1..y_k: sums over decreasing index choices among them.
    std::vector<typename C::value_type> e(n + 1, ctx.zero());
    e[0] = ctx.one();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = k + 1; m >= 1; --m) {
            e[m] = e[m] + y[k] * e[m - 1];
        }
    }
    return e;
}

// ---- sum and product relations of the x_{A,i} ----

struct RelationReport
{
    struct Failure
    {
        std::string relation;
        Subset a;
        int i;
        int j;
    };
    std::vector<Failure> failures;
    std::size_t checked = 0;

    bool ok() const { return failures.empty(); }
};

template <DivisionContext C>
RelationReport verify_relations_32(RootSet<C> &roots)
{
    RelationReport report;
    const int n = roots.n();
    for (Subset a : qn::subsets_of(Subset::full(n))) {
        if (a.size() >= n - 1) {
            continue;
        }
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                if (a.contains(i) || a.contains(j)) {
                    continue;
                }
                const auto &xij = roots.x(a.with(i), j), &xi = roots.x(a, i);
                const auto &xji = roots.x(a.with(j), i), &xj = roots.x(a, j);
                report.checked += 2;
                if (!(xij + xi == xji + xj)) {
                    report.failures.push_back({"sum", a, i, j});
                }
                if (!(xij * xi == xji * xj)) {
                    report.failures.push_back({"product", a, i, j});
                }
            }
        }
    }
    return report;
}

} // namespace qnalg

#endif
