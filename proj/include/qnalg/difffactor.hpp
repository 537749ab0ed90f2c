#ifndef QNALG_DIFFFACTOR_HPP
#define QNALG_DIFFFACTOR_HPP

#include <algorithm>
#include <map>
#include <numeric>
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

// sum_k a_k D^{n-k}, coefficients stored from D^n down to D^0; the zero
// operator is the empty list.
template <DivisionContext C>
struct DiffOp
{
    using T = typename C::value_type;
    std::vector<T> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const DiffOp &, const DiffOp &) = default;
};

template <DivisionContext C>
DiffOp<C> make_diffop(const C &ctx, std::vector<typename C::value_type> coeffs)
{
    auto first = std::find_if(coeffs.begin(), coeffs.end(), [&](const auto &c) { return !ctx.is_zero(c); });
    coeffs.erase(coeffs.begin(), first);
    return DiffOp<C>{std::move(coeffs)};
}

// D - f
template <DivisionContext C>
DiffOp<C> first_order(const C &ctx, const typename C::value_type &f)
{
    return DiffOp<C>{{ctx.one(), -f}};
}

template <DivisionContext C>
DiffOp<C> identity_op(const C &ctx)
{
    return DiffOp<C>{{ctx.one()}};
}

// D^p b = sum_r binom(p, r) b^{(r)} D^{p-r}.
template <DivisionContext C>
DiffOp<C> diffop_compose(const C &ctx, const DiffOp<C> &l, const DiffOp<C> &m)
{
    using T = typename C::value_type;
    if (l.is_zero() || m.is_zero()) {
        return {};
    }
    const int n = l.order(), k = m.order();
    std::vector<T> out(static_cast<std::size_t>(n + k + 1), ctx.zero());
    for (int q = 0; q <= k; ++q) {
        // Derivatives b, b', ..., b^{(n)} of this coefficient of M.
        std::vector<T> ders{m.coeffs[static_cast<std::size_t>(q)]};
        for (int r = 1; r <= n; ++r) {
            ders.push_back(ctx.derive(ders.back()));
        }
        for (int p_idx = 0; p_idx <= n; ++p_idx) {
            const int p = n - p_idx;
            const T &a = l.coeffs[static_cast<std::size_t>(p_idx)];
            if (ctx.is_zero(a)) {
                continue;
            }
            Integer binom = 1;
            for (int r = 0; r <= p; ++r) {
                if (r > 0) {
                    binom = binom * (p - r + 1) / r;
                }
                // exponent p - r + (k - q); index from the top is n + k - exponent
                const std::size_t idx = static_cast<std::size_t>(n + k - (p - r + k - q));
                out[idx] = out[idx] + a * ctx.from_rational(Rational(binom)) * ders[static_cast<std::size_t>(r)];
            }
        }
    }
    return make_diffop(ctx, std::move(out));
}

template <DivisionContext C>
typename C::value_type diffop_apply(const C &ctx, const DiffOp<C> &l, const typename C::value_type &phi)
{
    typename C::value_type out = ctx.zero();
    if (l.is_zero()) {
        return out;
    }
    const int n = l.order();
    std::vector<typename C::value_type> ders{phi};
    for (int r = 1; r <= n; ++r) {
        ders.push_back(ctx.derive(ders.back()));
    }
    for (int k = 0; k <= n; ++k) {
        out = out + l.coeffs[static_cast<std::size_t>(k)] * ders[static_cast<std::size_t>(n - k)];
    }
    return out;
}

template <DivisionContext C>
std::string render_diffop(const C &ctx, const DiffOp<C> &l)
{
    if (l.is_zero()) {
        return "0";
    }
    std::string out;
    const int n = l.order();
    for (int k = 0; k <= n; ++k) {
        const auto &c = l.coeffs[static_cast<std::size_t>(k)];
        if (ctx.is_zero(c)) {
            continue;
        }
        const int e = n - k;
        const std::string mono = e == 0 ? "" : (e == 1 ? "D" : "D^" + std::to_string(e));
        if (!out.empty()) {
            out += " + ";
        }
        if (mono.empty()) {
            const std::string r = ctx.render(c);
            const bool compound = r.find_first_of("+-", 1) != std::string::npos || r.front() == '-';
            out += !out.empty() && compound ? "(" + r + ")" : r;
        } else if (c == ctx.one()) {
            out += mono;
        } else {
            out += "(" + ctx.render(c) + ")" + mono;
        }
    }
    return out;
}

// u_0 = 1, u_{p+1} = u_p' + g u_p, i.e. (D + g)^p applied to 1.
template <DivisionContext C>
typename C::value_type u_p(const C &ctx, const typename C::value_type &g, int p)
{
    if (p < 0) {
        throw Error("u_p needs p >= 0");
    }
    typename C::value_type u = ctx.one();
    for (int q = 0; q < p; ++q) {
        u = ctx.derive(u) + g * u;
    }
    return u;
}

template <DivisionContext C>
typename C::value_type checked_invert(const C &ctx, const typename C::value_type &a, const std::string &what)
{
    try {
        return ctx.invert(a);
    } catch (const NotInvertible &e) {
        throw GenericityFailure(what + " not invertible: " + e.what());
    }
}

// |u_p(f_s)|_{mm} with rows p = 0..m-1 and columns s = 1..m.
template <DivisionContext C>
typename C::value_type theta_qd(const C &ctx, const std::vector<typename C::value_type> &fs)
{
    const std::size_t m = fs.size();
    if (m == 0) {
        throw Error("theta_qd needs at least one argument");
    }
    Matrix<typename C::value_type> mat(m, m, ctx.zero());
    for (std::size_t s = 0; s < m; ++s) {
        typename C::value_type u = ctx.one();
        for (std::size_t p = 0; p < m; ++p) {
            mat(p, s) = u;
            u = ctx.derive(u) + fs[s] * u;
        }
    }
    try {
        return quasideterminant(ctx, mat, m, m);
    } catch (const SubmatrixNotInvertible &e) {
        throw GenericityFailure(std::string("theta quasideterminant undefined: ") + e.what());
    }
}

// theta f theta^{-1} + theta' theta^{-1}, or with inverse_first
// theta^{-1} f theta - theta^{-1} theta'.
template <DivisionContext C>
typename C::value_type gauge(const C &ctx, const typename C::value_type &theta, const typename C::value_type &f,
                             bool inverse_first = false)
{
    const auto inv = checked_invert(ctx, theta, "theta quasideterminant");
    if (inverse_first) {
        return inv * f * theta - inv * ctx.derive(theta);
    }
    return theta * f * inv + ctx.derive(theta) * inv;
}

// Differential roots f_1..f_n with a per-object cache of f_{A,i}.
template <DivisionContext C>
class DiffRootSet
{
public:
    using T = typename C::value_type;

    DiffRootSet(C ctx, std::vector<T> fs) : m_ctx(std::move(ctx)), m_fs(std::move(fs)) { qn::check_n(n()); }

    const C &ctx() const { return m_ctx; }
    int n() const { return static_cast<int>(m_fs.size()); }
    const std::vector<T> &values() const { return m_fs; }
    const T &f(int i) const { return m_fs.at(static_cast<std::size_t>(i - 1)); }

    // theta(f_{a_1}, ..., f_{a_k}, f_i) f_i theta^{-1} + theta' theta^{-1}.
    T compute(const std::vector<int> &order, int i) const
    {
        Subset seen;
        std::vector<T> args;
        for (int a : order) {
            if (a < 1 || a > n() || seen.contains(a)) {
                throw Error("bad subset listing for f_{A,i}");
            }
            seen = seen.with(a);
            args.push_back(f(a));
        }
        if (i < 1 || i > n() || seen.contains(i)) {
            throw Error("index " + std::to_string(i) + " must lie in 1..n outside A");
        }
        args.push_back(f(i));
        return gauge(m_ctx, theta_qd(m_ctx, args), f(i));
    }

    const T &value(Subset a, int i)
    {
        auto key = std::make_pair(a.mask(), i);
        auto it = m_cache.find(key);
        if (it == m_cache.end()) {
            T v;
            try {
                v = compute(a.elements(), i);
            } catch (const GenericityFailure &e) {
                throw GenericityFailure("f_{" + a.str() + "," + std::to_string(i) + "}: " + e.what());
            }
            it = m_cache.emplace(key, std::move(v)).first;
        }
        return it->second;
    }

private:
    C m_ctx;
    std::vector<T> m_fs;
    std::map<std::pair<std::uint16_t, int>, T> m_cache;
};

template <DivisionContext C>
typename C::value_type f_Ai(DiffRootSet<C> &fs, Subset a, int i)
{
    return fs.value(a, i);
}

// f_{A,i} from the values f_{B,.}, with A \ B listed ascending.
template <DivisionContext C>
typename C::value_type f_relative_up(DiffRootSet<C> &fs, Subset b, Subset a, int i)
{
    if (!b.subset_of(a) || a.contains(i)) {
        throw Error("f_relative_up needs B inside A and i outside A");
    }
    std::vector<typename C::value_type> args;
    for (int e : (a - b).elements()) {
        args.push_back(fs.value(b, e));
    }
    args.push_back(fs.value(b, i));
    return gauge(fs.ctx(), theta_qd(fs.ctx(), args), fs.value(b, i));
}

// f_{C,j} = theta^{-1} f_{B,j} theta - theta^{-1} theta', theta over
// f_{C,j_1}, ..., f_{C,j_q}, f_{C,j} with B \ C listing the j_s.
template <DivisionContext C>
typename C::value_type f_relative_down(DiffRootSet<C> &fs, Subset b, Subset c, int j)
{
    if (!c.subset_of(b) || b.contains(j)) {
        throw Error("f_relative_down needs C inside B and j outside B");
    }
    std::vector<typename C::value_type> args;
    for (int e : (b - c).elements()) {
        args.push_back(fs.value(c, e));
    }
    args.push_back(fs.value(c, j));
    return gauge(fs.ctx(), theta_qd(fs.ctx(), args), fs.value(b, j), true);
}

// Every f_{A,i} defined; returns the first failure message, empty if none.
template <DivisionContext C>
std::string diff_genericity_failure(DiffRootSet<C> &fs)
{
    for (Subset a : qn::subsets_of(Subset::full(fs.n()))) {
        for (int i = 1; i <= fs.n(); ++i) {
            if (a.contains(i)) {
                continue;
            }
            try {
                fs.value(a, i);
            } catch (const GenericityFailure &e) {
                return e.what();
            }
        }
    }
    return {};
}

template <DivisionContext C>
DiffRootSet<C> random_generic_diff_roots(const C &ctx, Rng &rng, int n, int max_tries = 50)
{
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<typename C::value_type> xs;
        for (int i = 0; i < n; ++i) {
            xs.push_back(random_element(ctx, rng));
        }
        DiffRootSet<C> fs(ctx, std::move(xs));
        if (diff_genericity_failure(fs).empty()) {
            return fs;
        }
    }
    throw GenericityFailure("no generic differential root set after " + std::to_string(max_tries) + " draws");
}

// ---- Wronskian flags ----

// W = |W~|_{1k}, W~ with rows phi^{(k-1)} down to phi; b_k = W' W^{-1}.
template <DivisionContext C>
typename C::value_type wronskian_qd(const C &ctx, const std::vector<typename C::value_type> &phis, int k)
{
    if (k < 1 || k > static_cast<int>(phis.size())) {
        throw Error("Wronskian level out of range");
    }
    const std::size_t m = static_cast<std::size_t>(k);
    Matrix<typename C::value_type> w(m, m, ctx.zero());
    for (std::size_t s = 0; s < m; ++s) {
        typename C::value_type d = phis[s];
        for (std::size_t r = m; r-- > 0;) {
            w(r, s) = d;
            d = ctx.derive(d);
        }
    }
    try {
        return quasideterminant(ctx, w, 1, m);
    } catch (const SubmatrixNotInvertible &e) {
        throw GenericityFailure(std::string("Wronskian quasideterminant undefined: ") + e.what());
    }
}

template <DivisionContext C>
typename C::value_type b_k(const C &ctx, const std::vector<typename C::value_type> &flag, int k)
{
    const auto w = wronskian_qd(ctx, flag, k);
    return ctx.derive(w) * checked_invert(ctx, w, "Wronskian quasideterminant");
}

template <DivisionContext C>
struct MiuraDecomposition
{
    std::vector<typename C::value_type> b; // b_1, ..., b_n
    DiffOp<C> op;                          // (D - b_n) ... (D - b_1)
};

template <DivisionContext C>
MiuraDecomposition<C> miura_factorize(const C &ctx, const std::vector<typename C::value_type> &flag)
{
    if (flag.empty()) {
        throw Error("flag must be nonempty");
    }
    MiuraDecomposition<C> out;
    out.op = identity_op(ctx);
    for (int k = 1; k <= static_cast<int>(flag.size()); ++k) {
        out.b.push_back(b_k(ctx, flag, k));
        out.op = diffop_compose(ctx, first_order(ctx, out.b.back()), out.op);
    }
    return out;
}

// ---- factorizations from differential roots ----

template <DivisionContext C>
struct DiffFactorization
{
    std::vector<int> ordering;                  // i_1, ..., i_n
    std::vector<typename C::value_type> factors; // f_{i_1}, f_{i_1,i_2}, ..., f_{i_1..i_{n-1},i_n}
    DiffOp<C> composed;                         // (D - factors[n-1]) ... (D - factors[0])
};

template <DivisionContext C>
struct DiffFactorizationSet
{
    DiffOp<C> op;
    std::vector<DiffFactorization<C>> factorizations;
};

inline constexpr int kMaxDiffFactorN = 6;

template <DivisionContext C>
DiffFactorization<C> diff_factorize(DiffRootSet<C> &fs, const std::vector<int> &ordering)
{
    const C &ctx = fs.ctx();
    if (static_cast<int>(ordering.size()) != fs.n()) {
        throw Error("ordering must list every index once");
    }
    DiffFactorization<C> out{ordering, {}, identity_op(ctx)};
    Subset prefix;
    for (int i : ordering) {
        if (i < 1 || i > fs.n() || prefix.contains(i)) {
            throw Error("ordering must be a permutation of 1..n");
        }
        out.factors.push_back(fs.value(prefix, i));
        out.composed = diffop_compose(ctx, first_order(ctx, out.factors.back()), out.composed);
        prefix = prefix.with(i);
    }
    return out;
}

template <DivisionContext C>
DiffFactorizationSet<C> factorize_all_diff(DiffRootSet<C> &fs)
{
    const int n = fs.n();
    if (n > kMaxDiffFactorN) {
        throw ResourceLimit("factorize_all_diff supports n <= " + std::to_string(kMaxDiffFactorN));
    }
    if (auto failure = diff_genericity_failure(fs); !failure.empty()) {
        throw GenericityFailure(failure);
    }
    DiffFactorizationSet<C> out;
    std::vector<int> ordering(static_cast<std::size_t>(n));
    std::iota(ordering.begin(), ordering.end(), 1);
    do {
        DiffFactorization<C> f = diff_factorize(fs, ordering);
        if (out.factorizations.empty()) {
            out.op = f.composed;
        } else if (!(f.composed == out.op)) {
            throw ConsistencyViolation("composed operators differ between orderings");
        }
        out.factorizations.push_back(std::move(f));
    } while (std::next_permutation(ordering.begin(), ordering.end()));
    return out;
}

// ---- relation checks ----

struct DiffRelationReport
{
    struct Failure
    {
        std::string relation;
        std::string where;
    };
    std::vector<Failure> failures;
    std::size_t checked = 0;

    bool ok() const { return failures.empty(); }
};

// f_{A+i,j} + f_{A,i} = f_{A+j,i} + f_{A,j} and
// f_{A+i,j} f_{A,i} - f_{A,i}' = f_{A+j,i} f_{A,j} - f_{A,j}'.
template <DivisionContext C>
DiffRelationReport verify_relations_43(DiffRootSet<C> &fs)
{
    const C &ctx = fs.ctx();
    DiffRelationReport report;
    const int n = fs.n();
    for (Subset a : qn::subsets_of(Subset::full(n))) {
        if (a.size() >= n - 1) {
            continue;
        }
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                if (a.contains(i) || a.contains(j)) {
                    continue;
                }
                const std::string where = "A=" + a.str() + " i=" + std::to_string(i) + " j=" + std::to_string(j);
                const auto fij = fs.value(a.with(i), j), fi = fs.value(a, i);
                const auto fji = fs.value(a.with(j), i), fj = fs.value(a, j);
                report.checked += 2;
                if (!(fij + fi == fji + fj)) {
                    report.failures.push_back({"sum", where});
                }
                if (!(fij * fi - ctx.derive(fi) == fji * fj - ctx.derive(fj))) {
                    report.failures.push_back({"product", where});
                }
            }
        }
    }
    return report;
}

// Flags F1, F2 agreeing at levels 1..k and k+2 (k >= 0):
// b_{k+2}(F1) + b_{k+1}(F1) = b_{k+2}(F2) + b_{k+1}(F2) and
// b_{k+2}(F1) b_{k+1}(F1) - b_{k+1}(F1)' = b_{k+2}(F2) b_{k+1}(F2) - b_{k+1}(F2)'.
template <DivisionContext C>
DiffRelationReport verify_prop_412(const C &ctx, const std::vector<typename C::value_type> &f1,
                                   const std::vector<typename C::value_type> &f2, int k)
{
    if (k < 0 || k + 2 > static_cast<int>(std::min(f1.size(), f2.size()))) {
        throw Error("flag level out of range");
    }
    DiffRelationReport report;
    const auto a1 = b_k(ctx, f1, k + 1), a2 = b_k(ctx, f1, k + 2);
    const auto c1 = b_k(ctx, f2, k + 1), c2 = b_k(ctx, f2, k + 2);
    const std::string where = "k=" + std::to_string(k);
    report.checked = 2;
    if (!(a2 + a1 == c2 + c1)) {
        report.failures.push_back({"sum", where});
    }
    if (!(a2 * a1 - ctx.derive(a1) == c2 * c1 - ctx.derive(c1))) {
        report.failures.push_back({"product", where});
    }
    return report;
}

} // namespace qnalg

#endif
