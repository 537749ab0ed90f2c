#ifndef QNALG_QN_MAPS_HPP
#define QNALG_QN_MAPS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "../errors.hpp"
#include "normalizer.hpp"

namespace qnalg::qn
{

// ---- derivation: d z_{A,i} = 1, so d r(A) = |A| ----

inline QnElement derivation(const QnElement &x, NormalizationContext &ctx)
{
    QnElement out;
    for (const auto &[s, c] : x.terms()) {
        for (std::size_t q = 0; q < s.size(); ++q) {
            SubsetString rest = s;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(q));
            out += ctx.from_string(rest).scaled(c * s[q].size());
        }
    }
    return out;
}

inline QnElement derivation(const GeneratorWord &w, NormalizationContext &ctx)
{
    GeneratorWord dw;
    for (const auto &[m, c] : w.terms()) {
        for (std::size_t q = 0; q < m.size(); ++q) {
            Monomial rest = m;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(q));
            dw.add_term(std::move(rest), c);
        }
    }
    return ctx.normalize(dw);
}

// ---- antiautomorphism: z_{A,i} -> z_{[n] \ A \ i, i}, products reversed ----

inline GeneratorWord antiautomorphism_word(const GeneratorWord &w, int n)
{
    const Subset all = Subset::full(n);
    GeneratorWord out;
    for (const auto &[m, c] : w.terms()) {
        Monomial rev;
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            rev.push_back({all - it->a.with(it->i), it->i});
        }
        out.add_term(std::move(rev), c);
    }
    return out;
}

inline QnElement antiautomorphism(const GeneratorWord &w, NormalizationContext &ctx)
{
    return ctx.normalize(antiautomorphism_word(w, ctx.n()));
}

// On basis strings: theta(r(A)) = r([n]) - r([n] \ A), which telescopes from
// the generator formula along any chain of A.
inline QnElement antiautomorphism(const QnElement &x, NormalizationContext &ctx)
{
    const Subset all = Subset::full(ctx.n());
    QnElement out;
    for (const auto &[s, c] : x.terms()) {
        QnElement y = QnElement::unit();
        for (Subset b : s) {
            y = ctx.star(all, y) - ctx.star(all - b, y);
        }
        out += y.scaled(c);
    }
    return out;
}

// ---- permutations: sigma(z_{A,i}) = z_{sigma A, sigma i} ----

// perm[i - 1] is the image of i.
using Permutation = std::vector<int>;

inline void check_permutation(const Permutation &p, int n)
{
    if (static_cast<int>(p.size()) != n) {
        throw Error("permutation has length " + std::to_string(p.size()) + ", expected " + std::to_string(n));
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : p) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw Error("not a permutation of 1.." + std::to_string(n));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

inline Subset permute(const Permutation &p, Subset a)
{
    Subset out;
    for (int e : a.elements()) {
        out = out.with(p[static_cast<std::size_t>(e - 1)]);
    }
    return out;
}

inline QnElement apply_permutation(const Permutation &p, const QnElement &x, NormalizationContext &ctx)
{
    check_permutation(p, ctx.n());
    QnElement out;
    for (const auto &[s, c] : x.terms()) {
        SubsetString t;
        for (Subset b : s) {
            t.push_back(permute(p, b));
        }
        out += ctx.from_string(t).scaled(c);
    }
    return out;
}

inline QnElement apply_permutation(const Permutation &p, const GeneratorWord &w, NormalizationContext &ctx)
{
    check_permutation(p, ctx.n());
    GeneratorWord out;
    for (const auto &[m, c] : w.terms()) {
        Monomial pm;
        for (const GenIndex &g : m) {
            pm.push_back({permute(p, g.a), p[static_cast<std::size_t>(g.i - 1)]});
        }
        out.add_term(std::move(pm), c);
    }
    return ctx.normalize(out);
}

// ---- z_{A,B} in the basis ----

// u(D) = sum over E inside D of (-1)^{|D|-|E|} r(E).
inline QnElement u_element(Subset d)
{
    QnElement out;
    for (Subset e : subsets_of(d)) {
        if (!e.empty()) {
            out.add_term({e}, (d.size() - e.size()) % 2 ? -1 : 1);
        }
    }
    return out;
}

inline QnElement z_AB(Subset a, Subset b, const NormalizationContext &ctx)
{
    if (!(a | b).within(ctx.n())) {
        throw Error("sets " + a.str() + ", " + b.str() + " not inside 1.." + std::to_string(ctx.n()));
    }
    QnElement out;
    if (!(a & b).empty()) {
        return out;
    }
    for (Subset extra : subsets_of(a)) {
        out += u_element(b | extra);
    }
    return out;
}

// ---- elementary symmetric functions ----

enum class LambdaMethod { recursion, closed_form };

// Sum over t_1 > ... > t_k of y_{a_{t_1}} ... y_{a_{t_k}}, where a_1 < ... < a_m
// lists A and y_{a_t} = z_{{a_1..a_{t-1}}, a_t}.
inline GeneratorWord lambda_word(Subset a, int k)
{
    GeneratorWord out;
    if (k < 0) {
        return out;
    }
    const std::vector<int> elems = a.elements();
    const int m = static_cast<int>(elems.size());
    std::vector<GenIndex> y;
    Subset prefix;
    for (int e : elems) {
        y.push_back({prefix, e});
        prefix = prefix.with(e);
    }
    // Choose k positions, emit them in decreasing order.
    std::vector<int> pick;
    auto rec = [&](auto &self, int start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            Monomial mono;
            for (auto it = pick.rbegin(); it != pick.rend(); ++it) {
                mono.push_back(y[static_cast<std::size_t>(*it)]);
            }
            out.add_term(std::move(mono), 1);
            return;
        }
        for (int t = start; t < m; ++t) {
            pick.push_back(t);
            self(self, t + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline QnElement lambda_k(Subset a, int k, NormalizationContext &ctx, LambdaMethod method = LambdaMethod::recursion)
{
    if (k < 0) {
        throw Error("lambda index must be nonnegative");
    }
    if (!a.within(ctx.n())) {
        throw Error("set " + a.str() + " not inside 1.." + std::to_string(ctx.n()));
    }
    if (method == LambdaMethod::closed_form) {
        return ctx.normalize(lambda_word(a, k));
    }
    // table[q] = Lambda_q(prefix), growing the prefix by ascending elements.
    std::vector<QnElement> table(static_cast<std::size_t>(k) + 1);
    table[0] = QnElement::unit();
    Subset prefix;
    for (int e : a.elements()) {
        const Subset next = prefix.with(e);
        for (int q = k; q >= 1; --q) {
            const QnElement &lower = table[static_cast<std::size_t>(q - 1)];
            table[static_cast<std::size_t>(q)] += ctx.star(next, lower) - ctx.star(prefix, lower);
        }
        prefix = next;
    }
    return table[static_cast<std::size_t>(k)];
}

} // namespace qnalg::qn

#endif
