#ifndef QNALG_QN_RELATIONS_HPP
#define QNALG_QN_RELATIONS_HPP

#include <string>
#include <vector>

#include "../errors.hpp"
#include "maps.hpp"
#include "normalizer.hpp"
#include "word.hpp"

namespace qnalg::qn
{

inline GeneratorWord z(Subset a, int i) { return GeneratorWord(GenIndex{a, i}); }

// z_{A,B} written in the generators z_{C,i} only: r(A) along the chain when B
// is empty, otherwise z_{A,B' u i} = sum_{D in B'} (-1)^{|B'|-|D|} z_{A u D, i}
// with i = max B. Zero when A and B meet.
inline GeneratorWord z_generators(Subset a, Subset b)
{
    GeneratorWord out;
    if (!(a & b).empty()) {
        return out;
    }
    if (b.empty()) {
        return r_word(a);
    }
    const int i = b.max();
    const Subset rest = b.without(i);
    for (Subset d : subsets_of(rest)) {
        out.add_term({GenIndex{a | d, i}}, (rest.size() - d.size()) % 2 ? -1 : 1);
    }
    return out;
}

// One identity of Q_n written as (lhs - rhs); it must normalize to zero.
struct RelationInstance
{
    std::string family;
    std::string label;
    GeneratorWord expr;
};

namespace detail
{

inline std::string ij_label(Subset a, int i, int j)
{
    return "A=" + a.str() + " i=" + std::to_string(i) + " j=" + std::to_string(j);
}

} // namespace detail

// Every instance, for this n, of the defining relations and the identities
// derived from them: the twisted commutation, the quadratic r-relation, the
// commutator formula, and the z_{A,B} calculus (recursion, Moebius round trips,
// the z_{A,complement} formulas).
inline std::vector<RelationInstance> relation_suite(int n)
{
    check_n(n);
    std::vector<RelationInstance> out;
    const Subset all = Subset::full(n);
    const std::vector<Subset> subsets = subsets_of(all);

    for (Subset a : subsets) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j || a.contains(i) || a.contains(j)) {
                    continue;
                }
                const std::string label = detail::ij_label(a, i, j);
                const Subset ai = a.with(i), aj = a.with(j), aij = ai.with(j);
                if (i < j) {
                    out.push_back({"sum", label, z(ai, j) + z(a, i) - z(aj, i) - z(a, j)});
                    out.push_back({"product", label, z(ai, j) * z(a, i) - z(aj, i) * z(a, j)});
                }
                const GeneratorWord diff = z(a, j) - z(a, i);
                out.push_back({"twisted-commutation", label, z(ai, j) * diff - diff * z(a, j)});
                out.push_back({"r-quadratic", label,
                               (r_word(aij) - r_word(ai)) * (r_word(ai) - r_word(aj)) -
                                   (r_word(ai) - r_word(aj)) * (r_word(aj) - r_word(a))});
                if (i < j) {
                    GeneratorWord rhs;
                    const Subset ij = Subset{i, j};
                    for (Subset extra : subsets_of(a)) {
                        rhs += u_word(ij | extra);
                    }
                    rhs = rhs * (z(a, i) - z(a, j));
                    out.push_back({"commutator", label, z(a, i) * z(a, j) - z(a, j) * z(a, i) - rhs});
                }
            }
        }
    }

    for (Subset a : subsets) {
        for (Subset b : subsets) {
            if (!(a & b).empty()) {
                continue;
            }
            const std::string label = "A=" + a.str() + " B=" + b.str();
            // The u-sum form against the generator recursion.
            out.push_back({"z-generators", label, z_word(a, b) - z_generators(a, b)});
            for (int i = 1; i <= n; ++i) {
                if (a.contains(i) || b.contains(i)) {
                    continue;
                }
                out.push_back({"z-shift", label + " i=" + std::to_string(i),
                               z_generators(a.with(i), b) - z_generators(a, b.with(i)) - z_generators(a, b)});
            }
            // z_{C,D} = sum over C <= A, A n D = 0 of (-1)^{|comp A|-|D|} z_{A, comp A}
            GeneratorWord expansion;
            for (Subset extra : subsets_of(all - a - b)) {
                const Subset big = a | extra;
                const Subset comp = all - big;
                expansion += z_generators(big, comp).scaled((comp.size() - b.size()) % 2 ? -1 : 1);
            }
            out.push_back({"z-expansion", label, z_generators(a, b) - expansion});
        }
    }

    for (Subset b : subsets) {
        const std::string label = "B=" + b.str();
        GeneratorWord from_r;
        for (Subset d : subsets_of(b)) {
            from_r += z_generators(d, {}).scaled((b.size() - d.size()) % 2 ? -1 : 1);
        }
        out.push_back({"mobius-u", label, z_generators({}, b) - from_r});
        GeneratorWord from_u;
        for (Subset c : subsets_of(b)) {
            from_u += z_generators({}, c);
        }
        out.push_back({"mobius-r", label, z_generators(b, {}) - from_u});

        const Subset comp = all - b;
        GeneratorWord via_r, via_u;
        for (Subset c : subsets) {
            if (b.subset_of(c)) {
                via_r += z_generators(c, {}).scaled((n - c.size()) % 2 ? -1 : 1);
            }
            if (comp.subset_of(c)) {
                via_u += z_generators({}, c);
            }
        }
        out.push_back({"z-complement-r", label, z_generators(b, comp) - via_r});
        out.push_back({"z-complement-u", label, z_generators(b, comp) - via_u});
    }
    return out;
}

struct RelationFailure
{
    std::string family;
    std::string label;
    std::string residue;
};

inline std::vector<RelationFailure> verify_relation_suite(NormalizationContext &ctx)
{
    std::vector<RelationFailure> failures;
    for (const RelationInstance &rel : relation_suite(ctx.n())) {
        const QnElement x = ctx.normalize(rel.expr);
        if (!x.is_zero()) {
            failures.push_back({rel.family, rel.label, x.str()});
        }
    }
    return failures;
}

// The block matrices R and S: for every j, rows and columns run over the sets
// containing j; R(j) is diagonal with r(B) - r(B \ j), and
// S(j)_{B, B \ i} = r(B \ j) - r(B \ i) for i in B other than j. Returns the
// entries of RS - SR that fail to normalize to zero, as "(j, B, C): residue".
inline std::vector<std::string> rs_commutator_failures(NormalizationContext &ctx)
{
    const int n = ctx.n();
    if (n > 3) {
        throw ResourceLimit("R/S commutation check supports n <= 3");
    }
    std::vector<std::string> failures;
    const Subset all = Subset::full(n);
    for (int j = 1; j <= n; ++j) {
        std::vector<Subset> idx;
        for (Subset b : subsets_of(all)) {
            if (b.contains(j)) {
                idx.push_back(b);
            }
        }
        const std::size_t m = idx.size();
        std::vector<std::vector<QnElement>> r(m, std::vector<QnElement>(m)), s = r;
        for (std::size_t p = 0; p < m; ++p) {
            const Subset b = idx[p];
            r[p][p] = ctx.r(b) - ctx.r(b.without(j));
            for (std::size_t q = 0; q < m; ++q) {
                const Subset c = idx[q];
                if (c.subset_of(b) && (b - c).size() == 1 && !(b - c).contains(j)) {
                    const int i = (b - c).max();
                    s[p][q] = ctx.r(b.without(j)) - ctx.r(b.without(i));
                }
            }
        }
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = 0; q < m; ++q) {
                QnElement entry;
                for (std::size_t k = 0; k < m; ++k) {
                    entry += ctx.mul(r[p][k], s[k][q]);
                    entry -= ctx.mul(s[p][k], r[k][q]);
                }
                if (!entry.is_zero()) {
                    failures.push_back("(" + std::to_string(j) + ", " + idx[p].str() + ", " + idx[q].str() +
                                       "): " + entry.str());
                }
            }
        }
    }
    return failures;
}

inline bool check_RS_commute(NormalizationContext &ctx) { return rs_commutator_failures(ctx).empty(); }

} // namespace qnalg::qn

#endif
