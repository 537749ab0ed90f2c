#ifndef QNALG_QN_NORMALIZER_HPP
#define QNALG_QN_NORMALIZER_HPP

#include <map>
#include <string>
#include <utility>

#include "../errors.hpp"
#include "element.hpp"
#include "string.hpp"
#include "word.hpp"

namespace qnalg::qn
{

// Owns the memo table of the action s_B * (reduced string). One instance per
// thread; results do not depend on what is cached.
class NormalizationContext
{
public:
    explicit NormalizationContext(int n) : m_n(n) { check_n(n); }

    int n() const { return m_n; }
    std::size_t memo_size() const { return m_memo.size(); }
    void clear_memo() { m_memo.clear(); }

    // s_B * x, extended linearly; this is left multiplication by r(B).
    QnElement star(Subset b, const QnElement &x)
    {
        QnElement out;
        if (b.empty()) {
            return out;
        }
        for (const auto &[s, c] : x.terms()) {
            out += star_string(b, s).scaled(c);
        }
        return out;
    }

    QnElement star_string(Subset b, const SubsetString &s)
    {
        check_set(b);
        if (b.empty()) {
            return {};
        }
        if (s.empty()) {
            return QnElement(SubsetString{b});
        }
        if (b.size() + degree(s) > kMaxDegree) {
            throw ResourceLimit("normalization degree exceeds " + std::to_string(kMaxDegree));
        }
        auto key = std::make_pair(b.mask(), s);
        if (auto it = m_memo.find(key); it != m_memo.end()) {
            return it->second;
        }
        QnElement result = compute(b, s);
        m_memo.emplace(std::move(key), result);
        return result;
    }

    // r(B_1) ... r(B_l) times x, folded from the right.
    QnElement left_multiply(const SubsetString &s, QnElement x)
    {
        for (auto it = s.rbegin(); it != s.rend() && !x.is_zero(); ++it) {
            x = star(*it, x);
        }
        return x;
    }

    QnElement mul(const QnElement &a, const QnElement &b)
    {
        QnElement out;
        for (const auto &[s, c] : a.terms()) {
            out += left_multiply(s, b).scaled(c);
        }
        return out;
    }

    // The basis expansion of an arbitrary (not necessarily reduced) string.
    QnElement from_string(const SubsetString &s) { return left_multiply(s, QnElement::unit()); }

    QnElement r(Subset a) { return a.empty() ? QnElement() : QnElement(SubsetString{a}); }

    // z_{A,i} = r(A u i) - r(A), applied on the left of x.
    QnElement apply_generator(const GenIndex &g, const QnElement &x)
    {
        check_set(g.a.with(g.i));
        if (g.a.contains(g.i)) {
            throw Error("generator " + g.str() + " has its index inside the set");
        }
        return star(g.a.with(g.i), x) - star(g.a, x);
    }

    QnElement normalize(const GeneratorWord &w)
    {
        QnElement out;
        for (const auto &[m, c] : w.terms()) {
            QnElement x = QnElement::unit();
            for (auto it = m.rbegin(); it != m.rend() && !x.is_zero(); ++it) {
                x = apply_generator(*it, x);
            }
            out += x.scaled(c);
        }
        return out;
    }

    // Re-expands every term; a no-op on output of this class.
    QnElement normalize(const QnElement &x)
    {
        QnElement out;
        for (const auto &[s, c] : x.terms()) {
            out += from_string(s).scaled(c);
        }
        return out;
    }

private:
    void check_set(Subset b) const
    {
        if (!b.within(m_n)) {
            throw Error("set " + b.str() + " not inside 1.." + std::to_string(m_n));
        }
    }

    // Every recursive call must lower (|B| + |string|), or keep it and move
    // to a smaller string. The plain order is used: with <' the step from
    // (B_1, ...) to (B \ f, B_2, ...) can go up, e.g. B = {1,3} against
    // ({3},{2,3},{1}).
    static void check_decrease(Subset b, const SubsetString &s, Subset b2, const SubsetString &s2)
    {
        const int before = b.size() + degree(s);
        const int after = b2.size() + degree(s2);
        if (after < before) {
            return;
        }
        bool ok = false;
        if (after == before) {
            try {
                ok = compare_strings(s2, s, OrderVariant::plain) == Order::less;
            } catch (const LengthMismatch &) {
                ok = false;
            }
        }
        if (!ok) {
            throw NonTermination("star recursion did not decrease: s_" + b2.str() + " * " + str(s2) + " from s_" +
                                 b.str() + " * " + str(s));
        }
    }

    QnElement star_checked(Subset b, const SubsetString &s, Subset b2, const SubsetString &s2)
    {
        if (b2.empty()) {
            return {};
        }
        check_decrease(b, s, b2, s2);
        return star_string(b2, s2);
    }

    QnElement star_checked(Subset b, const SubsetString &s, Subset b2, const QnElement &x)
    {
        QnElement out;
        for (const auto &[s2, c] : x.terms()) {
            out += star_checked(b, s, b2, s2).scaled(c);
        }
        return out;
    }

    QnElement compute(Subset b, const SubsetString &s)
    {
        const DefValues def = def_functions(b, s);
        if (def.d == def.f) {
            return QnElement(prepend(b, s));
        }
        const SubsetString tail = truncated(s, 1);
        const Subset bf = b.without(def.f);
        const Subset bd = b.without(def.d);
        const Subset bdf = bd.without(def.f);

        // s_B * (s_{B\f} * T_1)
        QnElement out = star_checked(b, s, b, star_checked(b, s, bf, tail));

        // phi(B, d, f) * T_1 =
        //   -s_{B\d} s_{B\{d,f}} T_1 + s_{B\f} s_{B\{d,f}} T_1 + s_{B\d} s_{B\d} T_1 - s_{B\f} s_{B\f} T_1
        const QnElement inner_df = star_checked(b, s, bdf, tail);
        out -= star_checked(b, s, bd, inner_df);
        out += star_checked(b, s, bf, inner_df);
        out += star_checked(b, s, bd, star_checked(b, s, bd, tail));
        out -= star_checked(b, s, bf, star_checked(b, s, bf, tail));
        return out;
    }

    int m_n;
    std::map<std::pair<std::uint16_t, SubsetString>, QnElement> m_memo;
};

} // namespace qnalg::qn

#endif
