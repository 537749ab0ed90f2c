#ifndef QNALG_QN_SPECIALIZE_HPP
#define QNALG_QN_SPECIALIZE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "../rational.hpp"
#include "element.hpp"
#include "word.hpp"

namespace qnalg::qn
{

// Commutative polynomial in v_1..v_n; keys are exponent vectors of length n.
class CommPoly
{
public:
    using Exponents = std::vector<int>;

    explicit CommPoly(int n = 0) : m_n(n) {}

    static CommPoly constant(int n, const Rational &c)
    {
        CommPoly p(n);
        p.add_term(Exponents(static_cast<std::size_t>(n), 0), c);
        return p;
    }
    static CommPoly variable(int n, int i)
    {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        CommPoly p(n);
        p.add_term(std::move(e), 1);
        return p;
    }

    int n() const { return m_n; }
    const std::map<Exponents, Rational> &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }

    void add_term(Exponents e, const Rational &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    friend CommPoly operator+(CommPoly a, const CommPoly &b)
    {
        for (const auto &[e, c] : b.m_terms) {
            a.add_term(e, c);
        }
        return a;
    }
    friend CommPoly operator-(CommPoly a, const CommPoly &b)
    {
        for (const auto &[e, c] : b.m_terms) {
            a.add_term(e, -c);
        }
        return a;
    }
    friend CommPoly operator*(const CommPoly &a, const CommPoly &b)
    {
        CommPoly out(std::max(a.m_n, b.m_n));
        for (const auto &[ea, ca] : a.m_terms) {
            for (const auto &[eb, cb] : b.m_terms) {
                Exponents e(static_cast<std::size_t>(out.m_n), 0);
                for (std::size_t q = 0; q < ea.size(); ++q) {
                    e[q] += ea[q];
                }
                for (std::size_t q = 0; q < eb.size(); ++q) {
                    e[q] += eb[q];
                }
                out.add_term(std::move(e), ca * cb);
            }
        }
        return out;
    }
    CommPoly scaled(const Rational &k) const
    {
        CommPoly out(m_n);
        for (const auto &[e, c] : m_terms) {
            out.add_term(e, c * k);
        }
        return out;
    }
    friend bool operator==(const CommPoly &a, const CommPoly &b) { return a.m_terms == b.m_terms; }

    // "v1^2*v2 - 3*v3"
    std::string str() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
            const auto &[e, c] = *it;
            out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            first = false;
            std::string mono;
            for (std::size_t q = 0; q < e.size(); ++q) {
                if (e[q] == 0) {
                    continue;
                }
                mono += (mono.empty() ? "" : "*") + std::string("v") + std::to_string(q + 1);
                if (e[q] > 1) {
                    mono += "^" + std::to_string(e[q]);
                }
            }
            const Rational mag = abs(c);
            if (mono.empty()) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += mono;
            } else {
                out += mag.get_str() + "*" + mono;
            }
        }
        return out;
    }

private:
    int m_n;
    std::map<Exponents, Rational> m_terms;
};

// Multilinear polynomial in w_1..w_n with w_i^2 = -w_i; keys are bitmasks of
// the variables present.
class BoolePoly
{
public:
    static BoolePoly constant(const Rational &c)
    {
        BoolePoly p;
        p.add_term(0, c);
        return p;
    }
    static BoolePoly variable(int i)
    {
        BoolePoly p;
        p.add_term(static_cast<std::uint16_t>(1u << (i - 1)), 1);
        return p;
    }

    const std::map<std::uint16_t, Rational> &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }

    void add_term(std::uint16_t mask, const Rational &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(mask, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    friend BoolePoly operator+(BoolePoly a, const BoolePoly &b)
    {
        for (const auto &[m, c] : b.m_terms) {
            a.add_term(m, c);
        }
        return a;
    }
    friend BoolePoly operator-(BoolePoly a, const BoolePoly &b)
    {
        for (const auto &[m, c] : b.m_terms) {
            a.add_term(m, -c);
        }
        return a;
    }
    // w_S w_T = (-1)^{|S n T|} w_{S u T}
    friend BoolePoly operator*(const BoolePoly &a, const BoolePoly &b)
    {
        BoolePoly out;
        for (const auto &[ma, ca] : a.m_terms) {
            for (const auto &[mb, cb] : b.m_terms) {
                const int overlap = std::popcount(static_cast<unsigned>(ma & mb));
                out.add_term(static_cast<std::uint16_t>(ma | mb), Rational(overlap % 2 ? -(ca * cb) : Rational(ca * cb)));
            }
        }
        return out;
    }
    BoolePoly scaled(const Rational &k) const
    {
        BoolePoly out;
        for (const auto &[m, c] : m_terms) {
            out.add_term(m, c * k);
        }
        return out;
    }
    friend bool operator==(const BoolePoly &a, const BoolePoly &b) { return a.m_terms == b.m_terms; }

    std::string str() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto &[m, c] : m_terms) {
            out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            first = false;
            std::string mono;
            for (int i = 1; i <= 16; ++i) {
                if (m & (1u << (i - 1))) {
                    mono += (mono.empty() ? "" : "*") + std::string("w") + std::to_string(i);
                }
            }
            const Rational mag = abs(c);
            if (mono.empty()) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += mono;
            } else {
                out += mag.get_str() + "*" + mono;
            }
        }
        return out;
    }

private:
    std::map<std::uint16_t, Rational> m_terms;
};

// ---- psi: z_{A,i} -> v_i, so r(A) -> sum of v_i over A ----

inline CommPoly psi_r(Subset a, int n)
{
    CommPoly p(n);
    for (int e : a.elements()) {
        p = p + CommPoly::variable(n, e);
    }
    return p;
}

inline CommPoly specialize_psi(const QnElement &x, int n)
{
    CommPoly out(n);
    for (const auto &[s, c] : x.terms()) {
        CommPoly t = CommPoly::constant(n, c);
        for (Subset b : s) {
            t = t * psi_r(b, n);
        }
        out = out + t;
    }
    return out;
}

inline CommPoly specialize_psi(const GeneratorWord &w, int n)
{
    CommPoly out(n);
    for (const auto &[m, c] : w.terms()) {
        CommPoly t = CommPoly::constant(n, c);
        for (const GenIndex &g : m) {
            t = t * CommPoly::variable(n, g.i);
        }
        out = out + t;
    }
    return out;
}

// e_k(v_1, ..., v_n)
inline CommPoly elementary_symmetric(int n, int k)
{
    CommPoly out(n);
    for (Subset s : subsets_of(Subset::full(n))) {
        if (s.size() != k) {
            continue;
        }
        CommPoly::Exponents e(static_cast<std::size_t>(n), 0);
        for (int i : s.elements()) {
            e[static_cast<std::size_t>(i - 1)] = 1;
        }
        out.add_term(std::move(e), 1);
    }
    return out;
}

// ---- phi: z_{A,i} -> w_i prod_{j in A} (1 + w_j) ----

inline BoolePoly phi_product_one_plus(Subset a)
{
    BoolePoly p = BoolePoly::constant(1);
    for (int e : a.elements()) {
        p = p * (BoolePoly::constant(1) + BoolePoly::variable(e));
    }
    return p;
}

inline BoolePoly phi_generator(const GenIndex &g) { return BoolePoly::variable(g.i) * phi_product_one_plus(g.a); }

// r(A) -> prod_{j in A}(1 + w_j) - 1, the telescoped chain sum.
inline BoolePoly phi_r(Subset a) { return phi_product_one_plus(a) - BoolePoly::constant(1); }

inline BoolePoly specialize_phi(const QnElement &x)
{
    BoolePoly out;
    for (const auto &[s, c] : x.terms()) {
        BoolePoly t = BoolePoly::constant(c);
        for (Subset b : s) {
            t = t * phi_r(b);
        }
        out = out + t;
    }
    return out;
}

inline BoolePoly specialize_phi(const GeneratorWord &w)
{
    BoolePoly out;
    for (const auto &[m, c] : w.terms()) {
        BoolePoly t = BoolePoly::constant(c);
        for (const GenIndex &g : m) {
            t = t * phi_generator(g);
        }
        out = out + t;
    }
    return out;
}

// Exact rank of a list of rational vectors.
inline int rational_rank(std::vector<std::vector<Rational>> rows)
{
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows.size() && rows[piv][c] == 0) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
        const auto &p = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) {
                continue;
            }
            const Rational factor = rows[r][c] / p[c];
            for (std::size_t k = c; k < cols; ++k) {
                rows[r][k] -= factor * p[k];
            }
        }
        ++rank;
    }
    return rank;
}

// Dimension of the span of phi(1) and phi(z_{A,i}) over all generators.
inline int phi_generator_rank(int n)
{
    check_n(n);
    const std::size_t dim = std::size_t{1} << n;
    auto to_row = [dim](const BoolePoly &p) {
        std::vector<Rational> row(dim, Rational(0));
        for (const auto &[m, c] : p.terms()) {
            row[m] = c;
        }
        return row;
    };
    std::vector<std::vector<Rational>> rows{to_row(BoolePoly::constant(1))};
    for (Subset a : subsets_of(Subset::full(n))) {
        for (int i = 1; i <= n; ++i) {
            if (!a.contains(i)) {
                rows.push_back(to_row(phi_generator({a, i})));
            }
        }
    }
    return rational_rank(std::move(rows));
}

} // namespace qnalg::qn

#endif
