#ifndef QNALG_QN_ELEMENT_HPP
#define QNALG_QN_ELEMENT_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "../rational.hpp"
#include "string.hpp"

namespace qnalg::qn
{

struct CanonicalOrder
{
    bool operator()(const SubsetString &a, const SubsetString &b) const { return canonical_less(a, b); }
};

// Rational linear combination of strings. Produced by the normalizer, so
// the keys are reduced strings; the class itself only keeps coefficients
// nonzero and does not re-check reducedness on every update.
class QnElement
{
public:
    using Terms = std::map<SubsetString, Rational, CanonicalOrder>;

    QnElement() = default;
    explicit QnElement(const Rational &c)
    {
        add_term({}, c);
    }
    explicit QnElement(SubsetString s, const Rational &c = 1)
    {
        add_term(std::move(s), c);
    }

    static QnElement unit() { return QnElement(Rational(1)); }

    const Terms &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    std::size_t size() const { return m_terms.size(); }

    Rational coefficient(const SubsetString &s) const
    {
        auto it = m_terms.find(s);
        return it == m_terms.end() ? Rational(0) : it->second;
    }

    void add_term(SubsetString s, const Rational &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(std::move(s), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    // Largest degree of a term, -1 for zero.
    int degree() const
    {
        int d = -1;
        for (const auto &[s, c] : m_terms) {
            d = std::max(d, qn::degree(s));
        }
        return d;
    }

    QnElement &operator+=(const QnElement &o)
    {
        for (const auto &[s, c] : o.m_terms) {
            add_term(s, c);
        }
        return *this;
    }
    QnElement &operator-=(const QnElement &o)
    {
        for (const auto &[s, c] : o.m_terms) {
            add_term(s, -c);
        }
        return *this;
    }
    QnElement scaled(const Rational &k) const
    {
        QnElement out;
        if (k == 0) {
            return out;
        }
        for (const auto &[s, c] : m_terms) {
            out.m_terms.emplace(s, c * k);
        }
        return out;
    }

    friend QnElement operator+(QnElement a, const QnElement &b) { return a += b; }
    friend QnElement operator-(QnElement a, const QnElement &b) { return a -= b; }
    friend QnElement operator-(const QnElement &a) { return a.scaled(-1); }
    friend QnElement operator*(const Rational &k, const QnElement &a) { return a.scaled(k); }
    friend bool operator==(const QnElement &a, const QnElement &b) { return a.m_terms == b.m_terms; }

    // "3 r{1,2}r{1} - 1/2 r{2}r{2}"; "0" for zero, the bare coefficient for
    // the unit string.
    std::string str() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        // Highest degree first; canonical order within a degree.
        std::vector<const Terms::value_type *> order;
        for (const auto &t : m_terms) {
            order.push_back(&t);
        }
        std::stable_sort(order.begin(), order.end(),
                         [](const auto *a, const auto *b) { return qn::degree(a->first) > qn::degree(b->first); });
        std::string out;
        bool first = true;
        for (const auto *t : order) {
            const auto &[s, c] = *t;
            Rational mag = abs(c);
            if (first) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            std::string word;
            for (Subset b : s) {
                word += "r" + b.str();
            }
            if (word.empty()) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += word;
            } else {
                out += mag.get_str() + " " + word;
            }
        }
        return out;
    }

private:
    Terms m_terms;
};

} // namespace qnalg::qn

#endif
