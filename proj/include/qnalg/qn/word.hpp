#ifndef QNALG_QN_WORD_HPP
#define QNALG_QN_WORD_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "../errors.hpp"
#include "../rational.hpp"
#include "subset.hpp"

namespace qnalg::qn
{

// The generator z_{A,i}; requires i not in A.
struct GenIndex
{
    Subset a;
    int i = 0;

    friend bool operator==(const GenIndex &, const GenIndex &) = default;
    friend auto operator<=>(const GenIndex &, const GenIndex &) = default;

    // "z{1,3},{2}"
    std::string str() const { return "z" + a.str() + "," + Subset::singleton(i).str(); }
};

inline GenIndex gen(Subset a, int i, int n)
{
    check_n(n);
    if (i < 1 || i > n) {
        throw Error("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    if (!a.within(n)) {
        throw Error("generator set " + a.str() + " not inside 1.." + std::to_string(n));
    }
    if (a.contains(i)) {
        throw Error("generator z" + a.str() + "," + std::to_string(i) + " has its index inside the set");
    }
    return {a, i};
}

using Monomial = std::vector<GenIndex>;

// Formal rational combination of words in the generators: an element of the
// free algebra before any relation is applied.
class GeneratorWord
{
public:
    using Terms = std::map<Monomial, Rational>;

    GeneratorWord() = default;
    explicit GeneratorWord(const Rational &c) { add_term({}, c); }
    explicit GeneratorWord(GenIndex g, const Rational &c = 1) { add_term({g}, c); }
    explicit GeneratorWord(Monomial m, const Rational &c = 1) { add_term(std::move(m), c); }

    const Terms &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }

    void add_term(Monomial m, const Rational &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    GeneratorWord &operator+=(const GeneratorWord &o)
    {
        for (const auto &[m, c] : o.m_terms) {
            add_term(m, c);
        }
        return *this;
    }
    GeneratorWord &operator-=(const GeneratorWord &o)
    {
        for (const auto &[m, c] : o.m_terms) {
            add_term(m, -c);
        }
        return *this;
    }
    GeneratorWord scaled(const Rational &k) const
    {
        GeneratorWord out;
        for (const auto &[m, c] : m_terms) {
            out.add_term(m, c * k);
        }
        return out;
    }

    friend GeneratorWord operator+(GeneratorWord a, const GeneratorWord &b) { return a += b; }
    friend GeneratorWord operator-(GeneratorWord a, const GeneratorWord &b) { return a -= b; }
    friend GeneratorWord operator-(const GeneratorWord &a) { return a.scaled(-1); }
    friend GeneratorWord operator*(const GeneratorWord &a, const GeneratorWord &b)
    {
        GeneratorWord out;
        for (const auto &[ma, ca] : a.m_terms) {
            for (const auto &[mb, cb] : b.m_terms) {
                Monomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                out.add_term(std::move(m), ca * cb);
            }
        }
        return out;
    }
    friend bool operator==(const GeneratorWord &a, const GeneratorWord &b) { return a.m_terms == b.m_terms; }

    // Longest monomial, -1 for zero.
    int length() const
    {
        int l = -1;
        for (const auto &[m, c] : m_terms) {
            l = std::max(l, static_cast<int>(m.size()));
        }
        return l;
    }

    std::string str() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto &[m, c] : m_terms) {
            Rational mag = abs(c);
            out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            first = false;
            std::string body;
            for (std::size_t q = 0; q < m.size(); ++q) {
                body += (q ? "*" : "") + m[q].str();
            }
            if (body.empty()) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += body;
            } else {
                out += mag.get_str() + "*" + body;
            }
        }
        return out;
    }

private:
    Terms m_terms;
};

// r(A) = z_{A,emptyset} = z_{a_1} + z_{a_1,a_2} + ... along A in ascending order.
inline GeneratorWord r_word(Subset a)
{
    GeneratorWord out;
    Subset prefix;
    for (int e : a.elements()) {
        out.add_term({GenIndex{prefix, e}}, 1);
        prefix = prefix.with(e);
    }
    return out;
}

// u(B) = z_{emptyset,B} = sum over E inside B of (-1)^{|B|-|E|} r(E).
inline GeneratorWord u_word(Subset b)
{
    GeneratorWord out;
    for (Subset e : subsets_of(b)) {
        out += r_word(e).scaled((b.size() - e.size()) % 2 ? -1 : 1);
    }
    return out;
}

// z_{A,B} = sum over B <= D <= A u B of u(D); zero when A and B meet.
inline GeneratorWord z_word(Subset a, Subset b)
{
    GeneratorWord out;
    if (!(a & b).empty()) {
        return out;
    }
    for (Subset extra : subsets_of(a)) {
        out += u_word(b | extra);
    }
    return out;
}

} // namespace qnalg::qn

#endif
