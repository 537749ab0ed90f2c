#ifndef QNALG_POLYNOMIAL_HPP
#define QNALG_POLYNOMIAL_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace qnalg
{

// Dense univariate polynomial over Rational in the variable x.
// Coefficients are stored lowest degree first and kept trimmed, so the zero
// polynomial has no coefficients at all.
class UPoly
{
public:
    UPoly() = default;
    UPoly(Rational c)
    {
        if (c != 0) {
            m_c.push_back(std::move(c));
        }
    }
    UPoly(int c) : UPoly(Rational(c)) {}
    explicit UPoly(std::vector<Rational> coeffs) : m_c(std::move(coeffs)) { trim(); }

    static UPoly x() { return UPoly(std::vector<Rational>{0, 1}); }
    static UPoly monomial(Rational c, std::size_t deg)
    {
        std::vector<Rational> v(deg + 1, Rational(0));
        v[deg] = std::move(c);
        return UPoly(std::move(v));
    }

    bool is_zero() const { return m_c.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(m_c.size()) - 1; }
    const std::vector<Rational> &coeffs() const { return m_c; }
    Rational coeff(std::size_t d) const { return d < m_c.size() ? m_c[d] : Rational(0); }
    const Rational &lead() const { return m_c.back(); }
    bool is_constant() const { return m_c.size() <= 1; }

    UPoly &operator+=(const UPoly &o)
    {
        if (o.m_c.size() > m_c.size()) {
            m_c.resize(o.m_c.size(), Rational(0));
        }
        for (std::size_t t = 0; t < o.m_c.size(); ++t) {
            m_c[t] += o.m_c[t];
        }
        trim();
        return *this;
    }
    UPoly &operator-=(const UPoly &o)
    {
        if (o.m_c.size() > m_c.size()) {
            m_c.resize(o.m_c.size(), Rational(0));
        }
        for (std::size_t t = 0; t < o.m_c.size(); ++t) {
            m_c[t] -= o.m_c[t];
        }
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
    friend UPoly operator-(UPoly a)
    {
        for (auto &c : a.m_c) {
            c = -c;
        }
        return a;
    }

    friend UPoly operator*(const UPoly &a, const UPoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> r(a.m_c.size() + b.m_c.size() - 1, Rational(0));
        for (std::size_t s = 0; s < a.m_c.size(); ++s) {
            if (a.m_c[s] == 0) {
                continue;
            }
            for (std::size_t t = 0; t < b.m_c.size(); ++t) {
                r[s + t] += a.m_c[s] * b.m_c[t];
            }
        }
        return UPoly(std::move(r));
    }
    UPoly &operator*=(const UPoly &o) { return *this = *this * o; }

    UPoly scaled(const Rational &c) const
    {
        if (c == 0) {
            return {};
        }
        UPoly r = *this;
        for (auto &x : r.m_c) {
            x *= c;
        }
        return r;
    }

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<UPoly, UPoly> divmod(const UPoly &d) const
    {
        if (d.is_zero()) {
            throw NotInvertible("polynomial division by zero");
        }
        UPoly r = *this;
        if (r.degree() < d.degree()) {
            return {UPoly{}, std::move(r)};
        }
        std::vector<Rational> q(static_cast<std::size_t>(r.degree() - d.degree() + 1), Rational(0));
        const Rational inv_lead = 1 / d.lead();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const auto shift = static_cast<std::size_t>(r.degree() - d.degree());
            const Rational c = r.lead() * inv_lead;
            q[shift] = c;
            for (std::size_t t = 0; t < d.m_c.size(); ++t) {
                r.m_c[shift + t] -= c * d.m_c[t];
            }
            r.trim();
        }
        return {UPoly(std::move(q)), std::move(r)};
    }

    UPoly monic() const { return is_zero() ? *this : scaled(1 / lead()); }

    UPoly derivative() const
    {
        if (m_c.size() <= 1) {
            return {};
        }
        std::vector<Rational> r(m_c.size() - 1);
        for (std::size_t t = 1; t < m_c.size(); ++t) {
            r[t - 1] = m_c[t] * static_cast<unsigned long>(t);
        }
        return UPoly(std::move(r));
    }

    Rational operator()(const Rational &at) const
    {
        Rational acc = 0;
        for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) {
            acc = acc * at + *it;
        }
        return acc;
    }

    friend bool operator==(const UPoly &a, const UPoly &b) { return a.m_c == b.m_c; }
    friend bool operator!=(const UPoly &a, const UPoly &b) { return !(a == b); }

    // Text such as "x^2-3*x+1/2"; highest degree first.
    std::string str() const
    {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (std::size_t t = m_c.size(); t-- > 0;) {
            const Rational &c = m_c[t];
            if (c == 0) {
                continue;
            }
            const Rational mag = abs(c);
            if (c < 0) {
                out += "-";
            } else if (!out.empty()) {
                out += "+";
            }
            if (t == 0) {
                out += mag.get_str();
                continue;
            }
            if (mag != 1) {
                out += mag.get_str() + "*";
            }
            out += "x";
            if (t > 1) {
                out += "^" + std::to_string(t);
            }
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const UPoly &p) { return os << p.str(); }

private:
    void trim()
    {
        while (!m_c.empty() && m_c.back() == 0) {
            m_c.pop_back();
        }
    }

    std::vector<Rational> m_c;
};

// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

} // namespace qnalg

#endif
