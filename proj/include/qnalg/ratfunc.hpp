#ifndef QNALG_RATFUNC_HPP
#define QNALG_RATFUNC_HPP

#include <ostream>
#include <string>
#include <utility>

#include "errors.hpp"
#include "polynomial.hpp"

namespace qnalg
{

// Element of Q(x) in lowest terms: gcd(num, den) = 1 and den monic, so equal
// values have identical representations. The derivation is d/dx.
class RatFunc
{
public:
    RatFunc() : m_den(1) {}
    RatFunc(Rational c) : m_num(std::move(c)), m_den(1) {}
    RatFunc(int c) : RatFunc(Rational(c)) {}
    RatFunc(UPoly p) : m_num(std::move(p)), m_den(1) {}
    RatFunc(UPoly num, UPoly den) : m_num(std::move(num)), m_den(std::move(den))
    {
        if (m_den.is_zero()) {
            throw NotInvertible("rational function with zero denominator");
        }
        reduce();
    }

    static RatFunc x() { return RatFunc(UPoly::x()); }

    const UPoly &num() const { return m_num; }
    const UPoly &den() const { return m_den; }
    bool is_zero() const { return m_num.is_zero(); }

    RatFunc inverse() const
    {
        if (is_zero()) {
            throw NotInvertible("rational function 0 is not invertible");
        }
        return RatFunc(m_den, m_num);
    }

    RatFunc derivative() const
    {
        // (n/d)' = (n' d - n d') / d^2
        return RatFunc(m_num.derivative() * m_den - m_num * m_den.derivative(), m_den * m_den);
    }

    friend RatFunc operator+(const RatFunc &a, const RatFunc &b)
    {
        if (a.m_den == b.m_den) {
            return RatFunc(a.m_num + b.m_num, a.m_den);
        }
        return RatFunc(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
    }
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b)
    {
        if (a.m_den == b.m_den) {
            return RatFunc(a.m_num - b.m_num, a.m_den);
        }
        return RatFunc(a.m_num * b.m_den - b.m_num * a.m_den, a.m_den * b.m_den);
    }
    friend RatFunc operator-(const RatFunc &a)
    {
        RatFunc r = a;
        r.m_num = -r.m_num;
        return r;
    }
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b) { return a * b.inverse(); }
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        // Cross-cancel first so the products stay small.
        const UPoly g1 = gcd(a.m_num, b.m_den);
        const UPoly g2 = gcd(b.m_num, a.m_den);
        RatFunc r;
        r.m_num = a.m_num.divmod(g1).first * b.m_num.divmod(g2).first;
        r.m_den = a.m_den.divmod(g2).first * b.m_den.divmod(g1).first;
        r.normalize_lead();
        return r;
    }
    RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
    RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
    RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }

    friend bool operator==(const RatFunc &a, const RatFunc &b) { return a.m_num == b.m_num && a.m_den == b.m_den; }
    friend bool operator!=(const RatFunc &a, const RatFunc &b) { return !(a == b); }

    // "x^2+1" when the denominator is 1, otherwise "(num)/(den)".
    std::string str() const
    {
        if (m_den == UPoly(1)) {
            return m_num.str();
        }
        return "(" + m_num.str() + ")/(" + m_den.str() + ")";
    }

    friend std::ostream &operator<<(std::ostream &os, const RatFunc &f) { return os << f.str(); }

private:
    void reduce()
    {
        if (m_num.is_zero()) {
            m_den = UPoly(1);
            return;
        }
        const UPoly g = gcd(m_num, m_den);
        if (g.degree() > 0) {
            m_num = m_num.divmod(g).first;
            m_den = m_den.divmod(g).first;
        }
        normalize_lead();
    }

    void normalize_lead()
    {
        const Rational l = m_den.lead();
        if (l != 1) {
            m_num = m_num.scaled(1 / l);
            m_den = m_den.scaled(1 / l);
        }
    }

    UPoly m_num;
    UPoly m_den;
};

} // namespace qnalg

#endif
