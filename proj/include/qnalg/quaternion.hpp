#ifndef QNALG_QUATERNION_HPP
#define QNALG_QUATERNION_HPP

#include <array>
#include <ostream>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace qnalg
{

// Rational quaternion a + b i + c j + d k with i^2 = j^2 = k^2 = ijk = -1.
// Components are always stored (and serialized) in the order (1, i, j, k).
class Quaternion
{
public:
    Quaternion() = default;
    Quaternion(Rational a) : m_c{std::move(a), 0, 0, 0} {}
    Quaternion(int a) : Quaternion(Rational(a)) {}
    Quaternion(Rational a, Rational b, Rational c, Rational d) : m_c{std::move(a), std::move(b), std::move(c), std::move(d)}
    {
    }

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    const Rational &operator[](std::size_t idx) const { return m_c[idx]; }
    const std::array<Rational, 4> &components() const { return m_c; }

    bool is_zero() const { return m_c[0] == 0 && m_c[1] == 0 && m_c[2] == 0 && m_c[3] == 0; }

    Quaternion conjugate() const { return {m_c[0], -m_c[1], -m_c[2], -m_c[3]}; }
    Rational norm() const { return m_c[0] * m_c[0] + m_c[1] * m_c[1] + m_c[2] * m_c[2] + m_c[3] * m_c[3]; }

    Quaternion inverse() const
    {
        const Rational nrm = norm();
        if (nrm == 0) {
            throw NotInvertible("quaternion 0 is not invertible");
        }
        Quaternion c = conjugate();
        for (auto &x : c.m_c) {
            x /= nrm;
        }
        return c;
    }

    Quaternion &operator+=(const Quaternion &o)
    {
        for (std::size_t t = 0; t < 4; ++t) {
            m_c[t] += o.m_c[t];
        }
        return *this;
    }
    Quaternion &operator-=(const Quaternion &o)
    {
        for (std::size_t t = 0; t < 4; ++t) {
            m_c[t] -= o.m_c[t];
        }
        return *this;
    }

    friend Quaternion operator+(Quaternion a, const Quaternion &b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion &b) { return a -= b; }
    friend Quaternion operator-(const Quaternion &a) { return {-a.m_c[0], -a.m_c[1], -a.m_c[2], -a.m_c[3]}; }

    friend Quaternion operator*(const Quaternion &x, const Quaternion &y)
    {
        const auto &[a1, b1, c1, d1] = x.m_c;
        const auto &[a2, b2, c2, d2] = y.m_c;
        return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
    }
    Quaternion &operator*=(const Quaternion &o) { return *this = *this * o; }

    friend bool operator==(const Quaternion &a, const Quaternion &b) { return a.m_c == b.m_c; }
    friend bool operator!=(const Quaternion &a, const Quaternion &b) { return !(a == b); }

    // Canonical text, e.g. "1/2-i+3*k"; "0" for zero.
    std::string str() const
    {
        static constexpr const char *units[4] = {"", "i", "j", "k"};
        std::string out;
        for (std::size_t t = 0; t < 4; ++t) {
            const Rational &c = m_c[t];
            if (c == 0) {
                continue;
            }
            Rational mag = abs(c);
            if (c < 0) {
                out += "-";
            } else if (!out.empty()) {
                out += "+";
            }
            if (t == 0) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += units[t];
            } else {
                out += mag.get_str() + "*" + units[t];
            }
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream &operator<<(std::ostream &os, const Quaternion &q) { return os << q.str(); }

private:
    std::array<Rational, 4> m_c{0, 0, 0, 0};
};

} // namespace qnalg

#endif
