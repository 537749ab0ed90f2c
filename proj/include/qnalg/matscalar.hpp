#ifndef QNALG_MATSCALAR_HPP
#define QNALG_MATSCALAR_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ratfunc.hpp"

namespace qnalg
{

// Square matrix of rational functions, used as a noncommutative ring with a
// derivation (entrywise d/dx). Not a division ring: inversion fails exactly
// when the determinant is the zero rational function.
class MatScalar
{
public:
    MatScalar() = default;
    explicit MatScalar(std::size_t dim) : m_dim(dim), m_e(dim * dim) {}
    MatScalar(std::size_t dim, std::vector<RatFunc> entries) : m_dim(dim), m_e(std::move(entries))
    {
        if (m_e.size() != dim * dim) {
            throw Error("MatScalar: expected " + std::to_string(dim * dim) + " entries");
        }
    }

    static MatScalar identity(std::size_t dim) { return scalar(dim, RatFunc(1)); }
    static MatScalar scalar(std::size_t dim, const RatFunc &c)
    {
        MatScalar m(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            m(r, r) = c;
        }
        return m;
    }

    std::size_t dim() const { return m_dim; }
    RatFunc &operator()(std::size_t r, std::size_t c) { return m_e[r * m_dim + c]; }
    const RatFunc &operator()(std::size_t r, std::size_t c) const { return m_e[r * m_dim + c]; }

    bool is_zero() const
    {
        for (const auto &x : m_e) {
            if (!x.is_zero()) {
                return false;
            }
        }
        return true;
    }

    friend MatScalar operator+(const MatScalar &a, const MatScalar &b)
    {
        check_dims(a, b);
        MatScalar r(a.m_dim);
        for (std::size_t t = 0; t < a.m_e.size(); ++t) {
            r.m_e[t] = a.m_e[t] + b.m_e[t];
        }
        return r;
    }
    friend MatScalar operator-(const MatScalar &a, const MatScalar &b)
    {
        check_dims(a, b);
        MatScalar r(a.m_dim);
        for (std::size_t t = 0; t < a.m_e.size(); ++t) {
            r.m_e[t] = a.m_e[t] - b.m_e[t];
        }
        return r;
    }
    friend MatScalar operator-(const MatScalar &a)
    {
        MatScalar r(a.m_dim);
        for (std::size_t t = 0; t < a.m_e.size(); ++t) {
            r.m_e[t] = -a.m_e[t];
        }
        return r;
    }
    friend MatScalar operator*(const MatScalar &a, const MatScalar &b)
    {
        check_dims(a, b);
        const std::size_t m = a.m_dim;
        MatScalar r(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < m; ++k) {
                if (a(i, k).is_zero()) {
                    continue;
                }
                for (std::size_t j = 0; j < m; ++j) {
                    if (!b(k, j).is_zero()) {
                        r(i, j) += a(i, k) * b(k, j);
                    }
                }
            }
        }
        return r;
    }
    MatScalar &operator+=(const MatScalar &o) { return *this = *this + o; }
    MatScalar &operator-=(const MatScalar &o) { return *this = *this - o; }
    MatScalar &operator*=(const MatScalar &o) { return *this = *this * o; }

    friend bool operator==(const MatScalar &a, const MatScalar &b) { return a.m_dim == b.m_dim && a.m_e == b.m_e; }
    friend bool operator!=(const MatScalar &a, const MatScalar &b) { return !(a == b); }

    MatScalar derivative() const
    {
        MatScalar r(m_dim);
        for (std::size_t t = 0; t < m_e.size(); ++t) {
            r.m_e[t] = m_e[t].derivative();
        }
        return r;
    }

    // Gauss-Jordan over Q(x), pivoting on the first nonzero entry of each column.
    MatScalar inverse() const
    {
        const std::size_t m = m_dim;
        MatScalar a = *this;
        MatScalar inv = identity(m);
        for (std::size_t col = 0; col < m; ++col) {
            std::size_t piv = col;
            while (piv < m && a(piv, col).is_zero()) {
                ++piv;
            }
            if (piv == m) {
                throw NotInvertible("MatScalar is singular: " + str());
            }
            if (piv != col) {
                for (std::size_t c = 0; c < m; ++c) {
                    std::swap(a(piv, c), a(col, c));
                    std::swap(inv(piv, c), inv(col, c));
                }
            }
            const RatFunc p = a(col, col).inverse();
            for (std::size_t c = 0; c < m; ++c) {
                a(col, c) = p * a(col, c);
                inv(col, c) = p * inv(col, c);
            }
            for (std::size_t r = 0; r < m; ++r) {
                if (r == col || a(r, col).is_zero()) {
                    continue;
                }
                const RatFunc factor = a(r, col);
                for (std::size_t c = 0; c < m; ++c) {
                    a(r, c) -= factor * a(col, c);
                    inv(r, c) -= factor * inv(col, c);
                }
            }
        }
        return inv;
    }

    // "[[a,b],[c,d]]"
    std::string str() const
    {
        std::string out = "[";
        for (std::size_t r = 0; r < m_dim; ++r) {
            out += r ? ",[" : "[";
            for (std::size_t c = 0; c < m_dim; ++c) {
                if (c) {
                    out += ",";
                }
                out += (*this)(r, c).str();
            }
            out += "]";
        }
        return out + "]";
    }

    friend std::ostream &operator<<(std::ostream &os, const MatScalar &m) { return os << m.str(); }

private:
    static void check_dims(const MatScalar &a, const MatScalar &b)
    {
        if (a.m_dim != b.m_dim) {
            throw Error("MatScalar dimension mismatch");
        }
    }

    std::size_t m_dim = 0;
    std::vector<RatFunc> m_e;
};

} // namespace qnalg

#endif
