#ifndef QNALG_QUASIDET_HPP
#define QNALG_QUASIDET_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"
#include "errors.hpp"

namespace qnalg
{

// Dense row-major matrix over a ring. Indices are 0-based here; the
// quasideterminant API below uses the customary 1-based (i, j).
template <typename T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T &fill) : m_rows(rows), m_cols(cols), m_e(rows * cols, fill) {}

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }
    bool square() const { return m_rows == m_cols; }

    T &operator()(std::size_t r, std::size_t c) { return m_e[r * m_cols + c]; }
    const T &operator()(std::size_t r, std::size_t c) const { return m_e[r * m_cols + c]; }

    // Copy with row `r` and column `c` removed (0-based).
    Matrix minor(std::size_t r, std::size_t c) const
    {
        Matrix out;
        out.m_rows = m_rows - 1;
        out.m_cols = m_cols - 1;
        out.m_e.reserve(out.m_rows * out.m_cols);
        for (std::size_t i = 0; i < m_rows; ++i) {
            if (i == r) {
                continue;
            }
            for (std::size_t j = 0; j < m_cols; ++j) {
                if (j != c) {
                    out.m_e.push_back((*this)(i, j));
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix &a, const Matrix &b) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<T> m_e;
};

template <DivisionContext C>
std::string render_matrix(const C &ctx, const Matrix<typename C::value_type> &m)
{
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r ? ",[" : "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) {
                out += ",";
            }
            out += ctx.render(m(r, c));
        }
        out += "]";
    }
    return out + "]";
}

template <DivisionContext C>
Matrix<typename C::value_type> identity_matrix(const C &ctx, std::size_t m)
{
    Matrix<typename C::value_type> id(m, m, ctx.zero());
    for (std::size_t t = 0; t < m; ++t) {
        id(t, t) = ctx.one();
    }
    return id;
}

template <DivisionContext C>
Matrix<typename C::value_type> mat_mul(const C &ctx, const Matrix<typename C::value_type> &a,
                                       const Matrix<typename C::value_type> &b)
{
    Matrix<typename C::value_type> r(a.rows(), b.cols(), ctx.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                r(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        }
    }
    return r;
}

// Inverse by Gauss-Jordan elimination using only left row operations, which
// is valid over any ring in which the chosen pivots are invertible. The pivot
// of each column is the first entry (from the diagonal down) that inverts.
template <DivisionContext C>
Matrix<typename C::value_type> inverse_gauss(const C &ctx, Matrix<typename C::value_type> a)
{
    using T = typename C::value_type;
    const std::size_t m = a.rows();
    Matrix<T> inv = identity_matrix(ctx, m);
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        T piv_inv;
        for (; piv < m; ++piv) {
            if (ctx.is_zero(a(piv, col))) {
                continue;
            }
            try {
                piv_inv = ctx.invert(a(piv, col));
                break;
            } catch (const NotInvertible &) {
            }
        }
        if (piv == m) {
            throw NotInvertible("matrix is not invertible: no usable pivot in column " + std::to_string(col + 1));
        }
        if (piv != col) {
            for (std::size_t c = 0; c < m; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        }
        for (std::size_t c = 0; c < m; ++c) {
            a(col, c) = piv_inv * a(col, c);
            inv(col, c) = piv_inv * inv(col, c);
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || ctx.is_zero(a(r, col))) {
                continue;
            }
            const T factor = a(r, col);
            for (std::size_t c = 0; c < m; ++c) {
                a(r, c) = a(r, c) - factor * a(col, c);
                inv(r, c) = inv(r, c) - factor * inv(col, c);
            }
        }
    }
    return inv;
}

enum class InverseMethod { gauss, quasideterminant };

template <DivisionContext C>
Matrix<typename C::value_type> inverse(const C &ctx, const Matrix<typename C::value_type> &a,
                                       InverseMethod method = InverseMethod::gauss);

// |X|_{ij} = x_ij - r_i(X)^{(j)} (X^{ij})^{-1} c_j(X)^{(i)}, with 1-based i, j.
// For a 1x1 matrix this is x_11.
template <DivisionContext C>
typename C::value_type quasideterminant(const C &ctx, const Matrix<typename C::value_type> &x, std::size_t i,
                                        std::size_t j, InverseMethod method = InverseMethod::gauss)
{
    using T = typename C::value_type;
    if (!x.square() || x.rows() == 0) {
        throw Error("quasideterminant needs a nonempty square matrix");
    }
    if (i < 1 || i > x.rows() || j < 1 || j > x.cols()) {
        throw Error("quasideterminant index out of range");
    }
    const std::size_t m = x.rows();
    const std::size_t r0 = i - 1;
    const std::size_t c0 = j - 1;
    if (m == 1) {
        return x(0, 0);
    }
    const Matrix<T> sub = x.minor(r0, c0);
    Matrix<T> sub_inv;
    try {
        sub_inv = inverse(ctx, sub, method);
    } catch (const NotInvertible &) {
        throw SubmatrixNotInvertible(i, j, render_matrix(ctx, sub));
    }
    // Row i without entry j, and column j without entry i.
    std::vector<T> row, col;
    for (std::size_t t = 0; t < m; ++t) {
        if (t != c0) {
            row.push_back(x(r0, t));
        }
        if (t != r0) {
            col.push_back(x(t, c0));
        }
    }
    T correction = ctx.zero();
    for (std::size_t a = 0; a < m - 1; ++a) {
        T inner = ctx.zero();
        for (std::size_t b = 0; b < m - 1; ++b) {
            inner = inner + sub_inv(a, b) * col[b];
        }
        correction = correction + row[a] * inner;
    }
    return x(r0, c0) - correction;
}

// Inverse through quasideterminants: (X^{-1})_{ji} = |X|_{ij}^{-1}. Sub-inverses
// are taken the same way, so this route never touches Gaussian elimination.
template <DivisionContext C>
Matrix<typename C::value_type> inverse_via_quasideterminants(const C &ctx, const Matrix<typename C::value_type> &a)
{
    using T = typename C::value_type;
    const std::size_t m = a.rows();
    Matrix<T> inv(m, m, ctx.zero());
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            T q;
            try {
                q = quasideterminant(ctx, a, i, j, InverseMethod::quasideterminant);
            } catch (const SubmatrixNotInvertible &e) {
                throw NotInvertible(e.what());
            }
            inv(j - 1, i - 1) = ctx.invert(q);
        }
    }
    return inv;
}

template <DivisionContext C>
Matrix<typename C::value_type> inverse(const C &ctx, const Matrix<typename C::value_type> &a, InverseMethod method)
{
    if (!a.square()) {
        throw Error("only square matrices have inverses");
    }
    if (method == InverseMethod::gauss) {
        return inverse_gauss(ctx, a);
    }
    return inverse_via_quasideterminants(ctx, a);
}

// Vandermonde matrix with the highest power in the top row and ones in the
// bottom row: row r (1-based) holds y_s^{m-r}.
template <DivisionContext C>
Matrix<typename C::value_type> vandermonde_matrix(const C &ctx, std::span<const typename C::value_type> ys)
{
    using T = typename C::value_type;
    const std::size_t m = ys.size();
    Matrix<T> v(m, m, ctx.one());
    for (std::size_t s = 0; s < m; ++s) {
        T power = ctx.one();
        for (std::size_t r = m; r-- > 0;) {
            v(r, s) = power;
            power = power * ys[s];
        }
    }
    return v;
}

// V(y_1, ..., y_m) = |Vandermonde|_{1m}. For a single argument the matrix is
// the bottom row [[1]] alone, so V(y) = 1 and conjugating by it is a no-op.
template <DivisionContext C>
typename C::value_type vandermonde_qd(const C &ctx, std::span<const typename C::value_type> ys,
                                      InverseMethod method = InverseMethod::gauss)
{
    if (ys.empty()) {
        throw Error("vandermonde_qd needs at least one argument");
    }
    return quasideterminant(ctx, vandermonde_matrix(ctx, ys), 1, ys.size(), method);
}

} // namespace qnalg

#endif
