#ifndef QNALG_ERRORS_HPP
#define QNALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qnalg
{

// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Inversion of zero, or of a singular matrix scalar.
class NotInvertible : public Error
{
public:
    using Error::Error;
};

// A quasideterminant needed (X^{ij})^{-1} and it does not exist. Row and
// column are the 1-based indices that were removed from X; `submatrix` is a
// rendering of the offending submatrix.
class SubmatrixNotInvertible : public Error
{
public:
    SubmatrixNotInvertible(std::size_t row, std::size_t col, std::string submatrix)
        : Error("submatrix X^{" + std::to_string(row) + "," + std::to_string(col) + "} is not invertible: " + submatrix),
          m_row(row), m_col(col), m_submatrix(std::move(submatrix))
    {
    }

    std::size_t row() const noexcept { return m_row; }
    std::size_t col() const noexcept { return m_col; }
    const std::string &submatrix() const noexcept { return m_submatrix; }

private:
    std::size_t m_row;
    std::size_t m_col;
    std::string m_submatrix;
};

// Bad input: the roots (or differential roots) are not in generic position.
class GenericityFailure : public Error
{
public:
    using Error::Error;
};

// Two routes that must agree did not. Always a bug, never bad input.
class ConsistencyViolation : public Error
{
public:
    using Error::Error;
};

class ResourceLimit : public Error
{
public:
    using Error::Error;
};

// The rewriting recursion failed to decrease its well-founded measure.
class NonTermination : public Error
{
public:
    using Error::Error;
};

class LengthMismatch : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(const std::string &msg, std::size_t position, std::vector<std::string> expected = {})
        : Error(format(msg, position, expected)), m_position(position), m_expected(std::move(expected))
    {
    }

    std::size_t position() const noexcept { return m_position; }
    const std::vector<std::string> &expected() const noexcept { return m_expected; }

private:
    static std::string format(const std::string &msg, std::size_t pos, const std::vector<std::string> &expected)
    {
        std::string out = "parse error at position " + std::to_string(pos) + ": " + msg;
        if (!expected.empty()) {
            out += " (expected one of:";
            for (const auto &e : expected) {
                out += " " + e;
            }
            out += ")";
        }
        return out;
    }

    std::size_t m_position;
    std::vector<std::string> m_expected;
};

} // namespace qnalg

#endif
