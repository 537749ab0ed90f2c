#ifndef QNALG_CLI_SCALAR_IO_HPP
#define QNALG_CLI_SCALAR_IO_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "../context.hpp"
#include "../errors.hpp"

namespace qnalg::cli
{

// Arithmetic over a context:
//   expr  := ['-'] term (('+'|'-') term)*
//   term  := power (('*'|'/') power | power)*     juxtaposition multiplies
//   power := atom ['^' int]
//   atom  := number | name | '(' expr ')' | matrix
// Names: i, j, k for quaternions; x for rational functions and matrices.
// Matrices are written [[e,e],[e,e]] with rational-function entries.
template <DivisionContext C>
class ScalarParser
{
public:
    using T = typename C::value_type;

    ScalarParser(const C &ctx, std::string_view text, std::size_t offset = 0)
        : m_ctx(ctx), m_text(text), m_offset(offset)
    {
    }

    T parse()
    {
        T v = expr();
        skip();
        if (m_pos != m_text.size()) {
            fail("unexpected character", {"end of input", "+", "-", "*", "/"});
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string &msg, std::vector<std::string> expected) const
    {
        throw ParseError(msg, m_offset + m_pos, std::move(expected));
    }

    void skip()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    char peek()
    {
        skip();
        return m_pos < m_text.size() ? m_text[m_pos] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++m_pos;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail("expected '" + std::string(1, c) + "'", {std::string(1, c)});
        }
    }

    bool starts_atom()
    {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
               c == '[';
    }

    T expr()
    {
        T v = accept('-') ? -term() : term();
        for (;;) {
            if (accept('+')) {
                v = v + term();
            } else if (accept('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    T term()
    {
        T v = power();
        for (;;) {
            if (accept('*')) {
                v = v * power();
            } else if (accept('/')) {
                const std::size_t at = m_pos;
                const T d = power();
                try {
                    v = v * m_ctx.invert(d);
                } catch (const NotInvertible &) {
                    throw ParseError("division by a non-invertible value", m_offset + at, {});
                }
            } else if (starts_atom()) {
                v = v * power();
            } else {
                return v;
            }
        }
    }

    T power()
    {
        T base = atom();
        if (!accept('^')) {
            return base;
        }
        skip();
        const std::size_t start = m_pos;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
        if (start == m_pos) {
            fail("expected exponent", {"integer"});
        }
        const int e = std::stoi(std::string(m_text.substr(start, m_pos - start)));
        T out = m_ctx.one();
        for (int q = 0; q < e; ++q) {
            out = out * base;
        }
        return out;
    }

    T atom()
    {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = m_pos;
            while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
                ++m_pos;
            }
            return m_ctx.from_rational(Rational(Integer(std::string(m_text.substr(start, m_pos - start)))));
        }
        if (accept('(')) {
            T v = expr();
            expect(')');
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return name(c);
        }
        if (c == '[') {
            return matrix();
        }
        fail("expected a scalar", expected_atoms());
    }

    std::vector<std::string> expected_atoms() const
    {
        std::vector<std::string> out{"number", "("};
        if constexpr (std::is_same_v<T, Quaternion>) {
            out.insert(out.end(), {"i", "j", "k"});
        } else if constexpr (std::is_same_v<T, RatFunc>) {
            out.push_back("x");
        } else if constexpr (std::is_same_v<T, MatScalar>) {
            out.insert(out.end(), {"x", "["});
        }
        return out;
    }

    T name(char c)
    {
        ++m_pos;
        if constexpr (std::is_same_v<T, Quaternion>) {
            if (c == 'i') {
                return Quaternion::i();
            }
            if (c == 'j') {
                return Quaternion::j();
            }
            if (c == 'k') {
                return Quaternion::k();
            }
        } else if constexpr (std::is_same_v<T, RatFunc>) {
            if (c == 'x') {
                return RatFunc::x();
            }
        } else if constexpr (std::is_same_v<T, MatScalar>) {
            if (c == 'x') {
                return MatScalar::scalar(m_ctx.dim, RatFunc::x());
            }
        }
        --m_pos;
        fail(std::string("unknown name '") + c + "'", expected_atoms());
    }

    T matrix()
    {
        if constexpr (std::is_same_v<T, MatScalar>) {
            const std::size_t start = m_pos;
            expect('[');
            std::vector<RatFunc> entries;
            std::size_t rows = 0;
            do {
                expect('[');
                do {
                    skip();
                    const std::size_t entry_start = m_pos;
                    int depth = 0;
                    while (m_pos < m_text.size()) {
                        const char ch = m_text[m_pos];
                        if (ch == '(') {
                            ++depth;
                        } else if (ch == ')') {
                            --depth;
                        } else if (depth == 0 && (ch == ',' || ch == ']')) {
                            break;
                        }
                        ++m_pos;
                    }
                    const RatFuncField field;
                    ScalarParser<RatFuncField> sub(field, m_text.substr(entry_start, m_pos - entry_start),
                                                   m_offset + entry_start);
                    entries.push_back(sub.parse());
                } while (accept(','));
                expect(']');
                ++rows;
            } while (accept(','));
            expect(']');
            if (rows != m_ctx.dim || entries.size() != rows * rows) {
                throw ParseError("matrix must be " + std::to_string(m_ctx.dim) + "x" + std::to_string(m_ctx.dim),
                                 m_offset + start, {});
            }
            return MatScalar(m_ctx.dim, std::move(entries));
        } else {
            fail("matrix literal not allowed here", expected_atoms());
        }
    }

    const C &m_ctx;
    std::string_view m_text;
    std::size_t m_offset;
    std::size_t m_pos = 0;
};

template <DivisionContext C>
typename C::value_type parse_scalar(const C &ctx, std::string_view text, std::size_t offset = 0)
{
    return ScalarParser<C>(ctx, text, offset).parse();
}

// Semicolon-separated list, e.g. "i; j; 1+k". Semicolons inside brackets or
// parentheses do not split.
template <DivisionContext C>
std::vector<typename C::value_type> parse_scalar_list(const C &ctx, std::string_view text)
{
    std::vector<typename C::value_type> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t p = 0; p <= text.size(); ++p) {
        const char ch = p < text.size() ? text[p] : ';';
        if (ch == '(' || ch == '[') {
            ++depth;
        } else if (ch == ')' || ch == ']') {
            --depth;
        } else if (ch == ';' && depth == 0) {
            out.push_back(parse_scalar(ctx, text.substr(start, p - start), start));
            start = p + 1;
        }
    }
    return out;
}

} // namespace qnalg::cli

#endif
