#ifndef QNALG_RATIONAL_HPP
#define QNALG_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace qnalg
{

// Arbitrary-precision rational. GMP keeps the value canonical
// (gcd(|num|, den) = 1, den > 0) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational &q)
{
    return q.get_str();
}

// Accepts "p", "-p", "p/q". Whitespace is not allowed.
inline Rational parse_rational(std::string_view text)
{
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("malformed rational '" + std::string(text) + "'", 0, {"p", "p/q"});
    }
    std::string n(num);
    if (n.front() == '+') {
        n.erase(0, 1);
    }
    Rational q{Integer(n), Integer(std::string(den))};
    if (q.get_den() == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    }
    q.canonicalize();
    return q;
}

} // namespace qnalg

#endif
