#ifndef QNALG_CLI_EXPR_HPP
#define QNALG_CLI_EXPR_HPP

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "../errors.hpp"
#include "../qn/maps.hpp"
#include "../qn/word.hpp"

namespace qnalg::cli
{

using qn::Subset;

// ---- tokens ----

enum class Tok { number, z, r, u, lambda, lbrace, rbrace, comma, lparen, rparen, plus, minus, star, slash, end };

inline std::string tok_name(Tok t)
{
    switch (t) {
    case Tok::number: return "integer";
    case Tok::z: return "z";
    case Tok::r: return "r";
    case Tok::u: return "u";
    case Tok::lambda: return "L(";
    case Tok::lbrace: return "{";
    case Tok::rbrace: return "}";
    case Tok::comma: return ",";
    case Tok::lparen: return "(";
    case Tok::rparen: return ")";
    case Tok::plus: return "+";
    case Tok::minus: return "-";
    case Tok::star: return "*";
    case Tok::slash: return "/";
    case Tok::end: return "end of input";
    }
    return "?";
}

struct Token
{
    Tok kind;
    std::size_t begin;
    std::size_t end;
    std::string text;
};

inline std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    std::size_t p = 0;
    while (p < s.size()) {
        const char c = s[p];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++p;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t q = p;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) {
                ++q;
            }
            out.push_back({Tok::number, p, q, std::string(s.substr(p, q - p))});
            p = q;
            continue;
        }
        Tok kind;
        std::size_t len = 1;
        switch (c) {
        case 'z': kind = Tok::z; break;
        case 'r': kind = Tok::r; break;
        case 'u': kind = Tok::u; break;
        case 'L': {
            std::size_t q = p + 1;
            while (q < s.size() && std::isspace(static_cast<unsigned char>(s[q]))) {
                ++q;
            }
            if (q >= s.size() || s[q] != '(') {
                throw ParseError("expected '(' after L", q, {"("});
            }
            kind = Tok::lambda;
            len = q + 1 - p;
            break;
        }
        case '{': kind = Tok::lbrace; break;
        case '}': kind = Tok::rbrace; break;
        case ',': kind = Tok::comma; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", p,
                             {"integer", "z", "r", "u", "L(", "(", "+", "-", "*"});
        }
        out.push_back({kind, p, p + len, std::string(s.substr(p, len))});
        p += len;
    }
    out.push_back({Tok::end, s.size(), s.size(), ""});
    return out;
}

// ---- syntax tree ----

struct Span
{
    std::size_t begin = 0;
    std::size_t end = 0;
    friend bool operator==(const Span &, const Span &) = default;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node
{
    enum class Kind { sum, product, negate, group, number, gen_z, gen_r, gen_u, lambda };
    Kind kind;
    Span span;
    std::vector<NodePtr> children; // sum, product: operands; negate, group: one child
    std::vector<bool> minus;       // sum: sign of each operand after the first
    Rational value;                // number
    Subset a;                      // z: A; r: A; u: B; lambda: A
    Subset b;                      // z: B
    int k = 0;                     // lambda
};

// Structural equality, ignoring spans.
inline bool same_tree(const Node &x, const Node &y)
{
    if (x.kind != y.kind || x.children.size() != y.children.size() || x.minus != y.minus || x.value != y.value ||
        x.a != y.a || x.b != y.b || x.k != y.k) {
        return false;
    }
    for (std::size_t c = 0; c < x.children.size(); ++c) {
        if (!same_tree(*x.children[c], *y.children[c])) {
            return false;
        }
    }
    return true;
}

// ---- parser ----
//   expr    := term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := '-' factor | primary
//   primary := number ['/' number] | gen | lambda | '(' expr ')'
//   gen     := 'z' subset ',' subset | 'r' subset | 'u' subset
//   lambda  := 'L(' int ',' subset ')'
//   subset  := '{' [int (',' int)*] '}'
class ExprParser
{
public:
    explicit ExprParser(std::string_view text) : m_toks(tokenize(text)) {}

    NodePtr parse()
    {
        NodePtr e = expr();
        if (cur().kind != Tok::end) {
            fail({"+", "-", "*", "end of input"});
        }
        return e;
    }

private:
    const Token &cur() const { return m_toks[m_pos]; }

    [[noreturn]] void fail(const std::vector<std::string> &expected, const std::string &msg = "") const
    {
        const Token &t = cur();
        const std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        throw ParseError(msg.empty() ? "unexpected " + found : msg, t.begin, expected);
    }

    const Token &take(Tok kind)
    {
        if (cur().kind != kind) {
            fail({tok_name(kind)});
        }
        return m_toks[m_pos++];
    }

    static bool starts_factor(Tok t)
    {
        return t == Tok::number || t == Tok::z || t == Tok::r || t == Tok::u || t == Tok::lambda ||
               t == Tok::lparen || t == Tok::minus;
    }

    NodePtr expr()
    {
        const std::size_t begin = cur().begin;
        NodePtr first = term();
        if (cur().kind != Tok::plus && cur().kind != Tok::minus) {
            return first;
        }
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::sum;
        n->children.push_back(first);
        n->minus.push_back(false);
        while (cur().kind == Tok::plus || cur().kind == Tok::minus) {
            n->minus.push_back(cur().kind == Tok::minus);
            ++m_pos;
            n->children.push_back(term());
        }
        n->span = {begin, n->children.back()->span.end};
        return n;
    }

    NodePtr term()
    {
        const std::size_t begin = cur().begin;
        NodePtr first = factor();
        // A '-' here continues the sum, so juxtaposition excludes it.
        if (cur().kind != Tok::star && !(starts_factor(cur().kind) && cur().kind != Tok::minus)) {
            return first;
        }
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::product;
        n->children.push_back(first);
        for (;;) {
            if (cur().kind == Tok::star) {
                ++m_pos;
                n->children.push_back(factor());
            } else if (starts_factor(cur().kind) && cur().kind != Tok::minus) {
                n->children.push_back(factor());
            } else {
                break;
            }
        }
        n->span = {begin, n->children.back()->span.end};
        return n;
    }

    NodePtr factor()
    {
        if (cur().kind == Tok::minus) {
            const std::size_t begin = cur().begin;
            ++m_pos;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::negate;
            n->children.push_back(factor());
            n->span = {begin, n->children.back()->span.end};
            return n;
        }
        return primary();
    }

    int integer()
    {
        const Token &t = take(Tok::number);
        if (t.text.size() > 6) {
            throw ParseError("integer too large", t.begin, {});
        }
        return std::stoi(t.text);
    }

    Subset subset()
    {
        take(Tok::lbrace);
        Subset s;
        if (cur().kind == Tok::rbrace) {
            ++m_pos;
            return s;
        }
        for (;;) {
            const std::size_t at = cur().begin;
            const int e = integer();
            if (e < 1 || e > qn::kMaxN) {
                throw ParseError("set element " + std::to_string(e) + " outside 1.." + std::to_string(qn::kMaxN), at,
                                 {});
            }
            if (s.contains(e)) {
                throw ParseError("repeated set element " + std::to_string(e), at, {});
            }
            s = s.with(e);
            if (cur().kind == Tok::comma) {
                ++m_pos;
                continue;
            }
            take(Tok::rbrace);
            return s;
        }
    }

    NodePtr primary()
    {
        auto n = std::make_shared<Node>();
        const std::size_t begin = cur().begin;
        switch (cur().kind) {
        case Tok::number: {
            Integer num(take(Tok::number).text);
            Integer den = 1;
            if (cur().kind == Tok::slash) {
                ++m_pos;
                const Token &d = take(Tok::number);
                den = Integer(d.text);
                if (den == 0) {
                    throw ParseError("zero denominator", d.begin, {});
                }
            }
            n->kind = Node::Kind::number;
            n->value = Rational(num, den);
            n->value.canonicalize();
            break;
        }
        case Tok::z: {
            ++m_pos;
            n->kind = Node::Kind::gen_z;
            n->a = subset();
            take(Tok::comma);
            const std::size_t bpos = cur().begin;
            n->b = subset();
            if (!(n->a & n->b).empty()) {
                throw ParseError("z{A},{B} needs A and B disjoint", bpos, {});
            }
            break;
        }
        case Tok::r:
        case Tok::u:
            n->kind = cur().kind == Tok::r ? Node::Kind::gen_r : Node::Kind::gen_u;
            ++m_pos;
            n->a = subset();
            break;
        case Tok::lambda:
            ++m_pos;
            n->kind = Node::Kind::lambda;
            n->k = integer();
            take(Tok::comma);
            n->a = subset();
            take(Tok::rparen);
            break;
        case Tok::lparen: {
            ++m_pos;
            n->kind = Node::Kind::group;
            n->children.push_back(expr());
            take(Tok::rparen);
            break;
        }
        default:
            fail({"integer", "z", "r", "u", "L(", "(", "-"});
        }
        n->span = {begin, m_toks[m_pos - 1].end};
        return n;
    }

    std::vector<Token> m_toks;
    std::size_t m_pos = 0;
};

inline NodePtr parse_expression(std::string_view text) { return ExprParser(text).parse(); }

// ---- rendering ----

inline std::string render(const Node &n)
{
    switch (n.kind) {
    case Node::Kind::sum: {
        std::string out = render(*n.children[0]);
        for (std::size_t c = 1; c < n.children.size(); ++c) {
            out += n.minus[c] ? " - " : " + ";
            out += render(*n.children[c]);
        }
        return out;
    }
    case Node::Kind::product: {
        std::string out;
        for (std::size_t c = 0; c < n.children.size(); ++c) {
            out += (c ? " * " : "") + render(*n.children[c]);
        }
        return out;
    }
    case Node::Kind::negate:
        return "-" + render(*n.children[0]);
    case Node::Kind::group:
        return "(" + render(*n.children[0]) + ")";
    case Node::Kind::number:
        return n.value.get_str();
    case Node::Kind::gen_z:
        return "z" + n.a.str() + "," + n.b.str();
    case Node::Kind::gen_r:
        return "r" + n.a.str();
    case Node::Kind::gen_u:
        return "u" + n.a.str();
    case Node::Kind::lambda:
        return "L(" + std::to_string(n.k) + "," + n.a.str() + ")";
    }
    return {};
}

// ---- lowering ----

inline Subset max_set(const Node &n)
{
    Subset s = n.a | n.b;
    for (const auto &c : n.children) {
        s = s | max_set(*c);
    }
    return s;
}

// Smallest n for which every set in the expression fits.
inline int required_n(const Node &n) { return max_set(n).max(); }

inline void check_fits(const Node &n, int nmax)
{
    if (!(n.a | n.b).within(nmax)) {
        throw ParseError("set element exceeds n = " + std::to_string(nmax), n.span.begin, {});
    }
    for (const auto &c : n.children) {
        check_fits(*c, nmax);
    }
}

// z{A},{i} is a generator; z{A},{B} with |B| != 1 is z_{A,B}; r{A} and u{B}
// are z_{A,{}} and z_{{},B}; L(k,A) is the noncommutative elementary
// symmetric function.
inline qn::GeneratorWord lower(const Node &n, int nmax)
{
    using qn::GeneratorWord;
    switch (n.kind) {
    case Node::Kind::sum: {
        GeneratorWord out = lower(*n.children[0], nmax);
        for (std::size_t c = 1; c < n.children.size(); ++c) {
            const GeneratorWord t = lower(*n.children[c], nmax);
            out = n.minus[c] ? out - t : out + t;
        }
        return out;
    }
    case Node::Kind::product: {
        GeneratorWord out = lower(*n.children[0], nmax);
        for (std::size_t c = 1; c < n.children.size(); ++c) {
            out = out * lower(*n.children[c], nmax);
        }
        return out;
    }
    case Node::Kind::negate:
        return -lower(*n.children[0], nmax);
    case Node::Kind::group:
        return lower(*n.children[0], nmax);
    case Node::Kind::number:
        return GeneratorWord(n.value);
    case Node::Kind::gen_z:
        check_fits(n, nmax);
        if (n.b.size() == 1) {
            return GeneratorWord(qn::gen(n.a, n.b.max(), nmax));
        }
        return qn::z_word(n.a, n.b);
    case Node::Kind::gen_r:
        check_fits(n, nmax);
        return qn::r_word(n.a);
    case Node::Kind::gen_u:
        check_fits(n, nmax);
        return qn::u_word(n.a);
    case Node::Kind::lambda:
        check_fits(n, nmax);
        return qn::lambda_word(n.a, n.k);
    }
    return {};
}

} // namespace qnalg::cli

#endif
