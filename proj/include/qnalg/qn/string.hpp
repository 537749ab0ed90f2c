#ifndef QNALG_QN_STRING_HPP
#define QNALG_QN_STRING_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "../errors.hpp"
#include "subset.hpp"

namespace qnalg::qn
{

// A string (B_1, ..., B_l) of nonempty subsets; it stands for the monomial
// r(B_1) ... r(B_l). The empty string is the unit.
using SubsetString = std::vector<Subset>;

// Strictly increasing positions (n_1, ..., n_t), n_1 = 1, n_t = l + 1, 1-based.
using Skeleton = std::vector<int>;

inline constexpr int kMaxDegree = 24;

inline int degree(const SubsetString &s)
{
    int d = 0;
    for (Subset b : s) {
        d += b.size();
    }
    return d;
}

// T_i: drop the first i entries.
inline SubsetString truncated(const SubsetString &s, std::size_t i)
{
    return SubsetString(s.begin() + static_cast<std::ptrdiff_t>(std::min(i, s.size())), s.end());
}

inline SubsetString prepend(Subset b, const SubsetString &s)
{
    SubsetString out;
    out.reserve(s.size() + 1);
    out.push_back(b);
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

inline bool is_valid_string(const SubsetString &s, int n)
{
    return std::all_of(s.begin(), s.end(), [n](Subset b) { return !b.empty() && b.within(n); });
}

inline std::string str(const SubsetString &s)
{
    if (s.empty()) {
        return "()";
    }
    std::string out = "(";
    for (std::size_t q = 0; q < s.size(); ++q) {
        if (q) {
            out += ",";
        }
        out += s[q].str();
    }
    return out + ")";
}

// Canonical listing order: degree, then length, then lexicographic by bitmask.
inline bool canonical_less(const SubsetString &a, const SubsetString &b)
{
    const int da = degree(a), db = degree(b);
    if (da != db) {
        return da < db;
    }
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

// n_{k+1} is the first j > n_k at which the one-element-at-a-time descending
// chain started at B_{n_k} breaks: B_j is not inside B_{n_k}, or
// |B_j| != |B_{n_k}| + n_k - j.
inline Skeleton skeleton(const SubsetString &s)
{
    const int l = static_cast<int>(s.size());
    Skeleton sk{1};
    int cur = 1;
    while (cur <= l) {
        const Subset anchor = s[cur - 1];
        int next = l + 1;
        for (int j = cur + 1; j <= l; ++j) {
            const Subset bj = s[j - 1];
            if (!bj.subset_of(anchor) || bj.size() != anchor.size() + cur - j) {
                next = j;
                break;
            }
        }
        sk.push_back(next);
        cur = next;
    }
    return sk;
}

struct DefValues
{
    int d = 0;
    int e = 0;
    int f = 0;
    friend bool operator==(const DefValues &, const DefValues &) = default;
};

// d, e, f of a set B against a string. All three vanish unless B_1 = B \ {b};
// then d = b, e = max B, and f = e except when the chain (B, B_1, ...) would
// run into the next anchor B_{n_2} with the right size, in which case f is the
// largest element of B outside B_{n_2}.
inline DefValues def_functions(Subset b, const SubsetString &s)
{
    if (s.empty()) {
        return {};
    }
    const Subset b1 = s.front();
    if (!b1.subset_of(b) || b1.size() != b.size() - 1) {
        return {};
    }
    DefValues out;
    out.d = (b - b1).max();
    out.e = b.max();
    out.f = out.e;
    const Skeleton sk = skeleton(s);
    if (sk.size() >= 3) {
        const int n2 = sk[1];
        const Subset bn2 = s[static_cast<std::size_t>(n2 - 1)];
        if (bn2.size() == b.size() - n2) {
            out.f = (b - bn2).max();
        }
    }
    return out;
}

namespace detail
{

// Interior positions must follow `rule`: B_{i+1} = B_i \ {rule(B_i, T_i)}.
template <typename Rule>
bool interiors_follow(const SubsetString &s, Rule rule)
{
    const Skeleton sk = skeleton(s);
    for (std::size_t j = 0; j + 1 < sk.size(); ++j) {
        for (int i = sk[j]; i + 1 < sk[j + 1]; ++i) {
            const Subset bi = s[static_cast<std::size_t>(i - 1)];
            const int drop = rule(bi, truncated(s, static_cast<std::size_t>(i)));
            if (s[static_cast<std::size_t>(i)] != bi.without(drop)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace detail

inline bool is_standard(const SubsetString &s)
{
    return detail::interiors_follow(s, [](Subset b, const SubsetString &t) { return def_functions(b, t).e; });
}

inline bool is_reduced(const SubsetString &s)
{
    return detail::interiors_follow(s, [](Subset b, const SubsetString &t) { return def_functions(b, t).f; });
}

// v(B): for every chain [n_j, n_{j+1}) and k in it, the tuple
// (|B_k \ B_q|)_{q = n_j .. k-1}, all juxtaposed. v'(B) uses the same tuples at
// interior positions but, at each chain start n_{j+1} after the first, the
// tuple (|B_{n_{j+1}} \ B_q|)_{q = n_j .. n_{j+1}-1} against the previous chain.
inline std::vector<int> v_sequence(const SubsetString &s, bool primed)
{
    const Skeleton sk = skeleton(s);
    auto vkq = [&](int k, int q) { return (s[static_cast<std::size_t>(k - 1)] - s[static_cast<std::size_t>(q - 1)]).size(); };
    std::vector<int> out;
    for (std::size_t j = 0; j + 1 < sk.size(); ++j) {
        for (int k = sk[j]; k < sk[j + 1]; ++k) {
            if (k == sk[j]) {
                if (primed && j > 0) {
                    for (int q = sk[j - 1]; q < k; ++q) {
                        out.push_back(vkq(k, q));
                    }
                }
                continue;
            }
            for (int q = sk[j]; q < k; ++q) {
                out.push_back(vkq(k, q));
            }
        }
    }
    return out;
}

// ||B|| = (sum of B_1, ..., sum of B_l)
inline std::vector<int> weight_sequence(const SubsetString &s)
{
    std::vector<int> out;
    out.reserve(s.size());
    for (Subset b : s) {
        out.push_back(b.weight());
    }
    return out;
}

enum class Order { less, greater, equal, incomparable };
enum class OrderVariant { plain, primed };

inline std::string to_string(Order o)
{
    switch (o) {
    case Order::less:
        return "less";
    case Order::greater:
        return "greater";
    case Order::equal:
        return "equal";
    case Order::incomparable:
        break;
    }
    return "incomparable";
}

// The partial orders < (plain) and <' (primed), decided in four steps:
// degree; skeleton (lexicographically larger skeleton = smaller string);
// v resp. v'; then ||.||. Steps 2-4 need equal lengths.
inline Order compare_strings(const SubsetString &a, const SubsetString &b, OrderVariant variant)
{
    auto lex = [](const auto &x, const auto &y) {
        return x < y ? Order::less : (y < x ? Order::greater : Order::equal);
    };
    const int da = degree(a), db = degree(b);
    if (da != db) {
        return da < db ? Order::less : Order::greater;
    }
    if (a.size() != b.size()) {
        throw LengthMismatch("strings " + str(a) + " and " + str(b) + " have equal degree but different lengths");
    }
    const Skeleton ska = skeleton(a), skb = skeleton(b);
    if (ska != skb) {
        return ska > skb ? Order::less : Order::greater;
    }
    const bool primed = variant == OrderVariant::primed;
    if (const Order o = lex(v_sequence(a, primed), v_sequence(b, primed)); o != Order::equal) {
        return o;
    }
    if (const Order o = lex(weight_sequence(a), weight_sequence(b)); o != Order::equal) {
        return o;
    }
    return a == b ? Order::equal : Order::incomparable;
}

enum class BasisVariant { standard, reduced };

namespace detail
{

inline void check_enumeration_limits(int n, int max_degree)
{
    check_n(n);
    if (max_degree > kMaxDegree) {
        throw ResourceLimit("max degree " + std::to_string(max_degree) + " exceeds " + std::to_string(kMaxDegree));
    }
}

struct Segment
{
    Subset anchor;
    int length;
};

// Fill the chain interiors of a skeleton plan, right to left dependencies
// permitting: the deletion at position i only looks at the next anchor.
inline SubsetString fill_plan(const std::vector<Segment> &plan, BasisVariant variant)
{
    SubsetString s;
    int pos = 1;
    for (std::size_t j = 0; j < plan.size(); ++j) {
        const int next_pos = pos + plan[j].length;
        const bool has_next = j + 1 < plan.size();
        Subset cur = plan[j].anchor;
        s.push_back(cur);
        for (int i = pos; i + 1 < next_pos; ++i) {
            int drop = cur.max();
            if (variant == BasisVariant::reduced && has_next) {
                const Subset next = plan[j + 1].anchor;
                if (next.size() == cur.size() - (next_pos - i)) {
                    drop = (cur - next).max();
                }
            }
            cur = cur.without(drop);
            s.push_back(cur);
        }
        pos = next_pos;
    }
    return s;
}

} // namespace detail

// All members of Y (standard) or Y' (reduced) of degree <= max_degree, built
// from skeleton positions and anchor subsets: consecutive anchors must break
// the chain, interiors are forced by the e- or f-rule. Sorted canonically.
inline std::vector<SubsetString> enumerate_basis(int n, int max_degree, BasisVariant variant)
{
    detail::check_enumeration_limits(n, max_degree);
    std::vector<SubsetString> out;
    std::vector<detail::Segment> plan;
    const int top = (1 << n) - 1;

    std::function<void(int, int)> grow = [&](int pos, int budget) {
        out.push_back(detail::fill_plan(plan, variant));
        for (int mask = 1; mask <= top; ++mask) {
            const Subset a(static_cast<std::uint16_t>(mask));
            if (!plan.empty()) {
                const detail::Segment &prev = plan.back();
                const int prev_pos = pos - prev.length;
                const bool breaks = !a.subset_of(prev.anchor) || a.size() != prev.anchor.size() + prev_pos - pos;
                if (!breaks) {
                    continue;
                }
            }
            int chain_degree = 0;
            for (int len = 1; len <= a.size(); ++len) {
                chain_degree += a.size() - (len - 1);
                if (chain_degree > budget) {
                    break;
                }
                plan.push_back({a, len});
                grow(pos + len, budget - chain_degree);
                plan.pop_back();
            }
        }
    };
    grow(1, max_degree);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

inline std::vector<SubsetString> enumerate_reduced(int n, int max_degree)
{
    return enumerate_basis(n, max_degree, BasisVariant::reduced);
}

inline std::vector<SubsetString> enumerate_standard(int n, int max_degree)
{
    return enumerate_basis(n, max_degree, BasisVariant::standard);
}

// Every string of degree <= max_degree, sorted canonically. Exponential; meant
// for cross-checking the structured enumerators on small cases.
inline std::vector<SubsetString> enumerate_all_strings(int n, int max_degree)
{
    detail::check_enumeration_limits(n, max_degree);
    std::vector<SubsetString> out;
    SubsetString cur;
    const int top = (1 << n) - 1;
    std::function<void(int)> grow = [&](int budget) {
        out.push_back(cur);
        for (int mask = 1; mask <= top; ++mask) {
            const Subset a(static_cast<std::uint16_t>(mask));
            if (a.size() <= budget) {
                cur.push_back(a);
                grow(budget - a.size());
                cur.pop_back();
            }
        }
    };
    grow(max_degree);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

} // namespace qnalg::qn

#endif
