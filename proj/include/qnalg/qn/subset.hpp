#ifndef QNALG_QN_SUBSET_HPP
#define QNALG_QN_SUBSET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "../errors.hpp"

namespace qnalg::qn
{

inline constexpr int kMaxN = 16;

inline void check_n(int n)
{
    if (n < 1 || n > kMaxN) {
        throw ResourceLimit("n must lie in [1, " + std::to_string(kMaxN) + "], got " + std::to_string(n));
    }
}

// Subset of {1, ..., 16} as a bitmask; bit (i - 1) stands for i.
class Subset
{
public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint16_t mask) : m_mask(mask) {}
    Subset(std::initializer_list<int> elems)
    {
        for (int e : elems) {
            *this = with(e);
        }
    }

    static Subset full(int n) { return Subset(static_cast<std::uint16_t>((1u << n) - 1u)); }
    static Subset singleton(int i) { return Subset().with(i); }

    constexpr std::uint16_t mask() const { return m_mask; }
    constexpr bool empty() const { return m_mask == 0; }
    constexpr int size() const { return std::popcount(m_mask); }

    bool contains(int i) const { return i >= 1 && i <= kMaxN && ((m_mask >> (i - 1)) & 1u); }
    constexpr bool subset_of(Subset o) const { return (m_mask & ~o.m_mask) == 0; }

    Subset with(int i) const
    {
        if (i < 1 || i > kMaxN) {
            throw Error("subset element " + std::to_string(i) + " out of range");
        }
        return Subset(static_cast<std::uint16_t>(m_mask | (1u << (i - 1))));
    }
    Subset without(int i) const
    {
        if (i < 1 || i > kMaxN) {
            return *this;
        }
        return Subset(static_cast<std::uint16_t>(m_mask & ~(1u << (i - 1))));
    }

    constexpr Subset operator|(Subset o) const { return Subset(static_cast<std::uint16_t>(m_mask | o.m_mask)); }
    constexpr Subset operator&(Subset o) const { return Subset(static_cast<std::uint16_t>(m_mask & o.m_mask)); }
    constexpr Subset operator-(Subset o) const { return Subset(static_cast<std::uint16_t>(m_mask & ~o.m_mask)); }

    // Largest element, 0 for the empty set.
    int max() const { return m_mask ? 16 - std::countl_zero(m_mask) : 0; }
    int min() const { return m_mask ? std::countr_zero(m_mask) + 1 : 0; }

    // Sum of the elements.
    int weight() const
    {
        int s = 0;
        for (int e : elements()) {
            s += e;
        }
        return s;
    }

    // Elements in ascending order.
    std::vector<int> elements() const
    {
        std::vector<int> out;
        for (int i = 1; i <= kMaxN; ++i) {
            if (contains(i)) {
                out.push_back(i);
            }
        }
        return out;
    }

    // Bits above n are zero.
    bool within(int n) const { return subset_of(full(n)); }

    // "{1,3}"
    std::string str() const
    {
        std::string out = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) {
                out += ",";
            }
            out += std::to_string(e);
            first = false;
        }
        return out + "}";
    }

    friend constexpr bool operator==(Subset, Subset) = default;
    // Ascending bitmask value.
    friend constexpr auto operator<=>(Subset a, Subset b) { return a.m_mask <=> b.m_mask; }

private:
    std::uint16_t m_mask = 0;
};

// All subsets of `s`, in ascending bitmask order (including the empty set).
inline std::vector<Subset> subsets_of(Subset s)
{
    std::vector<Subset> out;
    const std::uint16_t m = s.mask();
    std::uint16_t sub = 0;
    do {
        out.emplace_back(sub);
        sub = static_cast<std::uint16_t>((sub - m) & m);
    } while (sub != 0);
    return out;
}

} // namespace qnalg::qn

#endif
