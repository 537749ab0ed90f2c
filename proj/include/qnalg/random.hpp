#ifndef QNALG_RANDOM_HPP
#define QNALG_RANDOM_HPP

#include <cstdint>
#include <random>
#include <type_traits>
#include <vector>

#include "context.hpp"

namespace qnalg
{

// Seeded source of small random scalars. std::mt19937_64 is fully specified
// by the standard, and bounded draws are done here by hand (the standard
// distributions are implementation-defined), so a seed reproduces the same
// values with any toolchain.
class Rng
{
public:
    explicit Rng(std::uint64_t seed = 0) : m_engine(seed) {}

    std::uint64_t next() { return m_engine(); }

    // Uniform in [lo, hi].
    long uniform(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = m_engine();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 m_engine;
};

// Magnitude bound for numerators and denominators of random scalars.
inline constexpr long kRandomBound = 9;

inline Rational random_integer(Rng &rng, long bound = kRandomBound)
{
    return rng.uniform(-bound, bound);
}

inline Rational random_rational(Rng &rng, long bound = kRandomBound)
{
    Rational q(rng.uniform(-bound, bound), rng.uniform(1, bound));
    q.canonicalize();
    return q;
}

inline Quaternion random_quaternion(Rng &rng, long bound = kRandomBound)
{
    return {random_integer(rng, bound), random_integer(rng, bound), random_integer(rng, bound),
            random_integer(rng, bound)};
}

inline UPoly random_upoly(Rng &rng, std::size_t max_degree, long bound = kRandomBound)
{
    std::vector<Rational> c(max_degree + 1);
    for (auto &x : c) {
        x = random_integer(rng, bound);
    }
    return UPoly(std::move(c));
}

// Numerator of degree <= num_degree, nonzero denominator of degree <= den_degree.
inline RatFunc random_ratfunc(Rng &rng, std::size_t num_degree = 2, std::size_t den_degree = 2,
                              long bound = kRandomBound)
{
    UPoly den;
    while (den.is_zero()) {
        den = random_upoly(rng, den_degree, bound);
    }
    return RatFunc(random_upoly(rng, num_degree, bound), den);
}

inline MatScalar random_matscalar(Rng &rng, std::size_t dim, std::size_t num_degree = 1,
                                  std::size_t den_degree = 0, long bound = kRandomBound)
{
    MatScalar m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = random_ratfunc(rng, num_degree, den_degree, bound);
        }
    }
    return m;
}

// Random element of a context, with the default shapes used by the tests.
template <DivisionContext C>
typename C::value_type random_element(const C &ctx, Rng &rng)
{
    using T = typename C::value_type;
    if constexpr (std::is_same_v<T, Rational>) {
        return random_rational(rng);
    } else if constexpr (std::is_same_v<T, Quaternion>) {
        return random_quaternion(rng);
    } else if constexpr (std::is_same_v<T, RatFunc>) {
        return random_ratfunc(rng);
    } else {
        return random_matscalar(rng, ctx.dim);
    }
}

} // namespace qnalg

#endif
