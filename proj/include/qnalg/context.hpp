#ifndef QNALG_CONTEXT_HPP
#define QNALG_CONTEXT_HPP

#include <concepts>
#include <cstddef>
#include <string>

#include "errors.hpp"
#include "matscalar.hpp"
#include "quaternion.hpp"
#include "ratfunc.hpp"
#include "rational.hpp"

namespace qnalg
{

// A division context supplies the constants and the partial operations of a
// concrete coefficient domain: zero, one, fallible inversion and a
// derivation. Ring arithmetic itself is carried by the value type's
// operators. Every algorithm in the library is written against this concept.
template <typename C>
concept DivisionContext = requires(const C &ctx, const typename C::value_type &a, const Rational &q) {
    typename C::value_type;
    { ctx.zero() } -> std::same_as<typename C::value_type>;
    { ctx.one() } -> std::same_as<typename C::value_type>;
    { ctx.from_rational(q) } -> std::same_as<typename C::value_type>;
    { ctx.invert(a) } -> std::same_as<typename C::value_type>;
    { ctx.derive(a) } -> std::same_as<typename C::value_type>;
    { ctx.is_zero(a) } -> std::convertible_to<bool>;
    { ctx.render(a) } -> std::same_as<std::string>;
    { a + a } -> std::convertible_to<typename C::value_type>;
    { a - a } -> std::convertible_to<typename C::value_type>;
    { a * a } -> std::convertible_to<typename C::value_type>;
    { -a } -> std::convertible_to<typename C::value_type>;
    { a == a } -> std::convertible_to<bool>;
    { C::commutative } -> std::convertible_to<bool>;
};

struct RationalField
{
    using value_type = Rational;
    static constexpr bool commutative = true;
    static constexpr const char *name = "rat";

    Rational zero() const { return 0; }
    Rational one() const { return 1; }
    Rational from_rational(const Rational &q) const { return q; }
    Rational invert(const Rational &a) const
    {
        if (a == 0) {
            throw NotInvertible("rational 0 is not invertible");
        }
        return 1 / a;
    }
    Rational derive(const Rational &) const { return 0; }
    bool is_zero(const Rational &a) const { return a == 0; }
    std::string render(const Rational &a) const { return a.get_str(); }
};

struct QuaternionRing
{
    using value_type = Quaternion;
    static constexpr bool commutative = false;
    static constexpr const char *name = "quat";

    Quaternion zero() const { return {}; }
    Quaternion one() const { return 1; }
    Quaternion from_rational(const Rational &q) const { return q; }
    Quaternion invert(const Quaternion &a) const { return a.inverse(); }
    Quaternion derive(const Quaternion &) const { return {}; }
    bool is_zero(const Quaternion &a) const { return a.is_zero(); }
    std::string render(const Quaternion &a) const { return a.str(); }
};

struct RatFuncField
{
    using value_type = RatFunc;
    static constexpr bool commutative = true;
    static constexpr const char *name = "ratfunc";

    RatFunc zero() const { return {}; }
    RatFunc one() const { return 1; }
    RatFunc from_rational(const Rational &q) const { return q; }
    RatFunc invert(const RatFunc &a) const { return a.inverse(); }
    RatFunc derive(const RatFunc &a) const { return a.derivative(); }
    bool is_zero(const RatFunc &a) const { return a.is_zero(); }
    std::string render(const RatFunc &a) const { return a.str(); }
};

// Square matrices of a fixed dimension over Q(x).
struct MatRing
{
    using value_type = MatScalar;
    static constexpr bool commutative = false;
    static constexpr const char *name = "mat";

    std::size_t dim = 2;

    MatScalar zero() const { return MatScalar(dim); }
    MatScalar one() const { return MatScalar::identity(dim); }
    MatScalar from_rational(const Rational &q) const { return MatScalar::scalar(dim, RatFunc(q)); }
    MatScalar invert(const MatScalar &a) const { return a.inverse(); }
    MatScalar derive(const MatScalar &a) const { return a.derivative(); }
    bool is_zero(const MatScalar &a) const { return a.is_zero(); }
    std::string render(const MatScalar &a) const { return a.str(); }
};

static_assert(DivisionContext<RationalField>);
static_assert(DivisionContext<QuaternionRing>);
static_assert(DivisionContext<RatFuncField>);
static_assert(DivisionContext<MatRing>);

// Zero derivation on a context: same arithmetic, D = 0. Used to check that the
// differential constructions degenerate to the polynomial ones.
template <DivisionContext C>
struct ConstantsOf : C
{
    using value_type = typename C::value_type;
    value_type derive(const value_type &) const { return C::zero(); }
};

} // namespace qnalg

#endif
