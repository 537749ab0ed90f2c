#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "qnalg/ncfactor.hpp"
#include "qnalg/qn/evaluate.hpp"
#include "qnalg/qn/normalizer.hpp"
#include "qnalg/qn/specialize.hpp"

using namespace qnalg;
using qn::Subset;

namespace
{

using Q = Quaternion;
const QuaternionRing H;
const RationalField F;

Q qi() { return Q::i(); }
Q qj() { return Q::j(); }

RootSet<QuaternionRing> ij_roots() { return RootSet<QuaternionRing>(H, {qi(), qj()}); }

// Right evaluation a_0 x^n + ... + a_n by explicit powers.
template <class C>
typename C::value_type right_evaluate(const C &ctx, const OrePoly<C> &p, const typename C::value_type &x)
{
    typename C::value_type out = ctx.zero();
    const int n = p.degree();
    for (int k = 0; k <= n; ++k) {
        typename C::value_type power = ctx.one();
        for (int e = 0; e < n - k; ++e) {
            power = power * x;
        }
        out = out + p.coeffs[static_cast<std::size_t>(k)] * power;
    }
    return out;
}

OrePoly<QuaternionRing> poly(std::vector<Q> c) { return make_ore_poly(H, std::move(c)); }

} // namespace

TEST(OrePoly, MultiplyExamples)
{
    EXPECT_EQ(ore_mul(H, poly({1, qi()}), poly({1, -qi()})), poly({1, 0, 1}));
    const auto p = poly({2, qj(), 3});
    EXPECT_EQ(ore_mul(H, p, poly({1})), p);
    const Q a{1, 2, 0, -1}, b{0, 1, 3, 1};
    EXPECT_EQ(ore_mul(H, poly({1, -a}), poly({1, -b})), poly({1, -(a + b), a * b}));
    EXPECT_TRUE(ore_mul(H, p, poly({})).is_zero());
}

TEST(OrePoly, RightDivisionExamples)
{
    auto d = right_divide_linear(H, poly({1, 0, 1}), qi());
    EXPECT_EQ(d.quotient, poly({1, qi()}));
    EXPECT_TRUE(d.remainder.is_zero());
    EXPECT_EQ(right_divide_linear(H, poly({1, 0, 1}), Q(1)).remainder, Q(2));
    const Q a{1, 1, 1, 1};
    d = right_divide_linear(H, poly({1, -a}), a);
    EXPECT_EQ(d.quotient, poly({1}));
    EXPECT_TRUE(d.remainder.is_zero());
    EXPECT_THROW(right_divide_linear(H, poly({3}), a), Error);
}

TEST(OrePoly, RightDivisionReconstructs)
{
    Rng rng(21);
    for (int t = 0; t < 200; ++t) {
        std::vector<Q> c;
        const int deg = static_cast<int>(rng.uniform(1, 5));
        for (int k = 0; k <= deg; ++k) {
            c.push_back(random_quaternion(rng));
        }
        if (c.front().is_zero()) {
            continue;
        }
        const auto p = poly(c);
        const Q xi = random_quaternion(rng);
        const auto d = right_divide_linear(H, p, xi);
        auto back = ore_mul(H, d.quotient, linear_factor(H, xi));
        back.coeffs.back() = back.coeffs.back() + d.remainder;
        ASSERT_EQ(make_ore_poly(H, back.coeffs), p);
        ASSERT_EQ(d.remainder, right_evaluate(H, p, xi));
    }
}

TEST(XAi, QuaternionExamples)
{
    auto roots = ij_roots();
    EXPECT_EQ(x_Ai(roots, {}, 1), qi());
    EXPECT_EQ(x_Ai(roots, {}, 2), qj());
    const Q oracle12 = (qj() - qi()) * qj() * (qj() - qi()).inverse();
    const Q oracle21 = (qi() - qj()) * qi() * (qi() - qj()).inverse();
    EXPECT_EQ(oracle12, -qi());
    EXPECT_EQ(oracle21, -qj());
    EXPECT_EQ(x_Ai(roots, {1}, 2), oracle12);
    EXPECT_EQ(x_Ai(roots, {2}, 1), oracle21);
    EXPECT_THROW(x_Ai(roots, {1}, 1), Error);
}

TEST(XAi, CommutativeRootsAreFixed)
{
    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
        auto roots = random_generic_roots(F, rng, 4);
        for (Subset a : qn::subsets_of(Subset::full(4))) {
            for (int i = 1; i <= 4; ++i) {
                if (!a.contains(i)) {
                    ASSERT_EQ(x_Ai(roots, a, i), roots.root(i));
                }
            }
        }
    }
}

TEST(XAi, IndependentOfListingOrder)
{
    Rng rng(8);
    for (int t = 0; t < 5; ++t) {
        auto roots = random_generic_roots(H, rng, 4);
        for (Subset a : qn::subsets_of(Subset::full(4))) {
            for (int i = 1; i <= 4; ++i) {
                if (a.contains(i)) {
                    continue;
                }
                std::vector<int> order = a.elements();
                do {
                    ASSERT_EQ(roots.compute(order, i), x_Ai(roots, a, i));
                } while (std::next_permutation(order.begin(), order.end()));
            }
        }
    }
}

TEST(XAi, RelativeFormulaExamples)
{
    Rng rng(4);
    auto roots = random_generic_roots(H, rng, 3);
    // A = {1,2}, B = {2}, i = 3
    const Q x23 = roots.x({2}, 3), x21 = roots.x({2}, 1);
    const Q up = (x23 - x21) * x23 * (x23 - x21).inverse();
    EXPECT_EQ(up, roots.x({1, 2}, 3));
    EXPECT_EQ(x_Ai_relative(roots, {2}, {1, 2}, 3), up);
    const Q down = (x23 - x21).inverse() * roots.x({1, 2}, 3) * (x23 - x21);
    EXPECT_EQ(down, x23);
    EXPECT_EQ(x_Cj_relative_down(roots, {1, 2}, {2}, 3), down);
    EXPECT_EQ(x_Ai_relative(roots, {}, {1, 2}, 3), x_Ai(roots, {1, 2}, 3));
}

TEST(XAi, RelativeFormulasOnAllChains)
{
    Rng rng(6);
    for (int n = 2; n <= 4; ++n) {
        auto roots = random_generic_roots(H, rng, n);
        const Subset all = Subset::full(n);
        for (Subset a : qn::subsets_of(all)) {
            for (Subset b : qn::subsets_of(a)) {
                for (int i = 1; i <= n; ++i) {
                    if (a.contains(i)) {
                        continue;
                    }
                    ASSERT_EQ(x_Ai_relative(roots, b, a, i), x_Ai(roots, a, i)) << a.str() << b.str() << i;
                    ASSERT_EQ(x_Cj_relative_down(roots, a, b, i), x_Ai(roots, b, i)) << a.str() << b.str() << i;
                }
            }
        }
    }
}

TEST(Genericity, Examples)
{
    auto roots = ij_roots();
    const auto report = genericity_check(roots);
    EXPECT_TRUE(report.generic());
    EXPECT_EQ(report.values_checked, 4u);

    RootSet<QuaternionRing> dup(H, {qi(), qi()});
    const auto bad = genericity_check(dup);
    ASSERT_FALSE(bad.generic());
    EXPECT_EQ(bad.issues.front().kind, GenericityIssue::Kind::duplicate_roots);
    EXPECT_THROW(x_Ai(dup, {1}, 2), GenericityFailure);
    EXPECT_THROW(factorize_all(dup, Q(1)), GenericityFailure);

    RootSet<RationalField> rat(F, {Rational(1), Rational(2)});
    EXPECT_TRUE(genericity_check(rat).generic());
    EXPECT_EQ(x_Ai(rat, {1}, 2), Rational(2));
    EXPECT_EQ(x_Ai(rat, {2}, 1), Rational(1));
}

TEST(Genericity, DuplicateRationalRoots)
{
    RootSet<RationalField> rat(F, {Rational(1), Rational(1), Rational(3)});
    const auto report = genericity_check(rat);
    ASSERT_FALSE(report.generic());
    EXPECT_EQ(report.issues.front().str(), "roots 1 and 2 coincide");
    bool coincident = false, undefined = false;
    for (const auto &issue : report.issues) {
        coincident |= issue.kind == GenericityIssue::Kind::coincident;
        undefined |= issue.kind == GenericityIssue::Kind::undefined;
    }
    EXPECT_TRUE(coincident);
    EXPECT_TRUE(undefined);
}

TEST(Factorize, QuaternionExample)
{
    auto roots = ij_roots();
    const auto set = factorize_all(roots, Q(1));
    EXPECT_EQ(set.polynomial, poly({1, 0, 1}));
    ASSERT_EQ(set.factorizations.size(), 2u);
    EXPECT_EQ(set.factorizations[0].ordering, (std::vector<int>{1, 2}));
    EXPECT_EQ(set.factorizations[0].factors, (std::vector<Q>{qi(), -qi()}));
    EXPECT_EQ(set.factorizations[1].factors, (std::vector<Q>{qj(), -qj()}));
}

TEST(Factorize, SingleRoot)
{
    RootSet<QuaternionRing> roots(H, {Q(1, 2, 3, 4)});
    const auto set = factorize_all(roots, Q(2));
    ASSERT_EQ(set.factorizations.size(), 1u);
    EXPECT_EQ(set.polynomial, poly({2, -Q(2, 4, 6, 8)}));
}

TEST(Factorize, RandomQuaternionRoots)
{
    Rng rng(33);
    for (int n : {3, 3, 3, 3, 4}) {
        auto roots = random_generic_roots(H, rng, n);
        const Q a0 = random_quaternion(rng) + Q(10);
        const auto set = factorize_all(roots, a0);
        ASSERT_EQ(static_cast<int>(set.factorizations.size()), n == 3 ? 6 : 24);
        for (const auto &f : set.factorizations) {
            ASSERT_EQ(f.expanded, set.polynomial);
            // P = Q (t - x_{i_1}) with zero remainder.
            ASSERT_TRUE(right_divide_linear(H, set.polynomial, f.factors.front()).remainder.is_zero());
            const auto c = vieta(roots, f.ordering);
            for (int m = 0; m <= n; ++m) {
                const Q sign = m % 2 ? Q(-1) : Q(1);
                ASSERT_EQ(set.polynomial.coeffs[static_cast<std::size_t>(m)], sign * a0 * c[static_cast<std::size_t>(m)]);
            }
        }
        for (int m = 1; m <= n; ++m) {
            ASSERT_TRUE(right_evaluate(H, set.polynomial, roots.root(m)).is_zero());
        }
    }
}

TEST(Factorize, RationalVietaIsElementarySymmetric)
{
    RootSet<RationalField> roots(F, {Rational(1), Rational(2), Rational(-3)});
    const auto c = vieta(roots, {3, 1, 2});
    EXPECT_EQ(c, (std::vector<Rational>{1, 0, -7, -6}));
    const auto set = factorize_all(roots, Rational(1));
    EXPECT_EQ(set.polynomial.coeffs, (std::vector<Rational>{1, 0, -7, 6}));
}

TEST(Factorize, SizeLimit)
{
    std::vector<Rational> xs;
    for (int i = 1; i <= 9; ++i) {
        xs.push_back(i);
    }
    RootSet<RationalField> roots(F, xs);
    EXPECT_THROW(factorize_all(roots, Rational(1)), ResourceLimit);
}

TEST(Vieta, Examples)
{
    auto roots = ij_roots();
    const auto c = vieta(roots, {1, 2});
    EXPECT_EQ(c[0], Q(1));
    EXPECT_TRUE(c[1].is_zero());
    EXPECT_EQ(c[2], Q(1));
    EXPECT_EQ(c, vieta(roots, {2, 1}));
}

TEST(Relations32, Examples)
{
    auto roots = ij_roots();
    const Q x12 = roots.x({1}, 2), x21 = roots.x({2}, 1);
    EXPECT_EQ(x12 + qi(), x21 + qj());
    EXPECT_EQ(x12 * qi(), x21 * qj());
    EXPECT_TRUE(verify_relations_32(roots).ok());
}

TEST(Relations32, RandomQuaternions)
{
    Rng rng(12);
    for (int n = 3; n <= 4; ++n) {
        auto roots = random_generic_roots(H, rng, n);
        const auto report = verify_relations_32(roots);
        EXPECT_TRUE(report.ok());
        EXPECT_GT(report.checked, 0u);
    }
}

TEST(Evaluate, Examples)
{
    auto roots = ij_roots();
    EXPECT_EQ(qn::evaluate(qn::GeneratorWord(qn::gen({}, 1, 2)), roots), qi());
    EXPECT_EQ(qn::evaluate(qn::GeneratorWord(qn::gen({1}, 2, 2)), roots), -qi());
    EXPECT_EQ(qn::evaluate(qn::QnElement(qn::SubsetString{{1, 2}}), roots), Q(0));
    EXPECT_EQ(qn::evaluate(qn::QnElement(Rational(3)), roots), Q(3));
}

TEST(Evaluate, NormalFormIsSound)
{
    Rng rng(101);
    qn::NormalizationContext ctx(3);
    auto roots = random_generic_roots(H, rng, 3);
    for (int t = 0; t < 60; ++t) {
        qn::GeneratorWord w;
        for (int term = 0; term < 2; ++term) {
            qn::Monomial m;
            const int len = static_cast<int>(rng.uniform(0, 4));
            for (int q = 0; q < len; ++q) {
                const int i = static_cast<int>(rng.uniform(1, 3));
                Subset a;
                for (int e = 1; e <= 3; ++e) {
                    if (e != i && rng.coin()) {
                        a = a.with(e);
                    }
                }
                m.push_back({a, i});
            }
            w.add_term(m, random_rational(rng));
        }
        ASSERT_EQ(qn::evaluate(w, roots), qn::evaluate(ctx.normalize(w), roots)) << w.str();
    }
}
