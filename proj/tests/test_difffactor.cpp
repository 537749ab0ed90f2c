#include <gtest/gtest.h>

#include "qnalg/difffactor.hpp"
#include "qnalg/ncfactor.hpp"

using namespace qnalg;
using qn::Subset;

namespace
{

const RatFuncField RF;
const MatRing M2{2};

RatFunc x() { return RatFunc::x(); }
RatFunc c(long v) { return RatFunc(Rational(v)); }
RatFunc pw(int e)
{
    RatFunc out = c(1);
    for (int k = 0; k < e; ++k) {
        out = out * x();
    }
    return out;
}

template <class C>
DiffOp<C> op(const C &ctx, std::vector<typename C::value_type> cs)
{
    return make_diffop(ctx, std::move(cs));
}

} // namespace

TEST(DiffOp, ComposeExamples)
{
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        EXPECT_EQ(diffop_compose(RF, first_order(RF, a), first_order(RF, b)),
                  op(RF, {c(1), -(a + b), a * b - b.derivative()}));
    }
    const RatFunc inv = c(1) / x();
    EXPECT_EQ(diffop_compose(RF, first_order(RF, inv), first_order(RF, inv)),
              op(RF, {c(1), c(-2) / x(), c(2) / pw(2)}));
    const auto l = op(RF, {c(1), x(), pw(3)});
    EXPECT_EQ(diffop_compose(RF, l, identity_op(RF)), l);
    EXPECT_EQ(diffop_compose(RF, identity_op(RF), l), l);
}

TEST(DiffOp, ComposeMatchesApplication)
{
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        std::vector<RatFunc> a, b;
        for (int k = 0; k < 3; ++k) {
            a.push_back(random_ratfunc(rng, 2, 1));
            b.push_back(random_ratfunc(rng, 2, 1));
        }
        const auto l = op(RF, a), m = op(RF, b);
        const RatFunc phi = random_ratfunc(rng);
        ASSERT_EQ(diffop_apply(RF, diffop_compose(RF, l, m), phi), diffop_apply(RF, l, diffop_apply(RF, m, phi)));
    }
    for (int t = 0; t < 5; ++t) {
        const auto l = op(M2, {random_matscalar(rng, 2), random_matscalar(rng, 2)});
        const auto m = op(M2, {random_matscalar(rng, 2), random_matscalar(rng, 2), random_matscalar(rng, 2)});
        const MatScalar phi = random_matscalar(rng, 2, 2);
        ASSERT_EQ(diffop_apply(M2, diffop_compose(M2, l, m), phi), diffop_apply(M2, l, diffop_apply(M2, m, phi)));
    }
}

TEST(DiffOp, CommutatorWithMultiplication)
{
    Rng rng(3);
    const DiffOp<MatRing> d{{M2.one(), M2.zero()}};
    for (int t = 0; t < 10; ++t) {
        const MatScalar a = random_matscalar(rng, 2);
        const DiffOp<MatRing> mult{{a}};
        const auto lhs = diffop_compose(M2, d, mult);
        const auto rhs = diffop_compose(M2, mult, d);
        ASSERT_EQ(lhs.coeffs.size(), 2u);
        ASSERT_EQ(lhs.coeffs[0], rhs.coeffs[0]);
        ASSERT_EQ(lhs.coeffs[1] - (rhs.coeffs.size() > 1 ? rhs.coeffs[1] : M2.zero()), a.derivative());
        const MatScalar phi = random_matscalar(rng, 2);
        ASSERT_EQ(diffop_apply(M2, lhs, phi) - diffop_apply(M2, rhs, phi), a.derivative() * phi);
    }
}

TEST(Up, Examples)
{
    Rng rng(4);
    const RatFunc g = random_ratfunc(rng);
    EXPECT_EQ(u_p(RF, g, 0), c(1));
    EXPECT_EQ(u_p(RF, g, 1), g);
    EXPECT_EQ(u_p(RF, g, 2), g.derivative() + g * g);
    EXPECT_THROW(u_p(RF, g, -1), Error);
}

TEST(Up, MatchesOperatorPower)
{
    Rng rng(5);
    for (int t = 0; t < 5; ++t) {
        const MatScalar g = random_matscalar(rng, 2);
        DiffOp<MatRing> power = identity_op(M2);
        for (int p = 0; p <= 4; ++p) {
            ASSERT_EQ(diffop_apply(M2, power, M2.one()), u_p(M2, g, p)) << p;
            power = diffop_compose(M2, first_order(M2, -g), power);
        }
    }
}

TEST(Theta, Examples)
{
    Rng rng(6);
    const RatFunc f1 = random_ratfunc(rng), f2 = random_ratfunc(rng);
    EXPECT_EQ(theta_qd(RF, {f1}), c(1));
    EXPECT_EQ(theta_qd(RF, {f1, f2}), f2 - f1);
    const QuaternionRing h;
    const Quaternion a{1, 2, 0, 0}, b{0, 0, 3, 1};
    EXPECT_EQ(theta_qd(h, {a, b}), b - a);
}

TEST(Theta, ZeroDerivationIsVandermonde)
{
    Rng rng(7);
    const ConstantsOf<MatRing> k{M2};
    for (std::size_t m = 1; m <= 4; ++m) {
        std::vector<MatScalar> ys;
        for (std::size_t s = 0; s < m; ++s) {
            ys.push_back(random_matscalar(rng, 2, 0));
        }
        ASSERT_EQ(theta_qd(k, ys), vandermonde_qd(k, std::span<const MatScalar>(ys))) << m;
    }
}

TEST(FAi, Examples)
{
    Rng rng(8);
    auto fs = random_generic_diff_roots(M2, rng, 2);
    EXPECT_EQ(f_Ai(fs, {}, 1), fs.f(1));
    const MatScalar f1 = fs.f(1), f2 = fs.f(2);
    const MatScalar d = f2 - f1, dinv = d.inverse();
    EXPECT_EQ(f_Ai(fs, {1}, 2), d * f2 * dinv + (f2.derivative() - f1.derivative()) * dinv);
    const MatScalar e = f1 - f2, einv = e.inverse();
    EXPECT_EQ(f_Ai(fs, {2}, 1), e * f1 * einv + (f1.derivative() - f2.derivative()) * einv);
}

TEST(FAi, ZeroDerivationGivesRootConjugates)
{
    Rng rng(9);
    const ConstantsOf<QuaternionRing> k{};
    for (int t = 0; t < 5; ++t) {
        auto roots = random_generic_roots(QuaternionRing{}, rng, 3);
        DiffRootSet<ConstantsOf<QuaternionRing>> fs(k, roots.roots());
        for (Subset a : qn::subsets_of(Subset::full(3))) {
            for (int i = 1; i <= 3; ++i) {
                if (!a.contains(i)) {
                    ASSERT_EQ(f_Ai(fs, a, i), x_Ai(roots, a, i));
                }
            }
        }
    }
}

TEST(FAi, IndependentOfListingOrder)
{
    Rng rng(10);
    auto fs = random_generic_diff_roots(M2, rng, 3);
    for (Subset a : qn::subsets_of(Subset::full(3))) {
        for (int i = 1; i <= 3; ++i) {
            if (a.contains(i)) {
                continue;
            }
            std::vector<int> order = a.elements();
            do {
                ASSERT_EQ(fs.compute(order, i), f_Ai(fs, a, i));
            } while (std::next_permutation(order.begin(), order.end()));
        }
    }
}

TEST(FAi, RelativeFormulas)
{
    Rng rng(11);
    auto fs = random_generic_diff_roots(M2, rng, 3);
    const Subset all = Subset::full(3);
    for (Subset a : qn::subsets_of(all)) {
        for (Subset b : qn::subsets_of(a)) {
            for (int i = 1; i <= 3; ++i) {
                if (a.contains(i)) {
                    continue;
                }
                ASSERT_EQ(f_relative_up(fs, b, a, i), f_Ai(fs, a, i)) << a.str() << b.str() << i;
                ASSERT_EQ(f_relative_down(fs, a, b, i), f_Ai(fs, b, i)) << a.str() << b.str() << i;
            }
        }
    }
}

TEST(FAi, RelativeFormulasWithZeroDerivation)
{
    Rng rng(12);
    auto roots = random_generic_roots(QuaternionRing{}, rng, 3);
    DiffRootSet<ConstantsOf<QuaternionRing>> fs({}, roots.roots());
    for (Subset a : qn::subsets_of(Subset::full(3))) {
        for (Subset b : qn::subsets_of(a)) {
            for (int i = 1; i <= 3; ++i) {
                if (!a.contains(i)) {
                    ASSERT_EQ(f_relative_up(fs, b, a, i), x_Ai_relative(roots, b, a, i));
                    ASSERT_EQ(f_relative_down(fs, a, b, i), x_Cj_relative_down(roots, a, b, i));
                }
            }
        }
    }
}

TEST(Wronskian, Examples)
{
    EXPECT_EQ(b_k(RF, {x()}, 1), c(1) / x());
    EXPECT_EQ(wronskian_qd(RF, {x(), pw(2)}, 2), x());
    EXPECT_EQ(b_k(RF, {x(), pw(2)}, 2), c(1) / x());
    EXPECT_TRUE(b_k(RF, {c(1)}, 1).is_zero());
    EXPECT_THROW(b_k(RF, {c(0)}, 1), GenericityFailure);
}

TEST(Wronskian, IndependentOfBasisWithinLevel)
{
    const std::vector<RatFunc> flag{x() + c(1), pw(2), pw(3) - x()};
    for (int k = 1; k <= 3; ++k) {
        std::vector<RatFunc> other = flag;
        other[static_cast<std::size_t>(k - 1)] = c(3) * other[static_cast<std::size_t>(k - 1)] + c(-2) * flag[0];
        if (k == 1) {
            other[0] = c(5) * flag[0];
        }
        ASSERT_EQ(b_k(RF, other, k), b_k(RF, flag, k)) << k;
    }
}

TEST(Miura, Examples)
{
    const auto one = miura_factorize(RF, {c(1)});
    EXPECT_EQ(one.op, op(RF, {c(1), c(0)}));
    const auto two = miura_factorize(RF, {x(), pw(2)});
    EXPECT_EQ(two.op, op(RF, {c(1), c(-2) / x(), c(2) / pw(2)}));
    const auto first = miura_factorize(RF, {x()});
    EXPECT_EQ(first.op, op(RF, {c(1), c(-1) / x()}));
}

TEST(Miura, AnnihilatesFlag)
{
    const std::vector<std::vector<RatFunc>> flags{
        {x()},
        {x(), pw(2)},
        {x(), pw(2), pw(3)},
        {c(1) + x(), pw(2) - c(3), pw(3) + x(), pw(4)},
        {c(1) / (x() + c(1)), x(), pw(2) + c(1) / x()},
    };
    for (const auto &flag : flags) {
        const auto m = miura_factorize(RF, flag);
        ASSERT_EQ(m.op.order(), static_cast<int>(flag.size()));
        ASSERT_EQ(m.op.coeffs.front(), c(1));
        for (const RatFunc &phi : flag) {
            ASSERT_TRUE(diffop_apply(RF, m.op, phi).is_zero());
        }
    }
}

TEST(Miura, FlagPairIdentities)
{
    const std::vector<RatFunc> flag{c(1) + x(), pw(2) - c(3), pw(3) + x(), pw(4)};
    for (int k = 0; k + 2 <= 4; ++k) {
        std::vector<RatFunc> swapped = flag;
        std::swap(swapped[static_cast<std::size_t>(k)], swapped[static_cast<std::size_t>(k + 1)]);
        // F2 differs from F1 only at level k + 1.
        const auto report = verify_prop_412(RF, flag, swapped, k);
        EXPECT_TRUE(report.ok()) << k;
        std::vector<RatFunc> mixed = swapped;
        mixed[static_cast<std::size_t>(k)] = swapped[static_cast<std::size_t>(k)] + c(2) * flag[static_cast<std::size_t>(k)];
        EXPECT_TRUE(verify_prop_412(RF, flag, mixed, k).ok()) << k;
    }
}

// Pairing b_{k+2}(F1) with b_{k+1}(F2) on the right-hand side does not hold.
TEST(Miura, MixedFlagProductFails)
{
    const std::vector<RatFunc> f1{x(), pw(2) + c(1)};
    const std::vector<RatFunc> f2{pw(2) + c(1), x()};
    const RatFunc a1 = b_k(RF, f1, 1), a2 = b_k(RF, f1, 2), c1 = b_k(RF, f2, 1);
    EXPECT_NE(a2 * a1 - a1.derivative(), a2 * c1 - c1.derivative());
}

// Logarithmic derivatives of a solution basis give the Miura operator.
TEST(Miura, AgreesWithRootFactorization)
{
    const std::vector<RatFunc> flag{x(), pw(2) + c(1), pw(3)};
    std::vector<RatFunc> fs_values;
    for (const RatFunc &phi : flag) {
        fs_values.push_back(phi.derivative() / phi);
    }
    DiffRootSet<RatFuncField> fs(RF, fs_values);
    EXPECT_EQ(factorize_all_diff(fs).op, miura_factorize(RF, flag).op);
}

TEST(DiffFactorize, SingleRoot)
{
    Rng rng(13);
    auto fs = random_generic_diff_roots(M2, rng, 1);
    const auto set = factorize_all_diff(fs);
    EXPECT_EQ(set.op, first_order(M2, fs.f(1)));
}

TEST(DiffFactorize, MatrixOrderingsAgree)
{
    Rng rng(14);
    for (int n : {2, 2, 3}) {
        auto fs = random_generic_diff_roots(M2, rng, n);
        const auto set = factorize_all_diff(fs);
        ASSERT_EQ(static_cast<int>(set.factorizations.size()), n == 2 ? 2 : 6);
        ASSERT_EQ(set.op.order(), n);
        const auto report = verify_relations_43(fs);
        EXPECT_TRUE(report.ok());
        EXPECT_GT(report.checked, 0u);
    }
}

TEST(DiffFactorize, ZeroDerivationMatchesPolynomialCase)
{
    Rng rng(15);
    auto roots = random_generic_roots(QuaternionRing{}, rng, 3);
    DiffRootSet<ConstantsOf<QuaternionRing>> fs({}, roots.roots());
    const auto diff = factorize_all_diff(fs);
    const auto poly = factorize_all(roots, Quaternion(1));
    EXPECT_EQ(diff.op.coeffs, poly.polynomial.coeffs);
}

TEST(DiffRelations, Examples)
{
    Rng rng(16);
    auto fs = random_generic_diff_roots(M2, rng, 2);
    const MatScalar f12 = fs.value({1}, 2), f21 = fs.value({2}, 1), f1 = fs.f(1), f2 = fs.f(2);
    EXPECT_EQ(f12 + f1, f21 + f2);
    EXPECT_EQ(f12 * f1 - f1.derivative(), f21 * f2 - f2.derivative());
}
