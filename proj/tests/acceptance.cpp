// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
// Usage: acceptance <path-to-qn>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qnalg/difffactor.hpp"
#include "qnalg/ncfactor.hpp"
#include "qnalg/qn/evaluate.hpp"
#include "qnalg/qn/maps.hpp"
#include "qnalg/qn/normalizer.hpp"
#include "qnalg/qn/relations.hpp"
#include "qnalg/qn/specialize.hpp"
#include "qnalg/quasidet.hpp"

using namespace qnalg;
using namespace qnalg::qn;

namespace
{

std::vector<Permutation> all_permutations(int n)
{
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct Verdict
{
    bool pass;
    std::string detail;
};

Verdict ac1_relations()
{
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first;
    for (int n = 1; n <= 4; ++n) {
        NormalizationContext ctx(n);
        checked += relation_suite(n).size();
        for (const auto &f : verify_relation_suite(ctx)) {
            if (failed++ == 0) {
                first = " first: n=" + std::to_string(n) + " " + f.family + " " + f.label;
            }
        }
    }
    return {failed == 0, std::to_string(checked) + " instances, " + std::to_string(failed) + " nonzero" + first};
}

Verdict ac2_soundness()
{
    Rng rng(2024);
    const int n = 3;
    NormalizationContext ctx(n);
    auto roots = random_generic_roots(QuaternionRing{}, rng, n);
    int agree = 0;
    for (int t = 0; t < 200; ++t) {
        Monomial m;
        const int len = static_cast<int>(rng.uniform(1, 4));
        for (int q = 0; q < len; ++q) {
            const int i = static_cast<int>(rng.uniform(1, n));
            Subset a;
            for (int e = 1; e <= n; ++e) {
                if (e != i && rng.coin()) {
                    a = a.with(e);
                }
            }
            m.push_back({a, i});
        }
        const GeneratorWord w(m, random_rational(rng));
        if (evaluate(w, roots) == evaluate(ctx.normalize(w), roots)) {
            ++agree;
        }
    }
    return {agree == 200, std::to_string(agree) + "/200 words agree"};
}

Verdict ac3_basis()
{
    std::size_t strings = 0;
    std::string bad;
    for (int n = 1; n <= 4 && bad.empty(); ++n) {
        NormalizationContext ctx(n);
        const auto y = enumerate_standard(n, 6);
        const auto yp = enumerate_reduced(n, 6);
        std::array<int, 7> cy{}, cyp{};
        for (const auto &s : y) {
            ++cy[static_cast<std::size_t>(degree(s))];
        }
        for (const auto &s : yp) {
            ++cyp[static_cast<std::size_t>(degree(s))];
            if (!(ctx.from_string(s) == QnElement(s))) {
                bad = "not fixed: n=" + std::to_string(n) + " " + str(s);
                break;
            }
        }
        if (bad.empty() && cy != cyp) {
            bad = "degree counts differ at n=" + std::to_string(n);
        }
        strings += yp.size();
    }
    return {bad.empty(), bad.empty() ? std::to_string(strings) + " reduced strings, counts match per degree" : bad};
}

Verdict ac4_symmetric()
{
    std::size_t checks = 0;
    for (int n = 1; n <= 4; ++n) {
        NormalizationContext ctx(n);
        const Subset all = Subset::full(n);
        const auto perms = all_permutations(n);
        for (int k = 0; k <= n; ++k) {
            const QnElement lam = lambda_k(all, k, ctx);
            const std::string where = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
            if (!(lam == lambda_k(all, k, ctx, LambdaMethod::closed_form))) {
                return {false, "recursion != closed form" + where};
            }
            for (const auto &p : perms) {
                ++checks;
                if (!(apply_permutation(p, lam, ctx) == lam)) {
                    return {false, "not permutation invariant" + where};
                }
            }
            if (k >= 1 && !(derivation(lam, ctx) == lambda_k(all, k - 1, ctx).scaled(n - k + 1))) {
                return {false, "derivation identity fails" + where};
            }
            if (!(antiautomorphism(lam, ctx) == lam)) {
                return {false, "not fixed by the antiautomorphism" + where};
            }
            if (!(specialize_psi(lam, n) == elementary_symmetric(n, k))) {
                return {false, "psi image is not elementary" + where};
            }
            checks += 4;
        }
    }
    return {true, std::to_string(checks) + " identities"};
}

Verdict ac5_factorizations()
{
    const QuaternionRing h;
    Rng rng(55);
    int sets = 0;
    std::size_t expansions = 0;
    for (auto [n, count] : {std::pair{3, 50}, std::pair{4, 5}}) {
        for (int t = 0; t < count; ++t) {
            auto roots = random_generic_roots(h, rng, n);
            FactorizationSet<QuaternionRing> set;
            try {
                set = factorize_all(roots, h.one());
            } catch (const ConsistencyViolation &e) {
                return {false, std::string("n=") + std::to_string(n) + ": " + e.what()};
            }
            expansions += set.factorizations.size();
            for (const auto &x : roots.roots()) {
                if (!h.is_zero(right_divide_linear(h, set.polynomial, x).remainder)) {
                    return {false, "nonzero remainder for a declared root, n=" + std::to_string(n)};
                }
            }
            for (const auto &f : set.factorizations) {
                const auto c = vieta(roots, f.ordering);
                for (std::size_t m = 0; m < c.size(); ++m) {
                    if (!(set.polynomial.coeffs[m] == (m % 2 ? -c[m] : c[m]))) {
                        return {false, "Vieta mismatch, n=" + std::to_string(n)};
                    }
                }
            }
            ++sets;
        }
    }
    return {true, std::to_string(sets) + " root sets, " + std::to_string(expansions) + " identical expansions"};
}

Verdict ac6_relative()
{
    Rng rng(66);
    std::size_t checks = 0;
    for (int n = 2; n <= 4; ++n) {
        auto roots = random_generic_roots(QuaternionRing{}, rng, n);
        for (Subset a : subsets_of(Subset::full(n))) {
            for (Subset b : subsets_of(a)) {
                for (int i = 1; i <= n; ++i) {
                    if (a.contains(i)) {
                        continue;
                    }
                    checks += 2;
                    if (!(x_Ai_relative(roots, b, a, i) == x_Ai(roots, a, i)) ||
                        !(x_Cj_relative_down(roots, a, b, i) == x_Ai(roots, b, i))) {
                        return {false, "chain " + b.str() + " in " + a.str() + ", i=" + std::to_string(i)};
                    }
                }
            }
        }
    }
    return {true, std::to_string(checks) + " chain comparisons"};
}

Verdict ac7_differential()
{
    const RatFuncField rf;
    const MatRing m2{2};
    Rng rng(77);
    for (int t = 0; t < 5; ++t) {
        const RatFunc g = random_ratfunc(rng);
        if (!(u_p(rf, g, 2) == g.derivative() + g * g)) {
            return {false, "u_2 mismatch"};
        }
    }
    const ConstantsOf<MatRing> k{m2};
    for (std::size_t m = 1; m <= 4; ++m) {
        std::vector<MatScalar> ys;
        for (std::size_t s = 0; s < m; ++s) {
            ys.push_back(random_matscalar(rng, 2, 0));
        }
        if (!(theta_qd(k, ys) == vandermonde_qd(k, std::span<const MatScalar>(ys)))) {
            return {false, "theta quasideterminant differs from Vandermonde at size " + std::to_string(m)};
        }
    }
    const RatFunc x = RatFunc::x();
    const std::vector<std::vector<RatFunc>> flags{{x}, {x, x * x}, {x, x * x, x * x * x}};
    for (const auto &flag : flags) {
        const auto mi = miura_factorize(rf, flag);
        for (const auto &phi : flag) {
            if (!rf.is_zero(diffop_apply(rf, mi.op, phi))) {
                return {false, "Miura operator misses a flag element"};
            }
        }
    }
    std::size_t relations = 0;
    for (int t = 0; t < 20; ++t) {
        const int n = t % 2 ? 3 : 2;
        auto fs = random_generic_diff_roots(m2, rng, n);
        const auto rep = verify_relations_43(fs);
        if (!rep.ok()) {
            return {false, "case " + std::to_string(t) + ": " + rep.failures.front().relation};
        }
        relations += rep.checked;
        try {
            factorize_all_diff(fs);
        } catch (const ConsistencyViolation &e) {
            return {false, "case " + std::to_string(t) + ": " + e.what()};
        }
    }
    return {true, "20 matrix cases, " + std::to_string(relations) + " relation checks, orderings agree"};
}

Verdict ac8_structural()
{
    std::size_t checks = 0;
    for (int n = 2; n <= 4; ++n) {
        NormalizationContext ctx(n);
        const Subset all = Subset::full(n);
        for (Subset a : subsets_of(all)) {
            for (Subset b : subsets_of(all - a)) {
                if (b.size() < 2) {
                    continue;
                }
                const QnElement zab = z_AB(a, b, ctx);
                const QnElement sign = z_AB(all - (a | b), b, ctx).scaled(b.size() % 2 ? 1 : -1);
                const std::string where = " at " + a.str() + "," + b.str();
                if (!specialize_psi(zab, n).is_zero()) {
                    return {false, "psi nonzero" + where};
                }
                if (!derivation(zab, ctx).is_zero()) {
                    return {false, "derivation nonzero" + where};
                }
                if (!(antiautomorphism(zab, ctx) == sign)) {
                    return {false, "antiautomorphism sign formula fails" + where};
                }
                checks += 3;
            }
        }
    }
    return {true, std::to_string(checks) + " identities"};
}

Verdict ac9_rs()
{
    for (int n = 2; n <= 3; ++n) {
        NormalizationContext ctx(n);
        const auto failures = rs_commutator_failures(ctx);
        if (!failures.empty()) {
            return {false, "n=" + std::to_string(n) + ": " + failures.front()};
        }
    }
    return {true, "RS = SR for n = 2, 3"};
}

struct Captured
{
    int code;
    std::string out;
};

Captured shell(const std::string &cmd)
{
    Captured c{-1, {}};
    FILE *p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) {
        return c;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) {
        c.out.append(buf.data(), got);
    }
    const int status = pclose(p);
    c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return c;
}

Verdict ac10_cli(const std::string &qn)
{
    if (qn.empty()) {
        return {false, "path to qn not given"};
    }
    const std::string q = "'" + qn + "' ";
    const std::vector<std::pair<std::string, int>> corpus = {
        {"normalize --n 2 'z{1},{2}*z{},{1} - z{2},{1}*z{},{2}'", 0},
        {"factor-roots --ring quat --roots 'i;j' --format json", 0},
        {"enumerate-basis --n 2 --max-degree 2 --variant reduced", 0},
        {"verify-relations --n 3 --format json", 0},
        {"evaluate --ring quat --n 3 --seed 7 'L(2,{1,2,3})'", 0},
        {"diff-factor --ring mat --n 2 --seed 3 --format json", 0},
        {"equal 'r{1}' 'r{2}'", 1},
        {"normalize 'z{1},{1}'", 2},
        {"frobnicate", 2},
        {"check-rs --n 4", 2},
        {"factor-roots --ring quat --roots 'i;i'", 3},
        {"diff-factor --ring ratfunc --roots 'x;x'", 3},
    };
    int ok = 0;
    std::string first;
    for (const auto &[args, expected] : corpus) {
        const Captured a = shell(q + args);
        const Captured b = shell(q + args);
        const bool good = a.code == expected && b.code == a.code && a.out == b.out;
        if (good) {
            ++ok;
        } else if (first.empty()) {
            first = "; first failure: `" + args + "` exit " + std::to_string(a.code) + " expected " +
                    std::to_string(expected) + (a.out == b.out ? "" : ", output differs between runs");
        }
    }
    if (shell(q + "normalize --n 2 'z{1},{2}*z{},{1} - z{2},{1}*z{},{2}'").out != "0\n") {
        return {false, "normalize example does not print 0"};
    }
    return {ok == static_cast<int>(corpus.size()),
            std::to_string(ok) + "/" + std::to_string(corpus.size()) + " cases with expected exit and identical reruns" +
                first};
}

} // namespace

int main(int argc, char **argv)
{
    const std::string qn = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"AC1 relation suite n<=4", ac1_relations},
        {"AC2 normal-form soundness", ac2_soundness},
        {"AC3 basis counting", ac3_basis},
        {"AC4 symmetric functions", ac4_symmetric},
        {"AC5 n! factorizations", ac5_factorizations},
        {"AC6 relative formulas", ac6_relative},
        {"AC7 differential suite", ac7_differential},
        {"AC8 structural maps", ac8_structural},
        {"AC9 R/S commutation", ac9_rs},
        {"AC10 CLI determinism and exit codes", [&] { return ac10_cli(qn); }},
    };
    int failures = 0;
    for (const auto &[name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += v.pass ? 0 : 1;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        const std::size_t cut = name.find(' ');
        line << name.substr(0, cut) << (v.pass ? " PASS" : " FAIL") << name.substr(cut) << " [tolerance: exact] " << v.detail << " (" << secs << " s)";
        std::cout << line.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
