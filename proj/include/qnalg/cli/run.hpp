#ifndef QNALG_CLI_RUN_HPP
#define QNALG_CLI_RUN_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "../context.hpp"
#include "../difffactor.hpp"
#include "../errors.hpp"
#include "../ncfactor.hpp"
#include "../qn/evaluate.hpp"
#include "../qn/maps.hpp"
#include "../qn/normalizer.hpp"
#include "../qn/relations.hpp"
#include "../qn/specialize.hpp"
#include "../qn/string.hpp"
#include "expr.hpp"
#include "scalar_io.hpp"

namespace qnalg::cli
{

using Json = nlohmann::ordered_json;

class UsageError : public Error
{
public:
    using Error::Error;
};

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kNotGeneric = 3 };

struct Command
{
    std::string name;
    std::vector<std::string> args;
    std::optional<int> n;
    std::optional<std::uint64_t> seed;
    std::string format = "text";
    std::optional<std::string> ring;
    std::optional<std::string> roots;
    std::optional<int> max_degree;
    std::optional<std::string> variant;
    std::optional<int> k;
    std::optional<std::string> out;
};

struct CommandInfo
{
    std::string name;
    std::string summary;
    std::size_t min_args;
    std::size_t max_args;
    std::set<std::string> flags;
    std::vector<std::string> variants; // first entry is the default
};

inline const std::vector<CommandInfo> &command_infos()
{
    static const std::vector<CommandInfo> infos = {
        {"normalize", "normal form of an expression in Q_n", 1, 1, {"n"}, {}},
        {"equal", "whether two expressions agree in Q_n", 2, 2, {"n"}, {}},
        {"symfun", "the functions L(k,{1..n}) and their commutative images", 0, 0, {"n", "k", "variant"},
         {"recursion", "closed-form"}},
        {"specialize", "commutative image of an expression", 1, 1, {"n", "variant"}, {"psi", "phi"}},
        {"evaluate", "value of an expression at roots", 1, 1, {"n", "seed", "ring", "roots"}, {}},
        {"enumerate-basis", "basis strings up to a degree", 0, 0, {"n", "max-degree", "variant"},
         {"reduced", "standard"}},
        {"factor-roots", "all factorizations of the polynomial with given roots", 0, 0,
         {"n", "seed", "ring", "roots"}, {}},
        {"vieta", "elementary sums of the factors against the expansion", 0, 1, {"n", "seed", "ring", "roots"}, {}},
        {"verify-relations", "relation checks", 0, 0, {"n", "seed", "ring", "roots", "variant"},
         {"symbolic", "roots", "diff"}},
        {"diff-factor", "all factorizations of the operator with given differential roots", 0, 0,
         {"n", "seed", "ring", "roots"}, {}},
        {"miura", "operator annihilating a flag of functions", 0, 0, {"ring", "roots"}, {}},
        {"check-rs", "commutation of the R and S matrices", 0, 0, {"n"}, {}},
    };
    return infos;
}

inline const CommandInfo &command_info(const std::string &name)
{
    for (const auto &s : command_infos()) {
        if (s.name == name) {
            return s;
        }
    }
    throw UsageError("unknown command '" + name + "'");
}

inline void validate(const Command &cmd)
{
    const CommandInfo &info = command_info(cmd.name);
    if (cmd.args.size() < info.min_args || cmd.args.size() > info.max_args) {
        throw UsageError(cmd.name + " takes " +
                         (info.min_args == info.max_args ? std::to_string(info.min_args)
                                                         : std::to_string(info.min_args) + " to " +
                                                               std::to_string(info.max_args)) +
                         " positional argument(s), got " + std::to_string(cmd.args.size()));
    }
    auto allowed = [&](const std::string &flag, bool given) {
        if (given && !info.flags.contains(flag)) {
            throw UsageError("--" + flag + " does not apply to " + cmd.name);
        }
    };
    allowed("n", cmd.n.has_value());
    allowed("seed", cmd.seed.has_value());
    allowed("ring", cmd.ring.has_value());
    allowed("roots", cmd.roots.has_value());
    allowed("max-degree", cmd.max_degree.has_value());
    allowed("variant", cmd.variant.has_value());
    allowed("k", cmd.k.has_value());
    if (cmd.format != "text" && cmd.format != "json") {
        throw UsageError("--format must be text or json");
    }
    if (cmd.ring && *cmd.ring != "rat" && *cmd.ring != "quat" && *cmd.ring != "ratfunc" && *cmd.ring != "mat") {
        throw UsageError("--ring must be rat, quat, ratfunc or mat");
    }
    if (cmd.variant && std::find(info.variants.begin(), info.variants.end(), *cmd.variant) == info.variants.end()) {
        std::string list;
        for (const auto &v : info.variants) {
            list += (list.empty() ? "" : ", ") + v;
        }
        throw UsageError("--variant for " + cmd.name + " must be one of: " + list);
    }
    if (cmd.n && (*cmd.n < 1 || *cmd.n > qn::kMaxN)) {
        throw UsageError("--n must lie in 1.." + std::to_string(qn::kMaxN));
    }
    if (cmd.max_degree && *cmd.max_degree < 0) {
        throw UsageError("--max-degree must be nonnegative");
    }
    if (cmd.k && *cmd.k < 0) {
        throw UsageError("--k must be nonnegative");
    }
    const bool needs_n = cmd.name == "symfun" || cmd.name == "enumerate-basis" || cmd.name == "check-rs" ||
                         (cmd.name == "verify-relations" && cmd.variant.value_or("symbolic") == "symbolic");
    if (needs_n && !cmd.n) {
        throw UsageError(cmd.name + " needs --n");
    }
    if (cmd.name == "verify-relations" && cmd.variant.value_or("symbolic") == "symbolic" &&
        (cmd.ring || cmd.roots || cmd.seed)) {
        throw UsageError("symbolic relation checks take no --ring, --roots or --seed");
    }
    if (cmd.name == "miura" && !cmd.roots) {
        throw UsageError("miura needs --roots");
    }
    if (cmd.roots && cmd.seed) {
        throw UsageError("--seed and --roots are exclusive");
    }
}

inline std::string variant_of(const Command &cmd)
{
    return cmd.variant ? *cmd.variant : command_info(cmd.name).variants.front();
}

// ---- output ----

struct Report
{
    Json json = Json::object();
    std::vector<std::string> text;
    int code = kOk;
};

template <DivisionContext C>
Json render_list(const C &ctx, const std::vector<typename C::value_type> &xs)
{
    Json out = Json::array();
    for (const auto &x : xs) {
        out.push_back(ctx.render(x));
    }
    return out;
}

template <DivisionContext C>
std::string join_rendered(const C &ctx, const std::vector<typename C::value_type> &xs)
{
    std::string out;
    for (const auto &x : xs) {
        out += (out.empty() ? "" : "; ") + ctx.render(x);
    }
    return out;
}

inline std::string join_ints(const std::vector<int> &xs)
{
    std::string out;
    for (int x : xs) {
        out += (out.empty() ? "" : ",") + std::to_string(x);
    }
    return out;
}

inline Json element_json(const qn::QnElement &x)
{
    Json terms = Json::array();
    for (const auto &[s, c] : x.terms()) {
        terms.push_back({{"string", qn::str(s)}, {"coefficient", c.get_str()}});
    }
    return terms;
}

// ---- helpers ----

struct Parsed
{
    NodePtr ast;
    int n;
    qn::GeneratorWord word;
};

inline Parsed parse_for(const std::string &text, std::optional<int> n)
{
    NodePtr ast = parse_expression(text);
    const int need = std::max(required_n(*ast), 1);
    const int use = n.value_or(need);
    return {ast, use, lower(*ast, use)};
}

template <class F>
decltype(auto) with_ring(const std::string &ring, F &&f)
{
    if (ring == "rat") {
        return f(RationalField{});
    }
    if (ring == "ratfunc") {
        return f(RatFuncField{});
    }
    if (ring == "mat") {
        return f(MatRing{});
    }
    return f(QuaternionRing{});
}

inline Rng seeded(const Command &cmd, std::ostream &err)
{
    if (!cmd.seed) {
        err << "notice: no --seed given, using seed 0\n";
    }
    return Rng(cmd.seed.value_or(0));
}

template <DivisionContext C>
std::vector<typename C::value_type> explicit_roots(const C &ctx, const Command &cmd)
{
    auto xs = parse_scalar_list(ctx, *cmd.roots);
    if (cmd.n && static_cast<int>(xs.size()) != *cmd.n) {
        throw UsageError("--n is " + std::to_string(*cmd.n) + " but " + std::to_string(xs.size()) +
                         " roots were given");
    }
    return xs;
}

template <DivisionContext C>
RootSet<C> obtain_roots(const C &ctx, const Command &cmd, int default_n, std::ostream &err)
{
    if (cmd.roots) {
        return RootSet<C>(ctx, explicit_roots(ctx, cmd));
    }
    Rng rng = seeded(cmd, err);
    return random_generic_roots(ctx, rng, cmd.n.value_or(default_n));
}

template <DivisionContext C>
DiffRootSet<C> obtain_diff_roots(const C &ctx, const Command &cmd, int default_n, std::ostream &err)
{
    if (cmd.roots) {
        return DiffRootSet<C>(ctx, explicit_roots(ctx, cmd));
    }
    Rng rng = seeded(cmd, err);
    return random_generic_diff_roots(ctx, rng, cmd.n.value_or(default_n));
}

inline void header(Report &r, const Command &cmd)
{
    r.json["command"] = cmd.name;
}

template <DivisionContext C>
void ring_header(Report &r, const C &ctx, const std::string &ring, const std::vector<typename C::value_type> &roots)
{
    r.json["ring"] = ring;
    r.json["roots"] = render_list(ctx, roots);
    r.text.push_back("roots: " + join_rendered(ctx, roots));
}

// ---- commands ----

inline void cmd_normalize(const Command &cmd, Report &r)
{
    const Parsed p = parse_for(cmd.args[0], cmd.n);
    qn::NormalizationContext ctx(p.n);
    const qn::QnElement x = ctx.normalize(p.word);
    r.json["n"] = p.n;
    r.json["input"] = render(*p.ast);
    r.json["result"] = x.str();
    r.json["terms"] = element_json(x);
    r.text.push_back(x.str());
}

inline void cmd_equal(const Command &cmd, Report &r)
{
    const Parsed a = parse_for(cmd.args[0], cmd.n);
    const Parsed b = parse_for(cmd.args[1], cmd.n);
    const int n = cmd.n.value_or(std::max(a.n, b.n));
    qn::NormalizationContext ctx(n);
    const qn::QnElement x = ctx.normalize(lower(*a.ast, n));
    const qn::QnElement y = ctx.normalize(lower(*b.ast, n));
    const bool eq = x == y;
    r.json["n"] = n;
    r.json["left"] = x.str();
    r.json["right"] = y.str();
    r.json["equal"] = eq;
    r.text.push_back(eq ? "true" : "false");
    r.code = eq ? kOk : kVerificationFailed;
}

inline void cmd_symfun(const Command &cmd, Report &r)
{
    const int n = *cmd.n;
    const auto method = variant_of(cmd) == "closed-form" ? qn::LambdaMethod::closed_form : qn::LambdaMethod::recursion;
    qn::NormalizationContext ctx(n);
    const Subset full = Subset::full(n);
    int lo = 0;
    int hi = n;
    if (cmd.k) {
        if (*cmd.k > n) {
            throw UsageError("--k must not exceed --n");
        }
        lo = hi = *cmd.k;
    }
    r.json["n"] = n;
    r.json["method"] = variant_of(cmd);
    Json fns = Json::array();
    bool all_match = true;
    for (int k = lo; k <= hi; ++k) {
        const qn::QnElement x = qn::lambda_k(full, k, ctx, method);
        const qn::CommPoly psi = qn::specialize_psi(x, n);
        const bool match = psi == qn::elementary_symmetric(n, k);
        all_match = all_match && match;
        fns.push_back({{"k", k}, {"element", x.str()}, {"psi", psi.str()}, {"psi_is_elementary", match}});
        r.text.push_back("L(" + std::to_string(k) + "," + full.str() + ") = " + x.str());
        r.text.push_back("  psi: " + psi.str() + (match ? "" : "  (differs from e_" + std::to_string(k) + ")"));
    }
    r.json["functions"] = fns;
    r.code = all_match ? kOk : kVerificationFailed;
}

inline void cmd_specialize(const Command &cmd, Report &r)
{
    const Parsed p = parse_for(cmd.args[0], cmd.n);
    const std::string map = variant_of(cmd);
    const std::string image =
        map == "psi" ? qn::specialize_psi(p.word, p.n).str() : qn::specialize_phi(p.word).str();
    r.json["n"] = p.n;
    r.json["map"] = map;
    r.json["input"] = render(*p.ast);
    r.json["result"] = image;
    r.text.push_back(image);
}

inline void cmd_evaluate(const Command &cmd, Report &r, std::ostream &err)
{
    const std::string ring = cmd.ring.value_or("quat");
    with_ring(ring, [&](const auto &ctx) {
        NodePtr ast = parse_expression(cmd.args[0]);
        auto roots = obtain_roots(ctx, cmd, std::max(required_n(*ast), 1), err);
        require_generic(roots);
        const qn::GeneratorWord w = lower(*ast, roots.n());
        qn::NormalizationContext nctx(roots.n());
        const qn::QnElement x = nctx.normalize(w);
        const auto direct = qn::evaluate(w, roots);
        const auto via_normal = qn::evaluate(x, roots);
        const bool agree = direct == via_normal;
        ring_header(r, ctx, ring, roots.roots());
        r.json["input"] = render(*ast);
        r.json["value"] = ctx.render(direct);
        r.json["normal_form"] = x.str();
        r.json["normal_form_value"] = ctx.render(via_normal);
        r.json["agree"] = agree;
        r.text.push_back("value: " + ctx.render(direct));
        r.text.push_back("normal form: " + x.str());
        r.text.push_back("normal form value: " + ctx.render(via_normal));
        r.code = agree ? kOk : kVerificationFailed;
    });
}

inline void cmd_enumerate(const Command &cmd, Report &r)
{
    const int n = *cmd.n;
    const int d = cmd.max_degree.value_or(2);
    const std::string v = variant_of(cmd);
    const auto strings =
        qn::enumerate_basis(n, d, v == "standard" ? qn::BasisVariant::standard : qn::BasisVariant::reduced);
    r.json["n"] = n;
    r.json["max_degree"] = d;
    r.json["variant"] = v;
    r.json["count"] = strings.size();
    Json list = Json::array();
    for (const auto &s : strings) {
        list.push_back(qn::str(s));
        r.text.push_back(qn::str(s));
    }
    r.json["strings"] = list;
}

template <DivisionContext C>
Json coefficient_json(const C &ctx, const OrePoly<C> &p)
{
    return render_list(ctx, p.coeffs);
}

inline void cmd_factor_roots(const Command &cmd, Report &r, std::ostream &err)
{
    const std::string ring = cmd.ring.value_or("quat");
    with_ring(ring, [&](const auto &ctx) {
        auto roots = obtain_roots(ctx, cmd, 3, err);
        const auto set = factorize_all(roots, ctx.one());
        ring_header(r, ctx, ring, roots.roots());
        r.json["polynomial"] = render_poly(ctx, set.polynomial);
        r.json["coefficients"] = coefficient_json(ctx, set.polynomial);
        r.text.push_back("polynomial: " + render_poly(ctx, set.polynomial));
        r.text.push_back("coefficients: " + join_rendered(ctx, set.polynomial.coeffs));
        bool remainders_zero = true;
        Json rems = Json::array();
        for (const auto &x : roots.roots()) {
            const bool zero = right_divide_linear(ctx, set.polynomial, x).remainder == ctx.zero();
            remainders_zero = remainders_zero && zero;
            rems.push_back(zero);
        }
        Json facs = Json::array();
        for (const auto &f : set.factorizations) {
            facs.push_back({{"ordering", f.ordering}, {"factors", render_list(ctx, f.factors)}});
            r.text.push_back("ordering " + join_ints(f.ordering) + ": " + join_rendered(ctx, f.factors));
        }
        r.json["factorizations"] = facs;
        r.json["root_remainders_zero"] = rems;
        if (!remainders_zero) {
            r.text.push_back("some root leaves a nonzero remainder");
        }
        r.code = remainders_zero ? kOk : kVerificationFailed;
    });
}

inline std::vector<int> parse_ordering(const std::string &text, int n)
{
    std::vector<int> out;
    std::size_t p = 0;
    while (p <= text.size()) {
        const std::size_t q = std::min(text.find(',', p), text.size());
        const std::string item = text.substr(p, q - p);
        if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos || item.size() > 3) {
            throw ParseError("ordering entries must be integers", p, {"integer"});
        }
        out.push_back(std::stoi(item));
        p = q + 1;
    }
    std::vector<int> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
        if (sorted[static_cast<std::size_t>(i)] != i + 1) {
            throw UsageError("ordering must be a permutation of 1.." + std::to_string(n));
        }
    }
    if (static_cast<int>(out.size()) != n) {
        throw UsageError("ordering must list " + std::to_string(n) + " indices");
    }
    return out;
}

inline void cmd_vieta(const Command &cmd, Report &r, std::ostream &err)
{
    const std::string ring = cmd.ring.value_or("quat");
    with_ring(ring, [&](const auto &ctx) {
        auto roots = obtain_roots(ctx, cmd, 3, err);
        require_generic(roots);
        const int n = roots.n();
        std::vector<int> ordering(static_cast<std::size_t>(n));
        std::iota(ordering.begin(), ordering.end(), 1);
        if (!cmd.args.empty()) {
            ordering = parse_ordering(cmd.args[0], n);
        }
        const auto c = vieta(roots, ordering);
        const auto f = factorize(roots, ordering, ctx.one());
        // a_m = (-1)^m c_m; coefficients are stored highest degree first.
        bool agree = f.expanded.coeffs.size() == c.size();
        for (std::size_t m = 0; agree && m < c.size(); ++m) {
            const auto expected = m % 2 ? -c[m] : c[m];
            agree = f.expanded.coeffs[m] == expected;
        }
        ring_header(r, ctx, ring, roots.roots());
        r.json["ordering"] = ordering;
        r.json["elementary"] = render_list(ctx, c);
        r.json["coefficients"] = coefficient_json(ctx, f.expanded);
        r.json["agree"] = agree;
        r.text.push_back("ordering: " + join_ints(ordering));
        r.text.push_back("elementary: " + join_rendered(ctx, c));
        r.text.push_back("coefficients: " + join_rendered(ctx, f.expanded.coeffs));
        r.text.push_back(agree ? "agree" : "disagree");
        r.code = agree ? kOk : kVerificationFailed;
    });
}

inline void cmd_verify_relations(const Command &cmd, Report &r, std::ostream &err)
{
    const std::string v = variant_of(cmd);
    r.json["variant"] = v;
    if (v == "symbolic") {
        const int n = *cmd.n;
        qn::NormalizationContext ctx(n);
        const std::size_t checked = qn::relation_suite(n).size();
        const auto failures = qn::verify_relation_suite(ctx);
        Json fails = Json::array();
        for (const auto &f : failures) {
            fails.push_back({{"family", f.family}, {"instance", f.label}, {"residue", f.residue}});
            r.text.push_back("FAIL " + f.family + " " + f.label + ": " + f.residue);
        }
        r.json["n"] = n;
        r.json["checked"] = checked;
        r.json["failures"] = fails;
        r.text.push_back(std::to_string(checked - failures.size()) + "/" + std::to_string(checked) +
                         " relations hold");
        r.code = failures.empty() ? kOk : kVerificationFailed;
        return;
    }
    const std::string ring = cmd.ring.value_or(v == "diff" ? "ratfunc" : "quat");
    with_ring(ring, [&](const auto &ctx) {
        Json fails = Json::array();
        std::size_t checked = 0;
        if (v == "roots") {
            auto roots = obtain_roots(ctx, cmd, 3, err);
            require_generic(roots);
            const RelationReport rep = verify_relations_32(roots);
            ring_header(r, ctx, ring, roots.roots());
            checked = rep.checked;
            for (const auto &f : rep.failures) {
                const std::string where = f.a.str() + "," + std::to_string(f.i) + "," + std::to_string(f.j);
                fails.push_back({{"relation", f.relation}, {"where", where}});
                r.text.push_back("FAIL " + f.relation + " at " + where);
            }
        } else {
            auto fs = obtain_diff_roots(ctx, cmd, 2, err);
            if (auto failure = diff_genericity_failure(fs); !failure.empty()) {
                throw GenericityFailure(failure);
            }
            const DiffRelationReport rep = verify_relations_43(fs);
            ring_header(r, ctx, ring, fs.values());
            checked = rep.checked;
            for (const auto &f : rep.failures) {
                fails.push_back({{"relation", f.relation}, {"where", f.where}});
                r.text.push_back("FAIL " + f.relation + " at " + f.where);
            }
        }
        r.json["checked"] = checked;
        r.json["failures"] = fails;
        r.text.push_back(std::to_string(checked - fails.size()) + "/" + std::to_string(checked) + " relations hold");
        r.code = fails.empty() ? kOk : kVerificationFailed;
    });
}

inline void cmd_diff_factor(const Command &cmd, Report &r, std::ostream &err)
{
    const std::string ring = cmd.ring.value_or("ratfunc");
    with_ring(ring, [&](const auto &ctx) {
        auto fs = obtain_diff_roots(ctx, cmd, 2, err);
        const auto set = factorize_all_diff(fs);
        ring_header(r, ctx, ring, fs.values());
        r.json["operator"] = render_diffop(ctx, set.op);
        r.json["coefficients"] = render_list(ctx, set.op.coeffs);
        r.text.push_back("operator: " + render_diffop(ctx, set.op));
        Json facs = Json::array();
        for (const auto &f : set.factorizations) {
            facs.push_back({{"ordering", f.ordering}, {"factors", render_list(ctx, f.factors)}});
            r.text.push_back("ordering " + join_ints(f.ordering) + ": " + join_rendered(ctx, f.factors));
        }
        r.json["factorizations"] = facs;
    });
}

inline void cmd_miura(const Command &cmd, Report &r)
{
    const std::string ring = cmd.ring.value_or("ratfunc");
    with_ring(ring, [&](const auto &ctx) {
        const auto flag = explicit_roots(ctx, cmd);
        const auto m = miura_factorize(ctx, flag);
        bool annihilates = true;
        Json kills = Json::array();
        for (const auto &phi : flag) {
            const bool zero = ctx.is_zero(diffop_apply(ctx, m.op, phi));
            annihilates = annihilates && zero;
            kills.push_back(zero);
        }
        r.json["ring"] = ring;
        r.json["flag"] = render_list(ctx, flag);
        r.json["b"] = render_list(ctx, m.b);
        r.json["operator"] = render_diffop(ctx, m.op);
        r.json["coefficients"] = render_list(ctx, m.op.coeffs);
        r.json["annihilates_flag"] = kills;
        r.text.push_back("b: " + join_rendered(ctx, m.b));
        r.text.push_back("operator: " + render_diffop(ctx, m.op));
        if (!annihilates) {
            r.text.push_back("operator does not annihilate the flag");
        }
        r.code = annihilates ? kOk : kVerificationFailed;
    });
}

inline void cmd_check_rs(const Command &cmd, Report &r)
{
    const int n = *cmd.n;
    qn::NormalizationContext ctx(n);
    const auto failures = qn::rs_commutator_failures(ctx);
    r.json["n"] = n;
    r.json["commute"] = failures.empty();
    r.json["failures"] = failures;
    for (const auto &f : failures) {
        r.text.push_back("FAIL " + f);
    }
    r.text.push_back(failures.empty() ? "RS = SR" : "RS != SR");
    r.code = failures.empty() ? kOk : kVerificationFailed;
}

inline void dispatch(const Command &cmd, Report &r, std::ostream &err)
{
    const std::string &c = cmd.name;
    if (c == "normalize") {
        cmd_normalize(cmd, r);
    } else if (c == "equal") {
        cmd_equal(cmd, r);
    } else if (c == "symfun") {
        cmd_symfun(cmd, r);
    } else if (c == "specialize") {
        cmd_specialize(cmd, r);
    } else if (c == "evaluate") {
        cmd_evaluate(cmd, r, err);
    } else if (c == "enumerate-basis") {
        cmd_enumerate(cmd, r);
    } else if (c == "factor-roots") {
        cmd_factor_roots(cmd, r, err);
    } else if (c == "vieta") {
        cmd_vieta(cmd, r, err);
    } else if (c == "verify-relations") {
        cmd_verify_relations(cmd, r, err);
    } else if (c == "diff-factor") {
        cmd_diff_factor(cmd, r, err);
    } else if (c == "miura") {
        cmd_miura(cmd, r);
    } else {
        cmd_check_rs(cmd, r);
    }
}

inline int exit_code_for(const std::exception &e)
{
    if (dynamic_cast<const GenericityFailure *>(&e) || dynamic_cast<const SubmatrixNotInvertible *>(&e) ||
        dynamic_cast<const NotInvertible *>(&e)) {
        return kNotGeneric;
    }
    if (dynamic_cast<const ConsistencyViolation *>(&e) || dynamic_cast<const NonTermination *>(&e)) {
        return kVerificationFailed;
    }
    return kUsage;
}

// Runs one command. Results go to `out` (or the --out file), diagnostics to `err`.
inline int run(const Command &cmd, std::ostream &out, std::ostream &err)
{
    Report r;
    try {
        validate(cmd);
        header(r, cmd);
        dispatch(cmd, r, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    r.json["status"] = r.code == kOk ? "ok" : "verification-failed";
    std::string body;
    if (cmd.format == "json") {
        body = r.json.dump(2) + "\n";
    } else {
        for (const auto &line : r.text) {
            body += line + "\n";
        }
    }
    if (cmd.out) {
        std::ofstream f(*cmd.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << *cmd.out << "\n";
            return kUsage;
        }
        f << body;
    } else {
        out << body;
    }
    return r.code;
}

} // namespace qnalg::cli

#endif
