#include <iostream>

#include <CLI11.hpp>

#include "qnalg/cli/run.hpp"

using qnalg::cli::Command;

namespace
{

void add_flags(CLI::App &sub, const qnalg::cli::CommandInfo &info, Command &cmd)
{
    sub.add_option("args", cmd.args, info.min_args == 2 ? "two expressions" : "expression or ordering");
    if (info.flags.contains("n")) {
        sub.add_option("--n", cmd.n, "number of indices / roots");
    }
    if (info.flags.contains("seed")) {
        sub.add_option("--seed", cmd.seed, "seed for random roots (default 0)");
    }
    if (info.flags.contains("ring")) {
        sub.add_option("--ring", cmd.ring, "rat | quat | ratfunc | mat");
    }
    if (info.flags.contains("roots")) {
        sub.add_option("--roots", cmd.roots, "semicolon-separated scalars");
    }
    if (info.flags.contains("max-degree")) {
        sub.add_option("--max-degree", cmd.max_degree, "largest string degree (default 2)");
    }
    if (info.flags.contains("k")) {
        sub.add_option("--k", cmd.k, "single degree instead of 0..n");
    }
    if (info.flags.contains("variant")) {
        std::string list;
        for (const auto &v : info.variants) {
            list += (list.empty() ? "" : " | ") + v;
        }
        sub.add_option("--variant", cmd.variant, list + " (default " + info.variants.front() + ")");
    }
    sub.add_option("--format", cmd.format, "text | json")->capture_default_str();
    sub.add_option("--out", cmd.out, "write results to a file");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Computations in the algebras Q_n, noncommutative polynomials and differential operators"};
    app.require_subcommand(1);
    Command cmd;
    for (const auto &info : qnalg::cli::command_infos()) {
        CLI::App *sub = app.add_subcommand(info.name, info.summary);
        add_flags(*sub, info, cmd);
        sub->callback([&cmd, name = info.name] { cmd.name = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return qnalg::cli::kUsage;
    }
    return qnalg::cli::run(cmd, std::cout, std::cerr);
}
