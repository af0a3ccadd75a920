#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "constaring/cli.hpp"

namespace {

using constaring::CommandResult;
using constaring::i64;
using constaring::RunConfig;

int emit(const CommandResult& result, const std::string& out_path) {
    const std::string text = result.output.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open output file '" << out_path << "'\n";
            return 2;
        }
        out << text;
    } else {
        std::cout << text;
    }
    if (result.output.contains("error")) {
        std::cerr << result.output["error"]["kind"].get<std::string>() << ": "
                  << result.output["error"]["message"].get<std::string>() << "\n";
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(1-2u^3)-constacyclic and quadratic residue codes over F_p[u]/(u^4 - u)"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string out_path;
    std::string sign_str = "+1";
    std::string label;
    std::vector<int> mask_positions;
    std::string family_str = "Q";
    i64 theta_value = 0;
    std::array<std::vector<i64>, 4> gens;
    int exit_code = 0;

    std::vector<CLI::Option*> theta_opts;
    const auto add_theta = [&](CLI::App* cmd) {
        theta_opts.push_back(cmd->add_option("--theta", theta_value, "Gaussian sum override"));
    };
    const auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the JSON report to a file instead of stdout");
    };
    const auto add_selector = [&](CLI::App* cmd) {
        cmd->add_option("--label", label, "code label Q1..Q14 or S1..S14");
        cmd->add_option("--mask", mask_positions, "eta positions carrying the second idempotent")
            ->delimiter(',');
        cmd->add_option("--family", family_str, "Q or S (with --mask)")
            ->check(CLI::IsMember({"Q", "S"}));
    };
    const auto add_generators = [&](CLI::App* cmd) {
        for (int i = 0; i < 4; ++i) {
            cmd->add_option("--g" + std::to_string(i + 1), gens[static_cast<size_t>(i)],
                            "coefficients, low degree first, comma separated")
                ->delimiter(',')
                ->required();
        }
    };

    const auto run = [&](const std::string& command, const std::string& sub) {
        cfg.command = command;
        cfg.sub = sub;
        if (sign_str == "+1" || sign_str == "1") {
            cfg.sign = 1;
        } else if (sign_str == "-1") {
            cfg.sign = -1;
        } else {
            std::cerr << "--sign must be +1 or -1\n";
            exit_code = 2;
            return;
        }
        for (size_t i = 0; i < 4; ++i) {
            if (!gens[i].empty()) {
                cfg.gens[i] = gens[i];
                cfg.has_gen[i] = true;
            }
        }
        if (!label.empty()) cfg.label = label;
        if (!mask_positions.empty()) cfg.mask = mask_positions;
        cfg.family = family_str.empty() ? 'Q' : family_str[0];
        for (const CLI::Option* opt : theta_opts) {
            if (opt->count() > 0) cfg.theta = theta_value;
        }
        exit_code = emit(constaring::run_command(cfg), out_path);
    };

    // factor
    auto* factor = app.add_subcommand("factor", "factor x^n - 1 or x^n + 1 over F_p");
    factor->add_option("--p", cfg.p, "prime modulus")->required();
    factor->add_option("--n", cfg.n, "length")->required();
    factor->add_option("--sign", sign_str, "+1 for x^n - 1, -1 for x^n + 1");
    add_out(factor);
    factor->callback([&] { run("factor", ""); });

    // consta
    auto* consta = app.add_subcommand("consta", "(1-2u^3)-constacyclic codes over R");
    consta->require_subcommand(1);
    for (const std::string sub : {"build", "count", "dual", "gray", "equiv"}) {
        auto* cmd = consta->add_subcommand(sub);
        cmd->add_option("--p", cfg.p, "prime modulus, p = 1 (mod 3)")->required();
        cmd->add_option("--n", cfg.n, "code length")->required();
        if (sub == "build" || sub == "dual" || sub == "gray") add_generators(cmd);
        if (sub == "gray") cmd->add_option("--cap", cfg.cap, "enumeration cap for the image distance");
        add_out(cmd);
        cmd->callback([&, sub] { run("consta", sub); });
    }

    // qr
    auto* qr = app.add_subcommand("qr", "quadratic residue codes over R");
    qr->require_subcommand(1);
    for (const std::string sub : {"build", "verify", "extend", "gray"}) {
        auto* cmd = qr->add_subcommand(sub);
        cmd->add_option("--p", cfg.p, "prime modulus, p = 1 (mod 3)")->required();
        cmd->add_option("--q", cfg.q, "odd prime with p a residue mod q")->required();
        add_theta(cmd);
        if (sub == "verify") {
            cmd->add_option("--suite", cfg.suite,
                            "lemma2|theorem8|theorem9|theorem10|theorem11|theorem12|all");
        } else {
            add_selector(cmd);
        }
        add_out(cmd);
        cmd->callback([&, sub] { run("qr", sub); });
    }

    // paper-examples
    auto* examples = app.add_subcommand("paper-examples", "reproduce the worked examples from fixtures");
    add_theta(examples);
    examples->add_option("--fixtures", cfg.fixtures_dir, "fixture directory (default: fixtures)");
    add_out(examples);
    examples->callback([&] { run("paper-examples", ""); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
