#include "arakelov_cli/commands.hpp"

#include "arakelov/version.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace arakelov::cli;

    CLI::App app{"Exact Arakelov intersection theory on curves over a trivially valued field"};
    app.set_version_flag("--version", std::string(arakelov::version));
    app.require_subcommand(1);

    Options opts;
    std::string format = "json";
    std::string n_text;
    std::uint64_t seed = 0, trials = 0;

    for (const std::string& name : command_names()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--scenario", opts.scenario_path, "scenario JSON file");
        sub->add_option("--out", opts.out_dir, "write <command>.json or <command>.csv into this directory");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        if (name == "hs-converge") sub->add_option("--n", n_text, "comma-separated list of n");
        if (name == "check-inequalities") {
            sub->add_option("--seed", seed, "generator seed");
            sub->add_option("--trials", trials, "number of random trials");
        }
        sub->callback([&, name, sub] {
            opts.command = name;
            if (name != "check-inequalities") return;
            if (sub->count("--seed")) opts.seed = seed;
            if (sub->count("--trials")) opts.trials = trials;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opts.format = format == "csv" ? Format::csv : Format::json;
    if (!n_text.empty()) {
        try {
            opts.n_list = parse_n_list(n_text);
        } catch (const std::exception& e) {
            std::cerr << "{\"error\": {\"kind\": \"input\", \"message\": \"" << e.what() << "\"}, \"exit_code\": 2}\n";
            return 2;
        }
    }
    return run(opts, std::cout, std::cerr);
}
