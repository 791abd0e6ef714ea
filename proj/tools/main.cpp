#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "reporter.hpp"

int main(int argc, char** argv) {
    using namespace modlie::cli;

    CLI::App app{"modlie: deformations of Lie algebras of type D over GF(2)"};
    app.require_subcommand(1);

    RunConfig config;
    std::string model;
    const std::map<std::string, Command> commands{{"verify", Command::Verify},
                                                  {"cohomology", Command::Cohomology},
                                                  {"rigidity", Command::Rigidity},
                                                  {"integrability", Command::Integrability}};
    const char* help[] = {"Check Jacobi, centre and weight structure",
                          "Weight-graded survey of H^2",
                          "Cup-square obstruction of every H^2 class (odd l)",
                          "Integrability of every H^2 class (even l)"};
    std::size_t h = 0;
    for (const auto& name : {"verify", "cohomology", "rigidity", "integrability"}) {
        auto* sub = app.add_subcommand(name, help[h++]);
        sub->add_option("--l", config.l, "Rank of the root system")->required();
        sub->add_option("--model", model, "chevalley or exterior")
            ->check(CLI::IsMember({"chevalley", "exterior"}));
        sub->add_option("--out", config.out_path, "Write a JSON report here");
        sub->add_option("--jobs", config.jobs, "Worker threads for weight blocks")->capture_default_str();
        sub->add_flag("-v,--verbose", config.verbosity, "More detail per weight");
        sub->add_flag("--allow-large", config.allow_large, "Permit l above the default cap of 10");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    config.command = commands.at(app.get_subcommands().front()->get_name());
    if (model == "chevalley") config.model = Model::Chevalley;
    if (model == "exterior") config.model = Model::Exterior;
    return run(config, std::cout, std::cerr);
}
