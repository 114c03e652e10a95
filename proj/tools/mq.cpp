// mq: exact computations with modules over monad quivers.
//
//   mq <command> <project-file> [--module NAME] [--vertex NAME]
//      [--element NAME|"c1,c2,..."] [--edge NAME] [--seed N] [--json]
//
// Commands: validate, flat, cartesian, hull, coherator, adjcheck, cover,
// report. One machine-readable record is printed on standard output.
// Exit codes: 0 pass, 1 fail with witnesses, 2 usage/parse error.

#include "monadquiver/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"exact modules over monad quivers"};
    app.require_subcommand(1);

    mq::CommandRequest req;
    std::string module_name, vertex_name, element_spec, edge_name;

    const std::vector<std::string> commands = {"validate", "flat",     "cartesian", "hull",
                                               "coherator", "adjcheck", "cover",     "report"};
    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("project", req.project_path, "project file (JSON)")->required();
        sub->add_option("--module", module_name, "module name");
        sub->add_option("--vertex", vertex_name, "vertex name (with a literal --element)");
        sub->add_option("--element", element_spec, "element name or literal \"c1,c2,...\"");
        sub->add_option("--edge", edge_name, "edge name");
        sub->add_option("--seed", req.seed, "seed for randomized property checks");
        sub->add_flag("--json", req.pretty, "pretty-print the output record");
        sub->callback([&req, name] { req.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (!module_name.empty()) req.module_name = module_name;
    if (!vertex_name.empty()) req.vertex_name = vertex_name;
    if (!element_spec.empty()) req.element_spec = element_spec;
    if (!edge_name.empty()) req.edge_name = edge_name;

    const mq::CommandResult result = mq::run_command(req);
    std::cout << (req.pretty ? result.record.dump(2) : result.record.dump()) << "\n";
    return result.exit_code;
}
