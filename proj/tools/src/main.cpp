#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common(CLI::App* sub, cli::Options& opt) {
    sub->add_option("--config", opt.config, "configuration file (default: bundled six-points data)");
    sub->add_option("--mode", opt.mode, "arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--out", opt.out, "output path (default: stdout)");
}

void add_points(CLI::App* sub, cli::Options& opt) {
    sub->add_option("--square-point", opt.square_points, "start R,S in the square (repeatable)");
    sub->add_option("--plane-point", opt.plane_points, "start X,Y in the plane (repeatable)");
    sub->add_option("--map", opt.map, "serialized map from `build`");
}

int print_error(const std::string& kind, const std::string& message) {
    cli::json j;
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbits of normally rising homeomorphisms of the square and the plane"};
    app.require_subcommand(1);
    cli::Options opt;

    auto* build = app.add_subcommand("build", "build stages and write the map");
    add_common(build, opt);
    build->add_option("--budget", opt.budget, "number of stages to build");

    auto* orbit = app.add_subcommand("orbit", "write an orbit as CSV");
    add_common(orbit, opt);
    add_points(orbit, opt);
    orbit->add_option("--steps", opt.steps, "number of steps")->check(CLI::NonNegativeNumber);
    orbit->add_option("--direction", opt.direction, "fwd or bwd")->check(CLI::IsMember({"fwd", "bwd"}));

    auto* limits = app.add_subcommand("limits", "estimate omega and alpha limit sets");
    add_common(limits, opt);
    add_points(limits, opt);
    limits->add_option("--budget", opt.budget, "stage budget")->check(CLI::PositiveNumber);
    auto* ldir = limits->add_option("--direction", opt.direction, "only the fwd (omega) or bwd (alpha) side")
                     ->check(CLI::IsMember({"fwd", "bwd"}));
    limits->add_option("--jobs", opt.jobs, "worker threads");

    auto* classify = app.add_subcommand("classify", "classify orbits of the plane map");
    add_common(classify, opt);
    add_points(classify, opt);
    classify->add_option("--steps", opt.steps, "step cap per direction (default from config)");
    classify->add_option("--jobs", opt.jobs, "worker threads");

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    add_common(verify, opt);

    auto* render = app.add_subcommand("render", "write an SVG figure");
    add_common(render, opt);
    add_points(render, opt);
    render->add_option("--figure", opt.figure, "square, six-points or plane")
        ->check(CLI::IsMember({"square", "six-points", "plane"}));
    render->add_option("--steps", opt.steps, "orbit steps to draw");
    render->add_option("--budget", opt.budget, "stages of anchor arcs to draw");
    render->add_option("--direction", opt.direction, "fwd or bwd")->check(CLI::IsMember({"fwd", "bwd"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return print_error("ParseError", e.what());
    }
    opt.direction_set = ldir->count() > 0;
    if (classify->parsed() && classify->get_option("--steps")->count() == 0) opt.steps = -1;

    try {
        if (build->parsed()) return cli::cmd_build(opt);
        if (orbit->parsed()) return cli::cmd_orbit(opt);
        if (limits->parsed()) return cli::cmd_limits(opt);
        if (classify->parsed()) return cli::cmd_classify(opt);
        if (verify->parsed()) return cli::cmd_verify(opt);
        if (render->parsed()) return cli::cmd_render(opt);
    } catch (const rising::Error& e) {
        return print_error(e.kind_name(), e.what());
    } catch (const std::exception& e) {
        return print_error("InternalError", e.what());
    }
    return 1;
}
