// stringart: construct string-art line nets, verify their symmetry
// properties exactly, report piece areas, solve for admissible spacings,
// and render SVGs. JSON goes to stdout, logs to stderr; exit code 0 means
// every requested check held, 1 means a check failed, 2 means the request
// itself was unusable.

#include "stringart/areas.hpp"
#include "stringart/invariants.hpp"
#include "stringart/net.hpp"
#include "stringart/report_json.hpp"
#include "stringart/spacing_solver.hpp"
#include "stringart/svg.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

using stringart::NetConfig;
using stringart::Rational;
using stringart::Spacing;

struct NetOptions {
    int n = 0;
    std::vector<std::string> frame;
    double theta = 0.0;
    long long max_denominator = 1000000;
    std::string spacing_file;
    CLI::Option* frame_option = nullptr;
    CLI::Option* theta_option = nullptr;
};

void add_net_options(CLI::App* cmd, NetOptions& options) {
    cmd->add_option("--n", options.n, "Number of intervals N (pegs minus one per axis)");
    options.frame_option =
        cmd->add_option("--frame", options.frame, "Frame vector (a, b) as two rationals, e.g. 3/5 4/5")
            ->expected(2);
    options.theta_option =
        cmd->add_option("--theta", options.theta,
                        "Frame angle in radians; a, b become rational approximations of cos/sin")
            ->excludes(options.frame_option);
    cmd->add_option("--max-denominator", options.max_denominator,
                    "Denominator bound for --theta approximation")
        ->needs(options.theta_option);
    cmd->add_option("--spacing-file", options.spacing_file,
                    "JSON array of rationals \"0\", ..., \"1\" overriding equidistant spacing");
}

NetConfig resolve_config(const NetOptions& options) {
    stringart::FrameParams frame = stringart::FrameParams::right();
    if (options.theta_option->count() > 0) {
        frame.a = stringart::approximate_real(std::cos(options.theta), options.max_denominator);
        frame.b = stringart::approximate_real(std::sin(options.theta), options.max_denominator);
    } else if (options.frame_option->count() > 0) {
        frame.a = Rational::from_string(options.frame[0]);
        frame.b = Rational::from_string(options.frame[1]);
    }
    if (!options.spacing_file.empty()) {
        std::ifstream in(options.spacing_file);
        if (!in) throw std::invalid_argument("cannot open spacing file: " + options.spacing_file);
        nlohmann::json doc = nlohmann::json::parse(in);
        if (!doc.is_array()) throw std::invalid_argument("spacing file must hold a JSON array");
        std::vector<Rational> values;
        for (const auto& item : doc) {
            if (!item.is_string()) {
                throw std::invalid_argument("spacing entries must be strings like \"1/4\"");
            }
            values.push_back(Rational::from_string(item.get<std::string>()));
        }
        Spacing spacing(std::move(values));
        if (options.n != 0 && options.n != spacing.n()) {
            throw std::invalid_argument("--n disagrees with the spacing file");
        }
        int n = spacing.n();
        return NetConfig(n, frame, std::move(spacing));
    }
    if (options.n <= 0) throw std::invalid_argument("--n is required when no spacing file is given");
    return NetConfig(options.n, frame, Spacing::equidistant(options.n));
}

void emit(stringart::ordered_json& root, int exit_code) {
    root["exit_code"] = exit_code;
    std::cout << root.dump(2) << "\n";
}

int run_verify(const NetOptions& options) {
    NetConfig config = resolve_config(options);
    stringart::PropertyReport report = stringart::check_all(stringart::build_net(config));
    int code = report.all_hold() ? 0 : 1;
    stringart::ordered_json root;
    root["config"] = stringart::report_config(config);
    root["properties"] = stringart::report_properties(report);
    emit(root, code);
    return code;
}

int run_areas(const NetOptions& options) {
    NetConfig config = resolve_config(options);
    stringart::ordered_json root;
    root["config"] = stringart::report_config(config);
    root["areas"] = stringart::report_areas(config, true);
    emit(root, 0);
    return 0;
}

int run_solve(int n) {
    stringart::SolveOutcome outcome = stringart::solve_spacing(n);
    for (const std::string& line : outcome.steps) std::cerr << line << "\n";
    stringart::ordered_json root;
    root["config"] = {{"n", n}};
    root["solver"] = stringart::report_solver(outcome);
    emit(root, 0);
    return 0;
}

int run_render(const NetOptions& options, const std::string& out_path,
               const stringart::RenderOptions& render_options) {
    NetConfig config = resolve_config(options);
    std::string svg = stringart::render(stringart::build_net(config), render_options);
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << svg) || !out.flush()) {
        throw std::invalid_argument("cannot write " + out_path);
    }
    stringart::ordered_json root;
    root["config"] = stringart::report_config(config);
    root["render"] = {{"path", out_path}, {"bytes", svg.size()}};
    emit(root, 0);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact string-art net engine"};
    app.require_subcommand(1);

    NetOptions verify_options;
    CLI::App* verify = app.add_subcommand("verify", "Check the symmetry properties of a net");
    add_net_options(verify, verify_options);

    NetOptions areas_options;
    CLI::App* areas = app.add_subcommand("areas", "Report exact piece areas and totals");
    add_net_options(areas, areas_options);

    int solve_n = 0;
    CLI::App* solve = app.add_subcommand("solve-spacing", "Solve the equal-area spacing system");
    solve->add_option("--n", solve_n, "Number of intervals N")->required();

    NetOptions render_options_net;
    std::string out_path;
    stringart::RenderOptions render_options;
    CLI::App* render = app.add_subcommand("render", "Write a deterministic SVG of the net");
    add_net_options(render, render_options_net);
    render->add_option("--out", out_path, "Output SVG path")->required();
    render->add_option("--width", render_options.width_px, "Image width in pixels");
    render->add_flag("--checkered", render_options.checkered, "Fill quads and boundary triangles");
    render->add_flag("--envelope", render_options.show_envelope, "Overlay the limit envelope");
    render->add_flag("--vertices", render_options.show_vertices, "Mark every lattice vertex");

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return run_verify(verify_options);
        if (areas->parsed()) return run_areas(areas_options);
        if (solve->parsed()) return run_solve(solve_n);
        if (render->parsed()) return run_render(render_options_net, out_path, render_options);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
