// Command-line front end for the flatsurf library.

#include "flatsurf/commands.hpp"
#include "flatsurf/origami.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace flatsurf;

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of translation surfaces and square-tiled surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Print a machine-readable JSON report");

    std::string path, output;
    std::size_t max_elements = 100000;
    std::vector<std::string> matrix;
    int genus = 2;
    std::string branch, form;

    auto* analyze = app.add_subcommand("analyze", "Genus, stratum, cone angles, periods (and spin data for origamis)");
    analyze->add_option("path", path, "Surface JSON or origami text file")->required();

    auto* orbit = app.add_subcommand("orbit", "SL2(Z)-orbit of an origami with cusp widths");
    orbit->add_option("path", path, "Origami text file")->required();
    orbit->add_option("--max", max_elements, "Element budget")->capture_default_str();

    auto* spin = app.add_subcommand("spin", "Arf invariant and component of an origami");
    spin->add_option("path", path, "Origami text file")->required();

    auto* act = app.add_subcommand("act", "Apply a rational 2x2 matrix with positive determinant");
    act->add_option("path", path, "Surface JSON or origami text file")->required();
    act->add_option("--matrix", matrix, "Entries a b c d of [[a, b], [c, d]]")->expected(4)->required();
    act->add_option("-o,--output", output, "Write the transformed surface JSON here");

    auto* strata = app.add_subcommand("strata", "Strata of a genus with dimensions and components");
    strata->add_option("--genus", genus)->required();

    auto* divisor = app.add_subcommand("divisor", "Divisor of f(z) dz/x on x^2 = prod (z - a_i)");
    divisor->add_option("--genus", genus)->required();
    divisor->add_option("--branch", branch, "Comma-separated branch values")->required();
    divisor->add_option("--form", form, "Factored polynomial, e.g. \"2*(z-1)^2*(z+1/3)\"")->required();

    auto* render = app.add_subcommand("render", "Draw a surface as SVG");
    render->add_option("path", path, "Surface JSON or origami text file")->required();
    render->add_option("-o,--output", output, "SVG file")->required();

    CLI11_PARSE(app, argc, argv);

    Report report;
    try {
        verify_conventions();
        if (*analyze) {
            report = cmd_analyze(path);
        } else if (*orbit) {
            report = cmd_orbit(path, max_elements);
        } else if (*spin) {
            report = cmd_spin(path);
        } else if (*act) {
            Mat2 m{parse_rational(matrix[0]), parse_rational(matrix[1]), parse_rational(matrix[2]), parse_rational(matrix[3])};
            report = cmd_act(path, m, output.empty() ? std::nullopt : std::optional<std::string>(output));
        } else if (*strata) {
            report = cmd_strata(genus);
        } else if (*divisor) {
            report = cmd_divisor(genus, branch, form);
        } else if (*render) {
            report = cmd_render(path, output);
        }
    } catch (const std::exception& e) {
        report.errors.push_back(e.what());
    }

    if (as_json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
    return report.ok() ? 0 : 1;
}
