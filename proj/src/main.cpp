// planarlim: command-line front end for the planar-limit toolkit.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "planarlim/cli.hpp"

namespace {

using planarlim::Rat;

std::pair<int, Rat> parse_coupling(const std::string& text) {
    size_t eq = text.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("coupling must look like n=value, got " + text);
    return {std::stoi(text.substr(0, eq)), planarlim::parse_number(text.substr(eq + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar limits of one-matrix models: series, extremes, asymptotics, equilibrium measures"};
    app.require_subcommand(1);
    planarlim::RunConfig cfg;
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("-o,--output", cfg.output_path, "Write the output to this file instead of standard output");
    app.add_option("--bits", cfg.precision_bits, "Working precision in bits")
        ->check(CLI::Range(64L, 4096L))
        ->capture_default_str();

    CLI::App* series = app.add_subcommand("series", "Multivariate R, S and F0 up to a weight cap");
    series->add_option("--cap", cfg.weight_cap, "Weight cap")->capture_default_str();
    series->add_flag("--oracle", cfg.oracle, "Compare every F0 coefficient with the map-count oracle");
    series->add_flag("--extended", cfg.extended, "Allow oracle caps up to 10");

    CLI::App* extreme = app.add_subcommand("extreme", "Closed forms, graded series and f_n of an extreme potential");
    extreme->add_option("kind", cfg.kind, "edge-even, edge-all, edge-even-min4, edge-min2, edge-min3, face-even, "
                                          "face-all, mixed34-edge or mixed34-face")
        ->required();
    extreme->add_option("--t-cap", cfg.t_cap, "Series order from the multivariate pipeline")->capture_default_str();
    extreme->add_option("--fn", cfg.fn, "Print only the coefficient f_n");
    extreme->add_option("--n-max", cfg.n_max, "Length of the f_n table")->capture_default_str();

    CLI::App* asym = app.add_subcommand("asymptotics", "Singularity, Stokes constant and corrections of an extreme");
    asym->add_option("kind", cfg.kind, "Extreme kind")->required();
    asym->add_option("-M,--corrections", cfg.corrections, "Number of 1/n corrections")->capture_default_str();
    asym->add_option("--n", cfg.n_list, "Indices compared with exact f_n")->delimiter(',');

    CLI::App* eq = app.add_subcommand("equilibrium", "One-cut equilibrium measure of a polynomial potential");
    std::string a2, a4;
    std::vector<std::string> couplings;
    std::string poly;
    eq->add_flag("--gaussian", cfg.gaussian, "V(x) = x^2/2");
    eq->add_option("--a2", a2, "V(x) = a2 x^2/2 + a4 x^4/4");
    eq->add_option("--a4", a4, "V(x) = a2 x^2/2 + a4 x^4/4");
    eq->add_option("--coupling", couplings, "n=a_n in V(x) = x^2/2 - sum a_n x^n / n (repeatable)");
    eq->add_option("--poly", poly, "Coefficients v_0,v_1,... of V(x) = sum v_k x^k");
    eq->add_option("--samples", cfg.samples, "Density samples over the support")->capture_default_str();

    CLI::App* oracle = app.add_subcommand("oracle", "Map counts of every genus from Wick pairings");
    oracle->add_option("--cap", cfg.weight_cap, "Weight cap")->capture_default_str();
    oracle->add_flag("--extended", cfg.extended, "Allow caps up to 10");

    CLI::App* verify = app.add_subcommand("verify", "Run the acceptance criteria");
    verify->add_option("ids", cfg.criteria, "Criterion ids (default: all)");

    try {
        app.parse(argc, argv);
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.format = format == "csv" ? planarlim::Format::Csv
                                     : (format == "text" ? planarlim::Format::Text : planarlim::Format::Json);
        if (!a2.empty()) cfg.a2 = planarlim::parse_number(a2);
        if (!a4.empty()) cfg.a4 = planarlim::parse_number(a4);
        for (const std::string& c : couplings) cfg.couplings.push_back(parse_coupling(c));
        if (!poly.empty()) {
            std::stringstream ss(poly);
            std::string item;
            while (std::getline(ss, item, ',')) cfg.poly.push_back(planarlim::parse_number(item));
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    planarlim::RunOutcome out = planarlim::run_command(cfg);
    if (!out.error.empty()) std::cerr << "error: " << out.error << "\n";
    if (!out.output.empty()) {
        if (cfg.output_path.empty()) {
            std::cout << out.output;
        } else {
            std::ofstream file(cfg.output_path, std::ios::binary);
            if (!file) {
                std::cerr << "error: cannot write " << cfg.output_path << "\n";
                return 1;
            }
            file << out.output;
        }
    }
    return out.exit_code;
}
