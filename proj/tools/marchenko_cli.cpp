// Command-line front end: dataset inversion, stability triage, stable-subset
// filtering, series-vs-direct comparison, and the two stock demonstration
// figures. Data goes to --output (or stdout); diagnostics go to stderr.
//
// Exit codes: 0 success; 1 qualitative outcome (unstable components present,
// nothing survives filtering, oracle disagreement); 2 usage/parse/validation
// failure; 3 divergent evaluation region; 4 term budget exceeded;
// 5 singular integral operator.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "marchenko/errors.hpp"
#include "marchenko/figures.hpp"
#include "marchenko/io.hpp"
#include "marchenko/kernel.hpp"
#include "marchenko/nystrom.hpp"
#include "marchenko/recursion.hpp"
#include "marchenko/spectrum.hpp"
#include "marchenko/stability.hpp"

namespace {

using marchenko::cplx;

constexpr int kExitSuccess = 0;
constexpr int kExitOutcome = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDivergent = 3;
constexpr int kExitBudget = 4;
constexpr int kExitSingular = 5;

constexpr int kOracleGridSize = 512;

struct RunConfig {
    std::string input_path;
    std::string output_path;
    std::string dump_terms_path;
    int max_generation = marchenko::kDefaultMaxGeneration;
    double prune_tolerance = marchenko::kDefaultPruneTolerance;
    double x_min = 0.0;
    double x_max = 1.0;
    int samples = 101;
    double margin = marchenko::kDefaultMargin;
    double perturb = marchenko::kDefaultPerturbRel;
    std::string figure = "fig1";
    bool x_min_set = false;
    bool x_max_set = false;
};

std::vector<double> make_grid(double x_min, double x_max, int samples) {
    if (samples < 2) throw std::invalid_argument("need at least 2 samples");
    if (!(x_min < x_max)) throw std::invalid_argument("--x-min must be below --x-max");
    std::vector<double> grid(static_cast<std::size_t>(samples));
    const double step = (x_max - x_min) / static_cast<double>(samples - 1);
    for (int p = 0; p < samples; ++p)
        grid[static_cast<std::size_t>(p)] = x_min + step * static_cast<double>(p);
    grid.back() = x_max;
    return grid;
}

int highest_generation(const marchenko::KernelExpansion& expansion) {
    int top = 0;
    for (const auto& [key, amp] : expansion.terms) {
        (void)amp;
        marchenko::KernelTerm t;
        t.x_exponents = key.first;
        t.y_index = key.second;
        top = std::max(top, t.generation());
    }
    return top;
}

int cmd_invert(const RunConfig& config) {
    const marchenko::SpectralDataset dataset = marchenko::read_dataset(config.input_path);
    const marchenko::KernelExpansion expansion =
        marchenko::expand(dataset, config.max_generation, config.prune_tolerance);

    if (!config.dump_terms_path.empty()) {
        marchenko::write_text_output(config.dump_terms_path,
                                     marchenko::expansion_to_json(expansion).dump(2) + "\n",
                                     std::cout);
    }

    const std::vector<double> grid = make_grid(config.x_min, config.x_max, config.samples);
    const std::vector<cplx> diagonal = marchenko::eval_diagonal(expansion, grid);
    const marchenko::PotentialProfile profile = marchenko::eval_potential(expansion, grid);

    std::cerr << "convergence abscissa: "
              << marchenko::format_double(marchenko::convergence_abscissa(dataset)) << "\n"
              << "generations: " << highest_generation(expansion) << "\n";

    std::ostringstream csv;
    marchenko::write_profile_csv(csv, grid, diagonal, profile);
    marchenko::write_text_output(config.output_path, csv.str(), std::cout);
    return kExitSuccess;
}

int cmd_stability(const RunConfig& config) {
    const marchenko::SpectralDataset dataset = marchenko::read_dataset(config.input_path);
    const marchenko::FilterResult result =
        marchenko::filter_stable(dataset, config.margin, config.perturb);

    marchenko::write_text_output(
        config.output_path,
        marchenko::report_to_json(result.report, result.removed, result.kept.components).dump(2) +
            "\n",
        std::cout);

    for (const auto& entry : result.report.entries) {
        if (entry.classification != marchenko::Classification::stable) return kExitOutcome;
    }
    return kExitSuccess;
}

int cmd_filter(const RunConfig& config) {
    const marchenko::SpectralDataset dataset = marchenko::read_dataset(config.input_path);
    const marchenko::FilterResult result =
        marchenko::filter_stable(dataset, config.margin, config.perturb);

    nlohmann::json out = marchenko::dataset_to_json(result.kept);
    out["report"] = marchenko::report_to_json(result.report, result.removed,
                                              result.kept.components);
    marchenko::write_text_output(config.output_path, out.dump(2) + "\n", std::cout);
    return result.report.all_unstable ? kExitOutcome : kExitSuccess;
}

int cmd_oracle_compare(const RunConfig& config) {
    const marchenko::SpectralDataset dataset = marchenko::read_dataset(config.input_path);
    const marchenko::KernelExpansion expansion =
        marchenko::expand(dataset, config.max_generation, config.prune_tolerance);
    const std::vector<double> grid = make_grid(config.x_min, config.x_max, config.samples);
    const marchenko::ComparisonReport report =
        marchenko::compare(expansion, dataset, grid, kOracleGridSize);

    marchenko::write_text_output(config.output_path,
                                 marchenko::comparison_to_json(report).dump(2) + "\n", std::cout);
    std::cerr << "max relative error: " << marchenko::format_double(report.max_rel_err) << "\n";
    return report.max_rel_err < 1e-4 ? kExitSuccess : kExitOutcome;
}

int cmd_figures(const RunConfig& config) {
    const marchenko::FigureId id =
        config.figure == "fig1" ? marchenko::FigureId::fig1 : marchenko::FigureId::fig2;
    const double x_min = config.x_min_set ? config.x_min : marchenko::figure_default_xmin(id);
    const double x_max = config.x_max_set ? config.x_max : marchenko::figure_default_xmax(id);

    const marchenko::FigureCurves curves = marchenko::build_figure(
        id, config.samples, x_min, x_max, config.max_generation, config.prune_tolerance);

    std::ostringstream csv;
    marchenko::write_figure_csv(csv, curves);
    marchenko::write_text_output(config.output_path, csv.str(), std::cout);
    return kExitSuccess;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig config;
    CLI::App app{"Inverse-scattering toolkit for exponential-sum scattering data"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* input = cmd->add_option("--input", config.input_path, "dataset JSON path");
        if (needs_input) input->required();
        cmd->add_option("--output", config.output_path, "output path (default: stdout)");
        return cmd;
    };
    auto add_expansion = [&](CLI::App* cmd) {
        cmd->add_option("--order", config.max_generation, "truncation generation")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--prune", config.prune_tolerance, "amplitude prune tolerance")
            ->check(CLI::NonNegativeNumber);
    };
    auto add_grid = [&](CLI::App* cmd) {
        auto* xmin = cmd->add_option("--x-min", config.x_min, "grid start");
        auto* xmax = cmd->add_option("--x-max", config.x_max, "grid end");
        cmd->add_option("--samples", config.samples, "grid point count")
            ->check(CLI::Range(2, 1000000));
        xmin->each([&](const std::string&) { config.x_min_set = true; });
        xmax->each([&](const std::string&) { config.x_max_set = true; });
    };

    CLI::App* invert = add_common(app.add_subcommand("invert", "recover the potential V(x)"), true);
    add_expansion(invert);
    add_grid(invert);
    invert->add_option("--dump-terms", config.dump_terms_path, "write expansion terms JSON here");

    CLI::App* stability =
        add_common(app.add_subcommand("stability", "per-component Lyapunov triage"), true);
    stability->add_option("--margin", config.margin, "classification margin")
        ->check(CLI::NonNegativeNumber);
    stability->add_option("--perturb", config.perturb, "relative amplitude perturbation")
        ->check(CLI::NonNegativeNumber);

    CLI::App* filter =
        add_common(app.add_subcommand("filter", "extract the stable sub-dataset"), true);
    filter->add_option("--margin", config.margin, "classification margin")
        ->check(CLI::NonNegativeNumber);
    filter->add_option("--perturb", config.perturb, "relative amplitude perturbation")
        ->check(CLI::NonNegativeNumber);

    CLI::App* oracle = add_common(
        app.add_subcommand("oracle-compare", "series vs direct-solve error report"), true);
    add_expansion(oracle);
    add_grid(oracle);

    CLI::App* figures =
        add_common(app.add_subcommand("figures", "stock stable/unstable demonstration curves"),
                   false);
    add_expansion(figures);
    add_grid(figures);
    figures->add_option("--figure", config.figure, "which demonstration to emit")
        ->check(CLI::IsMember({"fig1", "fig2"}))
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(invert)) return cmd_invert(config);
        if (app.got_subcommand(stability)) return cmd_stability(config);
        if (app.got_subcommand(filter)) return cmd_filter(config);
        if (app.got_subcommand(oracle)) return cmd_oracle_compare(config);
        if (app.got_subcommand(figures)) return cmd_figures(config);
        std::cerr << "no command selected\n";
        return kExitUsage;
    } catch (const marchenko::DivergentRegion& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "convergence abscissa: " << marchenko::format_double(e.abscissa()) << "\n";
        return kExitDivergent;
    } catch (const marchenko::TermBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const marchenko::SingularOperator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSingular;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
