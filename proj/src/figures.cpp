#include "marchenko/figures.hpp"

#include <stdexcept>

#include "marchenko/kernel.hpp"
#include "marchenko/recursion.hpp"

namespace marchenko {

namespace {

SpectralDataset scenario_dataset(FigureId id, double d) {
    const double beta = id == FigureId::fig1 ? 10.0 : 0.49;
    return validate_dataset({{cplx(2.0 * d, 0.0), cplx(0.0, beta)}});
}

} // namespace

double figure_default_xmin(FigureId id) { return id == FigureId::fig1 ? 0.0 : 0.8; }

double figure_default_xmax(FigureId id) { return id == FigureId::fig1 ? 1.0 : 2.0; }

FigureCurves build_figure(FigureId id, int samples, double xmin, double xmax,
                          int max_generation, double prune_tolerance) {
    if (samples < 2) throw std::invalid_argument("need at least 2 samples");
    if (!(xmin < xmax)) throw std::invalid_argument("xmin must be below xmax");

    FigureCurves curves;
    curves.id = id;
    curves.display_scale = id == FigureId::fig2 ? 1e-15 : 1.0;

    const KernelExpansion base =
        expand(scenario_dataset(id, 1.0), max_generation, prune_tolerance);
    const KernelExpansion perturbed =
        expand(scenario_dataset(id, 0.99), max_generation, prune_tolerance);

    curves.x.reserve(static_cast<std::size_t>(samples));
    curves.base.reserve(static_cast<std::size_t>(samples));
    curves.perturbed.reserve(static_cast<std::size_t>(samples));
    const double step = (xmax - xmin) / static_cast<double>(samples - 1);
    for (int p = 0; p < samples; ++p) {
        const double x = p == samples - 1 ? xmax : xmin + step * static_cast<double>(p);
        curves.x.push_back(x);
        curves.base.push_back(eval_kernel(base, x, x));
        curves.perturbed.push_back(eval_kernel(perturbed, x, x));
    }
    return curves;
}

} // namespace marchenko
