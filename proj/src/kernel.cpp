#include "marchenko/kernel.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "marchenko/errors.hpp"

namespace marchenko {

namespace {

// kappa_x = sum_i m_i k_i for a term key; the y-frequency k_l is added by
// the caller where needed.
cplx x_frequency(const std::vector<int>& x_exponents, const SpectralDataset& dataset) {
    cplx kappa{0.0, 0.0};
    for (std::size_t i = 0; i < x_exponents.size(); ++i)
        if (x_exponents[i] != 0)
            kappa += static_cast<double>(x_exponents[i]) * dataset.components[i].wavenumber;
    return kappa;
}

void check_convergence(const SpectralDataset& dataset, const std::vector<double>& x_grid) {
    const double abscissa = convergence_abscissa(dataset);
    for (double x : x_grid) {
        if (x < abscissa - kAbscissaTolerance) {
            std::ostringstream os;
            os << "x = " << x << " lies below the convergence abscissa " << abscissa;
            throw DivergentRegion(os.str(), abscissa);
        }
    }
}

} // namespace

cplx eval_kernel(const KernelExpansion& expansion, double x, double y) {
    const cplx i{0.0, 1.0};
    cplx sum{0.0, 0.0};
    for (const auto& [key, amp] : expansion.terms) {
        const cplx kappa_x = x_frequency(key.first, expansion.dataset);
        const cplx k_y = expansion.dataset.components[key.second].wavenumber;
        sum += amp * std::exp(i * (kappa_x * x + k_y * y));
    }
    return sum;
}

std::vector<cplx> eval_diagonal(const KernelExpansion& expansion,
                                const std::vector<double>& x_grid) {
    check_convergence(expansion.dataset, x_grid);
    std::vector<cplx> values;
    values.reserve(x_grid.size());
    for (double x : x_grid) values.push_back(eval_kernel(expansion, x, x));
    return values;
}

PotentialProfile eval_potential(const KernelExpansion& expansion,
                                const std::vector<double>& x_grid) {
    check_convergence(expansion.dataset, x_grid);
    for (std::size_t p = 1; p < x_grid.size(); ++p)
        if (!(x_grid[p] > x_grid[p - 1]))
            throw std::invalid_argument("x_grid must be strictly increasing");

    const cplx i{0.0, 1.0};
    PotentialProfile profile;
    profile.x_grid = x_grid;
    profile.values.reserve(x_grid.size());
    for (double x : x_grid) {
        cplx v{0.0, 0.0};
        for (const auto& [key, amp] : expansion.terms) {
            const cplx kappa =
                x_frequency(key.first, expansion.dataset) +
                expansion.dataset.components[key.second].wavenumber;
            v += -2.0 * amp * i * kappa * std::exp(i * kappa * x);
        }
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error("non-finite potential value at x = " + std::to_string(x));
        profile.values.push_back(v);
        profile.imaginary_residual = std::max(profile.imaginary_residual, std::abs(v.imag()));
    }
    return profile;
}

double convergence_abscissa(const SpectralDataset& dataset) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& c : dataset.components) {
        const double ratio = std::abs(c.amplitude) / (2.0 * std::abs(c.wavenumber));
        const double crossover = std::log(ratio) / (2.0 * c.wavenumber.imag());
        worst = std::max(worst, crossover);
    }
    return worst;
}

} // namespace marchenko
