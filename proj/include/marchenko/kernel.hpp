#ifndef MARCHENKO_KERNEL_HPP
#define MARCHENKO_KERNEL_HPP

#include <vector>

#include "marchenko/recursion.hpp"
#include "marchenko/spectrum.hpp"

namespace marchenko {

/// Recovered potential V(x) on a grid, with the magnitude of any spurious
/// imaginary part reported rather than silently dropped.
struct PotentialProfile {
    std::vector<double> x_grid;
    std::vector<cplx> values;
    double imaginary_residual = 0.0;  ///< max |Im V| over the grid
};

/// Grid points may undershoot the convergence abscissa by at most this
/// much before eval_diagonal / eval_potential refuse to evaluate.
inline constexpr double kAbscissaTolerance = 1e-9;

/// Evaluates the truncated kernel
///   K(x,y) = sum_terms amplitude * exp(i (sum_i m_i k_i) x) * exp(i k_l y).
/// No convergence check is performed; callers gate on convergence_abscissa.
cplx eval_kernel(const KernelExpansion& expansion, double x, double y);

/// Evaluates K(x,x) on a grid. Throws DivergentRegion if any grid point
/// lies below convergence_abscissa(dataset) - kAbscissaTolerance.
std::vector<cplx> eval_diagonal(const KernelExpansion& expansion,
                                const std::vector<double>& x_grid);

/// Recovers V(x) = -2 d/dx K(x,x) by exact term-wise differentiation:
/// each term contributes -2 * amplitude * i * kappa * exp(i kappa x) with
/// kappa = sum_i m_i k_i + k_l. Convergence gate as in eval_diagonal.
PotentialProfile eval_potential(const KernelExpansion& expansion,
                                const std::vector<double>& x_grid);

/// Largest single-component geometric-ratio crossover
///   x* = max_n log(|A_n| / (2 |k_n|)) / (2 Im k_n);
/// the expansion converges for x > x*. Returns -infinity for an empty
/// dataset. For components with Re k != 0 this per-component ratio is a
/// conservative heuristic.
double convergence_abscissa(const SpectralDataset& dataset);

} // namespace marchenko

#endif // MARCHENKO_KERNEL_HPP
