#ifndef MARCHENKO_NYSTROM_HPP
#define MARCHENKO_NYSTROM_HPP

#include <vector>

#include "marchenko/recursion.hpp"
#include "marchenko/spectrum.hpp"

namespace marchenko {

/// Quadrature node layout for the truncated interval [x, L].
///
/// graded  — composite trapezoid in the transformed variable
///           u = (1 - exp(-alpha (z - x))) / (1 - exp(-alpha (L - x))),
///           alpha = min_n Im(k_n); resolves the exponential decay of the
///           integrand uniformly and keeps matrix entries bounded.
/// uniform — textbook composite trapezoid with equispaced nodes; plain
///           second-order behavior, useful for grid-refinement studies.
enum class Mesh { graded, uniform };

/// Direct solution K(x, .) of the integral equation on [x, L].
struct DirectSolution {
    double x = 0.0;
    std::vector<double> y_grid;        ///< nodes, y_grid[0] == x, back() == L
    std::vector<cplx> kernel_values;   ///< K(x, y_j)
    double truncation_length = 0.0;    ///< L
    int grid_size = 0;
    double residual_norm = 0.0;        ///< max defect of the discretized equation
};

/// Pivot magnitude below which the discretized operator is declared
/// non-invertible.
inline constexpr double kPivotFloor = 1e-13;

/// Data-tail magnitude at x + L that the truncation must stay under.
inline constexpr double kTailTolerance = 1e-12;

/// Truncation length satisfying |A(x + L)| < kTailTolerance with an order
/// of magnitude to spare: max(x + 1, T - x) where
/// T = log(sum_n |A_n| * 10^13) / min_n Im(k_n). Returns x + 1 for the
/// empty dataset.
double auto_truncation_length(const SpectralDataset& dataset, double x);

/// Discretizes K(x,y) + A(x+y) + integral_x^L K(x,z) A(y+z) dz = 0 by a
/// composite trapezoid rule (see Mesh) and solves the dense system
/// (I + G) u = -a with partial-pivoting LU.
///
/// Requires grid_size >= 16. Throws TruncationInsufficient if
/// |A(x+L)| >= kTailTolerance, SingularOperator if any LU pivot magnitude
/// falls below kPivotFloor. The defect residual is recorded in the result.
DirectSolution solve_direct(const SpectralDataset& dataset, double x, int grid_size,
                            double L, Mesh mesh = Mesh::graded);

/// One point of a series-vs-direct comparison.
struct ComparisonPoint {
    double x = 0.0;
    cplx series;
    cplx direct;
    double abs_err = 0.0;
    double rel_err = 0.0;          ///< abs_err / |direct|; 0 when both vanish
    bool series_divergent = false; ///< x lies below the convergence abscissa
};

/// Series-vs-direct error report over a grid. Summary statistics cover the
/// points where the series converges; divergent points are flagged and
/// reported but excluded from max/mean.
struct ComparisonReport {
    std::vector<ComparisonPoint> points;
    double max_rel_err = 0.0;
    double mean_rel_err = 0.0;
};

/// Compares the truncated series diagonal K(x,x) against the direct solve
/// at each grid point. L <= 0 selects auto_truncation_length per point.
/// The expansion must be built from the same dataset.
ComparisonReport compare(const KernelExpansion& expansion,
                         const SpectralDataset& dataset,
                         const std::vector<double>& x_grid,
                         int grid_size = 512, double L = 0.0,
                         Mesh mesh = Mesh::graded);

} // namespace marchenko

#endif // MARCHENKO_NYSTROM_HPP
