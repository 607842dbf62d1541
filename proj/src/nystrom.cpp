#include "marchenko/nystrom.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "marchenko/errors.hpp"
#include "marchenko/kernel.hpp"

namespace marchenko {

namespace {

double min_decay_rate(const SpectralDataset& dataset) {
    double kappa = std::numeric_limits<double>::infinity();
    for (const auto& c : dataset.components) kappa = std::min(kappa, c.wavenumber.imag());
    return kappa;
}

struct Quadrature {
    std::vector<double> nodes;    // z_0 = x .. z_{n-1} = L
    std::vector<double> weights;  // composite trapezoid weights
};

Quadrature build_quadrature(const SpectralDataset& dataset, double x, int n, double L,
                            Mesh mesh) {
    Quadrature q;
    q.nodes.resize(n);
    q.weights.resize(n);
    const double span = L - x;
    const double h = 1.0 / static_cast<double>(n - 1);

    if (mesh == Mesh::uniform || dataset.empty()) {
        const double step = span * h;
        for (int p = 0; p < n; ++p) {
            q.nodes[p] = x + step * static_cast<double>(p);
            q.weights[p] = step;
        }
    } else {
        // trapezoid in u with z = x - log(1 - c u)/alpha, c = 1 - e^{-alpha span};
        // 1 - c u is computed as (1 - u) + u e^{-alpha span} so the weights stay
        // finite when alpha * span is large enough that c rounds to 1
        const double alpha = min_decay_rate(dataset);
        const double tail_factor = std::exp(-alpha * span);
        const double scale = (1.0 - tail_factor) / alpha;
        for (int p = 0; p < n; ++p) {
            const double u = h * static_cast<double>(p);
            const double one_minus_cu = (1.0 - u) + u * tail_factor;
            q.nodes[p] = x - std::log(one_minus_cu) / alpha;
            q.weights[p] = h * scale / one_minus_cu;
        }
    }
    q.nodes[0] = x;
    q.nodes[n - 1] = L;
    q.weights[0] *= 0.5;
    q.weights[n - 1] *= 0.5;
    return q;
}

} // namespace

double auto_truncation_length(const SpectralDataset& dataset, double x) {
    if (dataset.empty()) return x + 1.0;
    double amplitude_sum = 0.0;
    for (const auto& c : dataset.components) amplitude_sum += std::abs(c.amplitude);
    const double t = std::log(amplitude_sum / (0.1 * kTailTolerance)) / min_decay_rate(dataset);
    return std::max(x + 1.0, t - x);
}

DirectSolution solve_direct(const SpectralDataset& dataset, double x, int grid_size, double L,
                            Mesh mesh) {
    if (grid_size < 16)
        throw std::invalid_argument("grid_size must be >= 16, got " + std::to_string(grid_size));
    if (!(L > x))
        throw std::invalid_argument("truncation length L must exceed x");

    const double tail = std::abs(evaluate_data(dataset, x + L));
    if (tail >= kTailTolerance) {
        std::ostringstream os;
        os << "|A(x+L)| = " << tail << " at L = " << L << " exceeds the tail tolerance "
           << kTailTolerance;
        throw TruncationInsufficient(os.str());
    }

    const int n = grid_size;
    Quadrature quad = build_quadrature(dataset, x, n, L, mesh);

    DirectSolution solution;
    solution.x = x;
    solution.y_grid = quad.nodes;
    solution.truncation_length = L;
    solution.grid_size = n;

    if (dataset.empty()) {
        solution.kernel_values.assign(static_cast<std::size_t>(n), cplx(0.0, 0.0));
        solution.residual_norm = 0.0;
        return solution;
    }

    const cplx i{0.0, 1.0};
    Eigen::VectorXcd a(n);
    for (int p = 0; p < n; ++p) a(p) = evaluate_data(dataset, x + quad.nodes[p]);

    // G[p][q] = w_q A(z_p + z_q) is a rank-N sum of outer products
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& c : dataset.components) {
        Eigen::VectorXcd col(n), row(n);
        for (int p = 0; p < n; ++p) {
            const cplx e = std::exp(i * c.wavenumber * quad.nodes[p]);
            col(p) = c.amplitude * e;
            row(p) = quad.weights[p] * e;
        }
        G.noalias() += col * row.transpose();
    }

    Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(n, n) + G;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (min_pivot < kPivotFloor) {
        std::ostringstream os;
        os << "LU pivot " << min_pivot << " below " << kPivotFloor << " at x = " << x
           << " (operator not invertible)";
        throw SingularOperator(os.str());
    }

    Eigen::VectorXcd u = lu.solve(-a);
    solution.residual_norm = (u + G * u + a).cwiseAbs().maxCoeff();
    solution.kernel_values.assign(u.data(), u.data() + n);
    return solution;
}

ComparisonReport compare(const KernelExpansion& expansion, const SpectralDataset& dataset,
                         const std::vector<double>& x_grid, int grid_size, double L,
                         Mesh mesh) {
    const double abscissa = convergence_abscissa(dataset);

    ComparisonReport report;
    report.points.reserve(x_grid.size());
    double rel_sum = 0.0;
    std::size_t converged_count = 0;

    for (double x : x_grid) {
        const double L_eff = L > 0.0 ? L : auto_truncation_length(dataset, x);
        const DirectSolution direct = solve_direct(dataset, x, grid_size, L_eff, mesh);

        ComparisonPoint point;
        point.x = x;
        point.series = eval_kernel(expansion, x, x);
        point.direct = direct.kernel_values.empty() ? cplx(0.0, 0.0) : direct.kernel_values[0];
        point.abs_err = std::abs(point.series - point.direct);
        const double scale = std::abs(point.direct);
        point.rel_err = scale > 0.0
                            ? point.abs_err / scale
                            : (point.abs_err == 0.0 ? 0.0
                                                    : std::numeric_limits<double>::infinity());
        point.series_divergent = x < abscissa - kAbscissaTolerance;
        if (!point.series_divergent) {
            report.max_rel_err = std::max(report.max_rel_err, point.rel_err);
            rel_sum += point.rel_err;
            ++converged_count;
        }
        report.points.push_back(point);
    }
    report.mean_rel_err = converged_count > 0 ? rel_sum / static_cast<double>(converged_count) : 0.0;
    return report;
}

} // namespace marchenko
