#ifndef MARCHENKO_STABILITY_HPP
#define MARCHENKO_STABILITY_HPP

#include <string>
#include <vector>

#include "marchenko/spectrum.hpp"

namespace marchenko {

/// Data uncertainties for one component: amplitude error, wavenumber error,
/// and an optional direct seed error on the first expansion coefficient.
struct PerturbationEntry {
    cplx delta_amplitude{0.0, 0.0};
    cplx delta_wavenumber{0.0, 0.0};
    cplx delta_seed{0.0, 0.0};
};

/// Per-dataset perturbation specification; vectors run parallel to the
/// dataset's component list.
struct PerturbationSpec {
    std::vector<PerturbationEntry> entries;
};

enum class Classification { stable, marginal, unstable };

std::string to_string(Classification c);

/// Stability analysis results for one component.
struct LyapunovEntry {
    FourierComponent component;
    double lambda_closed = 0.0;     ///< log |A / (2k)|
    double lambda_empirical = 0.0;  ///< log of the mean error magnitude
    double growth_rate = 0.0;       ///< per-step log-slope of the error sequence
    std::vector<double> error_sequence;  ///< |dB^(j)|, j = 1..iterations_used
    Classification classification = Classification::marginal;
    int iterations_used = 0;
};

/// Full per-component report plus the all-unstable warning flag.
struct LyapunovReport {
    std::vector<LyapunovEntry> entries;
    bool all_unstable = false;  ///< true when a nonempty dataset keeps nothing
};

inline constexpr double kDefaultMargin = 1e-6;
inline constexpr double kDefaultPerturbRel = 1e-6;
inline constexpr int kDefaultIterations = 50;

/// Closed-form Lyapunov exponent: the log-magnitude of the per-generation
/// multiplier A / (2ik) of the single-component diagonal recursion,
/// log(|A| / (2 |k|)).
double closed_form_exponent(const FourierComponent& component);

/// Propagates one component's data error through the diagonal recursion:
///
///   dB^(1)   = delta_seed (or delta_amplitude when the seed is zero)
///   dB^(j+1) = (A/(2ik)) dB^(j) - (B^(j) dA - 2 A B^(j) dk) / (4 k^2)
///
/// with the unperturbed coefficients B^(j) = -A (A/(2ik))^(j-1). Returns
/// the sequence dB^(1..n_iterations). Requires n_iterations >= 1.
std::vector<cplx> propagate_perturbation(const FourierComponent& component,
                                         const PerturbationEntry& perturbation,
                                         int n_iterations);

/// log of the arithmetic mean of the error magnitudes, exactly. Returns
/// -infinity when every entry is zero (the perturbation vanished; the
/// sentinel stands in for a number). Requires a nonempty sequence.
double empirical_exponent(const std::vector<double>& error_sequence);

/// Two-point log-slope estimator of the per-step growth:
/// (log s[n] - log s[m]) / (n - m) with m = max(1, n/2), 1-based. Returns
/// -infinity if the sequence has decayed to zero at the endpoints, NaN for
/// sequences shorter than 2.
double growth_rate(const std::vector<double>& error_sequence);

/// Classifies by the exponent lambda: stable if lambda < -margin, unstable
/// if lambda > margin, marginal otherwise. Uses the growth rate when the
/// error sequence has >= 10 entries, the empirical exponent when a shorter
/// nonzero sequence is available, and the closed form otherwise (including
/// the all-zero-sequence case).
Classification classify(const LyapunovEntry& entry, double margin = kDefaultMargin);

/// Runs the full single-component analysis: default perturbation
/// dA = perturb_rel * |A|, n_iterations steps, classification with margin.
LyapunovEntry analyze_component(const FourierComponent& component,
                                double margin = kDefaultMargin,
                                double perturb_rel = kDefaultPerturbRel,
                                int n_iterations = kDefaultIterations);

/// Result of extracting the stable sub-dataset.
struct FilterResult {
    SpectralDataset kept;
    std::vector<FourierComponent> removed;  ///< unstable and marginal components
    LyapunovReport report;
};

/// Keeps exactly the components classified stable; marginal components are
/// removed (conservative). An all-unstable dataset yields an empty dataset
/// and sets report.all_unstable.
FilterResult filter_stable(const SpectralDataset& dataset,
                           double margin = kDefaultMargin,
                           double perturb_rel = kDefaultPerturbRel,
                           int n_iterations = kDefaultIterations);

} // namespace marchenko

#endif // MARCHENKO_STABILITY_HPP
