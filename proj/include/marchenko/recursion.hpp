#ifndef MARCHENKO_RECURSION_HPP
#define MARCHENKO_RECURSION_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "marchenko/spectrum.hpp"

namespace marchenko {

/// One exponential term of the kernel expansion,
///
///   amplitude * exp(i * (sum_i m_i k_i) * x) * exp(i * k_l * y),
///
/// where m = x_exponents and l = y_index (0-based component index).
/// Invariants: x_exponents[y_index] >= 1, and the total degree
/// (sum_i m_i) + 1 equals 2 * generation.
struct KernelTerm {
    cplx amplitude;
    std::vector<int> x_exponents;  ///< m_i, multiplicity of k_i in the x-exponential
    int y_index;                   ///< l, the component carrying the y-dependence

    int total_degree() const;
    int generation() const;  ///< (total_degree + 1) / 2
};

/// Map key identifying a term's exponential basis function.
using TermKey = std::pair<std::vector<int>, int>;

/// The merged collection of kernel terms up to a truncation generation.
struct KernelExpansion {
    SpectralDataset dataset;
    std::map<TermKey, cplx> terms;  ///< basis function -> merged amplitude
    int max_generation = 0;
    double prune_tolerance = 0.0;
    /// Generation at which pruning removed every live term (0 = ran to
    /// max_generation with live terms remaining).
    int terminated_at = 0;
};

inline constexpr double kDefaultPruneTolerance = 1e-14;
inline constexpr int kDefaultMaxGeneration = 40;
inline constexpr std::size_t kDefaultTermBudget = 1000000;

/// Minimum |k_l + k_j| below which a recursion denominator is rejected.
/// Cannot occur when all Im(k) > 0; checked defensively.
inline constexpr double kDenominatorFloor = 1e-14;

/// Generation-1 terms: component n contributes amplitude -A_n with a unit
/// x-exponent at n and y_index n. Empty dataset yields an empty list.
std::vector<KernelTerm> seed_terms(const SpectralDataset& dataset);

/// Applies recursion rule j (0-based) to one term:
///
///   amplitude' = A_j * amplitude / (i * (k_l + k_j))
///   x_exponents' = x_exponents + unit(l) + unit(j)
///   y_index' = j
///
/// raising the total degree by exactly 2. Throws DegenerateDenominator if
/// |k_l + k_j| < kDenominatorFloor.
KernelTerm apply_rule(const KernelTerm& term, int rule_index, const SpectralDataset& dataset);

/// Applies every rule j in [0, N) to every input term and merges outputs
/// sharing a basis function by amplitude addition. Output is ordered
/// lexicographically by (x_exponents, y_index).
std::vector<KernelTerm> iterate(const std::vector<KernelTerm>& terms,
                                const SpectralDataset& dataset);

/// Runs the full expansion: seeds, advances max_generation - 1 times, prunes
/// amplitudes below prune_tolerance after each merge, and unions all
/// generations. Stops early when a generation prunes to nothing (recorded in
/// terminated_at). Throws TermBudgetExceeded if a generation's live term
/// count exceeds term_budget.
KernelExpansion expand(const SpectralDataset& dataset,
                       int max_generation = kDefaultMaxGeneration,
                       double prune_tolerance = kDefaultPruneTolerance,
                       std::size_t term_budget = kDefaultTermBudget);

} // namespace marchenko

#endif // MARCHENKO_RECURSION_HPP
