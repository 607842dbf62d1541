#include "marchenko/recursion.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "marchenko/errors.hpp"

namespace marchenko {

int KernelTerm::total_degree() const {
    return std::accumulate(x_exponents.begin(), x_exponents.end(), 0);
}

int KernelTerm::generation() const { return (total_degree() + 1) / 2; }

std::vector<KernelTerm> seed_terms(const SpectralDataset& dataset) {
    const std::size_t n = dataset.size();
    std::vector<KernelTerm> seeds;
    seeds.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        KernelTerm t;
        t.amplitude = -dataset.components[i].amplitude;
        t.x_exponents.assign(n, 0);
        t.x_exponents[i] = 1;
        t.y_index = static_cast<int>(i);
        seeds.push_back(std::move(t));
    }
    return seeds;
}

KernelTerm apply_rule(const KernelTerm& term, int rule_index, const SpectralDataset& dataset) {
    const int n = static_cast<int>(dataset.size());
    if (rule_index < 0 || rule_index >= n)
        throw std::invalid_argument("rule index " + std::to_string(rule_index) +
                                    " outside [0, " + std::to_string(n) + ")");
    const int l = term.y_index;
    const cplx k_l = dataset.components[l].wavenumber;
    const cplx k_j = dataset.components[rule_index].wavenumber;
    if (std::abs(k_l + k_j) < kDenominatorFloor)
        throw DegenerateDenominator("k_" + std::to_string(l) + " + k_" +
                                    std::to_string(rule_index) + " vanishes");
    KernelTerm out;
    out.amplitude =
        dataset.components[rule_index].amplitude * term.amplitude / (cplx(0.0, 1.0) * (k_l + k_j));
    out.x_exponents = term.x_exponents;
    out.x_exponents[l] += 1;
    out.x_exponents[rule_index] += 1;
    out.y_index = rule_index;
    return out;
}

std::vector<KernelTerm> iterate(const std::vector<KernelTerm>& terms,
                                const SpectralDataset& dataset) {
    const int n = static_cast<int>(dataset.size());
    std::map<TermKey, cplx> merged;
    for (const auto& t : terms) {
        for (int j = 0; j < n; ++j) {
            KernelTerm next = apply_rule(t, j, dataset);
            merged[{std::move(next.x_exponents), next.y_index}] += next.amplitude;
        }
    }
    std::vector<KernelTerm> out;
    out.reserve(merged.size());
    for (const auto& [key, amp] : merged) {
        KernelTerm t;
        t.amplitude = amp;
        t.x_exponents = key.first;
        t.y_index = key.second;
        out.push_back(std::move(t));
    }
    return out;
}

KernelExpansion expand(const SpectralDataset& dataset, int max_generation,
                       double prune_tolerance, std::size_t term_budget) {
    if (max_generation < 1)
        throw std::invalid_argument("max_generation must be >= 1");
    if (prune_tolerance < 0.0)
        throw std::invalid_argument("prune_tolerance must be nonnegative");

    KernelExpansion expansion;
    expansion.dataset = dataset;
    expansion.max_generation = max_generation;
    expansion.prune_tolerance = prune_tolerance;

    auto prune = [&](std::vector<KernelTerm>& live) {
        std::vector<KernelTerm> kept;
        kept.reserve(live.size());
        for (auto& t : live)
            if (std::abs(t.amplitude) >= prune_tolerance) kept.push_back(std::move(t));
        live = std::move(kept);
    };

    std::vector<KernelTerm> live = seed_terms(dataset);
    prune(live);
    for (int g = 1; g <= max_generation; ++g) {
        if (live.empty()) {
            expansion.terminated_at = g;
            break;
        }
        if (live.size() > term_budget)
            throw TermBudgetExceeded("generation " + std::to_string(g) + " holds " +
                                     std::to_string(live.size()) + " terms, budget " +
                                     std::to_string(term_budget));
        for (const auto& t : live)
            expansion.terms[{t.x_exponents, t.y_index}] += t.amplitude;
        if (g == max_generation) break;
        live = iterate(live, dataset);
        prune(live);
    }
    return expansion;
}

} // namespace marchenko
