#include "marchenko/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace marchenko {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_zero(const std::vector<double>& seq) {
    return std::all_of(seq.begin(), seq.end(), [](double v) { return v == 0.0; });
}

} // namespace

std::string to_string(Classification c) {
    switch (c) {
        case Classification::stable: return "stable";
        case Classification::marginal: return "marginal";
        case Classification::unstable: return "unstable";
    }
    return "unknown";
}

double closed_form_exponent(const FourierComponent& component) {
    return std::log(std::abs(component.amplitude) / (2.0 * std::abs(component.wavenumber)));
}

std::vector<cplx> propagate_perturbation(const FourierComponent& component,
                                         const PerturbationEntry& perturbation,
                                         int n_iterations) {
    if (n_iterations < 1)
        throw std::invalid_argument("n_iterations must be >= 1");

    const cplx A = component.amplitude;
    const cplx k = component.wavenumber;
    const cplx rho = A / (cplx(0.0, 2.0) * k);
    const cplx dA = perturbation.delta_amplitude;
    const cplx dk = perturbation.delta_wavenumber;

    std::vector<cplx> sequence;
    sequence.reserve(static_cast<std::size_t>(n_iterations));
    cplx dB = perturbation.delta_seed != cplx(0.0, 0.0) ? perturbation.delta_seed : dA;
    cplx B = -A;
    sequence.push_back(dB);
    for (int j = 1; j < n_iterations; ++j) {
        dB = rho * dB - (B * dA - 2.0 * A * B * dk) / (4.0 * k * k);
        B *= rho;
        sequence.push_back(dB);
    }
    return sequence;
}

double empirical_exponent(const std::vector<double>& error_sequence) {
    if (error_sequence.empty())
        throw std::invalid_argument("empty error sequence");
    if (all_zero(error_sequence)) return -kInf;
    double sum = 0.0;
    for (double v : error_sequence) sum += v;
    return std::log(sum / static_cast<double>(error_sequence.size()));
}

double growth_rate(const std::vector<double>& error_sequence) {
    const std::size_t n = error_sequence.size();
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    const std::size_t m = std::max<std::size_t>(1, n / 2);
    const double first = error_sequence[m - 1];
    const double last = error_sequence[n - 1];
    if (first == 0.0 && last == 0.0) return -kInf;
    if (first == 0.0) return kInf;
    if (last == 0.0) return -kInf;
    return (std::log(last) - std::log(first)) / static_cast<double>(n - m);
}

Classification classify(const LyapunovEntry& entry, double margin) {
    if (margin < 0.0)
        throw std::invalid_argument("margin must be nonnegative");
    double lambda;
    if (entry.error_sequence.empty() || all_zero(entry.error_sequence)) {
        lambda = entry.lambda_closed;
    } else if (entry.error_sequence.size() >= 10) {
        lambda = entry.growth_rate;
        if (std::isnan(lambda)) lambda = entry.lambda_empirical;
    } else {
        lambda = entry.lambda_empirical;
    }
    if (lambda < -margin) return Classification::stable;
    if (lambda > margin) return Classification::unstable;
    return Classification::marginal;
}

LyapunovEntry analyze_component(const FourierComponent& component, double margin,
                                double perturb_rel, int n_iterations) {
    PerturbationEntry perturbation;
    perturbation.delta_amplitude = cplx(perturb_rel * std::abs(component.amplitude), 0.0);

    LyapunovEntry entry;
    entry.component = component;
    entry.lambda_closed = closed_form_exponent(component);
    entry.iterations_used = n_iterations;

    const std::vector<cplx> dB = propagate_perturbation(component, perturbation, n_iterations);
    entry.error_sequence.reserve(dB.size());
    for (const cplx& v : dB) entry.error_sequence.push_back(std::abs(v));

    entry.lambda_empirical = empirical_exponent(entry.error_sequence);
    entry.growth_rate = marchenko::growth_rate(entry.error_sequence);
    entry.classification = classify(entry, margin);
    return entry;
}

FilterResult filter_stable(const SpectralDataset& dataset, double margin,
                           double perturb_rel, int n_iterations) {
    FilterResult result;
    for (const auto& component : dataset.components) {
        LyapunovEntry entry = analyze_component(component, margin, perturb_rel, n_iterations);
        if (entry.classification == Classification::stable)
            result.kept.components.push_back(component);
        else
            result.removed.push_back(component);
        result.report.entries.push_back(std::move(entry));
    }
    result.report.all_unstable = !dataset.empty() && result.kept.empty();
    return result;
}

} // namespace marchenko
