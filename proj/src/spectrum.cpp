#include "marchenko/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <sstream>

#include "marchenko/errors.hpp"

namespace marchenko {

namespace {

std::string describe(const cplx& z) {
    std::ostringstream os;
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
}

} // namespace

SpectralDataset validate_dataset(const std::vector<std::pair<cplx, cplx>>& raw_components) {
    for (const auto& [a, k] : raw_components) {
        (void)a;
        if (!(k.imag() > 0.0)) {
            throw NonDecayingComponent("wavenumber " + describe(k) +
                                       " has non-positive imaginary part");
        }
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
            !std::isfinite(k.real()) || !std::isfinite(k.imag())) {
            throw NonDecayingComponent("non-finite component (" + describe(a) + ", " +
                                       describe(k) + ")");
        }
    }

    SpectralDataset dataset;
    for (const auto& [a, k] : raw_components) {
        if (a == cplx(0.0, 0.0)) continue;
        bool merged = false;
        for (auto& existing : dataset.components) {
            if (std::abs(existing.wavenumber - k) <= kWavenumberMergeTol) {
                existing.amplitude += a;
                merged = true;
                break;
            }
        }
        if (!merged) dataset.components.push_back({a, k});
    }
    // merging can cancel an amplitude exactly; such components are dropped too
    std::vector<FourierComponent> kept;
    kept.reserve(dataset.components.size());
    for (const auto& c : dataset.components)
        if (c.amplitude != cplx(0.0, 0.0)) kept.push_back(c);
    dataset.components = std::move(kept);
    return dataset;
}

cplx evaluate_data(const SpectralDataset& dataset, double x) {
    cplx sum{0.0, 0.0};
    for (const auto& c : dataset.components)
        sum += c.amplitude * std::exp(cplx(0.0, 1.0) * c.wavenumber * x);
    return sum;
}

SpectralDataset rational_to_components(const std::vector<cplx>& poles,
                                       const std::vector<cplx>& residues) {
    if (poles.size() != residues.size()) {
        throw LengthMismatch("got " + std::to_string(poles.size()) + " poles but " +
                             std::to_string(residues.size()) + " residues");
    }
    for (const auto& p : poles) {
        if (!(p.imag() > 0.0)) {
            throw PoleInLowerHalfPlane("pole " + describe(p) +
                                       " is not in the open upper half-plane");
        }
    }
    std::vector<std::pair<cplx, cplx>> raw;
    raw.reserve(poles.size());
    for (std::size_t n = 0; n < poles.size(); ++n)
        raw.emplace_back(cplx(0.0, 1.0) * residues[n], poles[n]);
    return validate_dataset(raw);
}

AmplitudeFit fit_amplitudes(const std::vector<std::pair<double, cplx>>& samples,
                            const std::vector<cplx>& wavenumbers) {
    const std::size_t s = samples.size();
    const std::size_t n = wavenumbers.size();
    if (s < n) {
        throw Underdetermined("need at least " + std::to_string(n) + " samples for " +
                              std::to_string(n) + " wavenumbers, got " + std::to_string(s));
    }
    for (const auto& k : wavenumbers) {
        if (!(k.imag() > 0.0)) {
            throw NonDecayingComponent("fit wavenumber " + describe(k) +
                                       " has non-positive imaginary part");
        }
    }
    if (n == 0) return {SpectralDataset{}, 0.0};

    Eigen::MatrixXcd M(s, n);
    Eigen::VectorXcd b(s);
    for (std::size_t p = 0; p < s; ++p) {
        const double x = samples[p].first;
        b(static_cast<Eigen::Index>(p)) = samples[p].second;
        for (std::size_t q = 0; q < n; ++q)
            M(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) =
                std::exp(cplx(0.0, 1.0) * wavenumbers[q] * x);
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (smin <= 0.0 || smax / smin > kFitConditionLimit) {
        throw RankDeficient("exponential design matrix is numerically singular "
                            "(condition estimate " +
                            std::to_string(smin > 0.0 ? smax / smin : 0.0) + ")");
    }
    Eigen::VectorXcd a = svd.solve(b);
    const double residual = (M * a - b).norm();

    std::vector<std::pair<cplx, cplx>> raw;
    raw.reserve(n);
    for (std::size_t q = 0; q < n; ++q)
        raw.emplace_back(a(static_cast<Eigen::Index>(q)), wavenumbers[q]);
    return {validate_dataset(raw), residual};
}

} // namespace marchenko
