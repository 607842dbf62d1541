#ifndef MARCHENKO_SPECTRUM_HPP
#define MARCHENKO_SPECTRUM_HPP

#include <complex>
#include <utility>
#include <vector>

namespace marchenko {

using cplx = std::complex<double>;

/// One exponential term A_n * exp(i k_n x) of the scattering data.
/// Invariants: Im(k_n) > 0 (decay) and A_n != 0.
struct FourierComponent {
    cplx amplitude;   ///< A_n, dimensionless reflection amplitude
    cplx wavenumber;  ///< k_n, inverse-length units
};

/// A finite, ordered list of Fourier components defining A(x).
/// No two components share a wavenumber (duplicates are merged on
/// construction by validate_dataset).
struct SpectralDataset {
    std::vector<FourierComponent> components;

    std::size_t size() const { return components.size(); }
    bool empty() const { return components.empty(); }
};

/// Absolute wavenumber distance below which two components are considered
/// duplicates and merged by amplitude addition.
inline constexpr double kWavenumberMergeTol = 1e-12;

/// Condition-number bound above which an exponential design matrix is
/// treated as numerically singular.
inline constexpr double kFitConditionLimit = 1e12;

/// Builds a SpectralDataset from raw (amplitude, wavenumber) pairs.
///
/// All wavenumbers must have strictly positive imaginary part
/// (throws NonDecayingComponent otherwise). Zero-amplitude entries are
/// dropped; entries whose wavenumbers coincide within kWavenumberMergeTol
/// are merged by summing amplitudes, keeping first-occurrence order.
/// An empty input is legal and yields the empty dataset (zero kernel).
SpectralDataset validate_dataset(const std::vector<std::pair<cplx, cplx>>& raw_components);

/// Evaluates A(x) = sum_n A_n exp(i k_n x).
cplx evaluate_data(const SpectralDataset& dataset, double x);

/// Converts a rational reflection coefficient R(k) = sum_n r_n / (k - p_n),
/// with all poles p_n in the open upper half-plane, into Fourier components
/// A_n = i * r_n, k_n = p_n (Fourier inversion closes the contour upward
/// for positive argument). Zero residues are dropped.
///
/// Throws PoleInLowerHalfPlane if any Im(p_n) <= 0, LengthMismatch if the
/// lists differ in length.
SpectralDataset rational_to_components(const std::vector<cplx>& poles,
                                       const std::vector<cplx>& residues);

/// Result of a linear least-squares amplitude fit.
struct AmplitudeFit {
    SpectralDataset dataset;  ///< fitted components (zero amplitudes dropped)
    double residual_norm;     ///< l2 norm of the fit residual
};

/// Fits amplitudes A_n for fixed wavenumbers k_n so that
/// sum_n A_n exp(i k_n x_s) matches the samples in the least-squares sense.
///
/// Throws Underdetermined if there are fewer samples than wavenumbers,
/// NonDecayingComponent if a wavenumber has Im <= 0, and RankDeficient if
/// the design matrix condition estimate exceeds kFitConditionLimit.
AmplitudeFit fit_amplitudes(const std::vector<std::pair<double, cplx>>& samples,
                            const std::vector<cplx>& wavenumbers);

} // namespace marchenko

#endif // MARCHENKO_SPECTRUM_HPP
