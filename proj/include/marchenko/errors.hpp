#ifndef MARCHENKO_ERRORS_HPP
#define MARCHENKO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace marchenko {

/// A wavenumber with non-positive imaginary part (the data would not decay).
class NonDecayingComponent : public std::runtime_error {
public:
    explicit NonDecayingComponent(const std::string& msg) : std::runtime_error(msg) {}
};

/// A reflection-coefficient pole in the closed lower half-plane.
class PoleInLowerHalfPlane : public std::runtime_error {
public:
    explicit PoleInLowerHalfPlane(const std::string& msg) : std::runtime_error(msg) {}
};

/// Pole and residue lists of different lengths.
class LengthMismatch : public std::runtime_error {
public:
    explicit LengthMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

/// Fewer samples than free amplitudes in a least-squares fit.
class Underdetermined : public std::runtime_error {
public:
    explicit Underdetermined(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerically singular design matrix in a least-squares fit.
class RankDeficient : public std::runtime_error {
public:
    explicit RankDeficient(const std::string& msg) : std::runtime_error(msg) {}
};

/// A recursion denominator i(k_l + k_j) too close to zero.
class DegenerateDenominator : public std::runtime_error {
public:
    explicit DegenerateDenominator(const std::string& msg) : std::runtime_error(msg) {}
};

/// Live term count exceeded the configured cap during expansion.
class TermBudgetExceeded : public std::runtime_error {
public:
    explicit TermBudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// A requested evaluation point lies below the series convergence abscissa.
class DivergentRegion : public std::runtime_error {
public:
    DivergentRegion(const std::string& msg, double abscissa)
        : std::runtime_error(msg), abscissa_(abscissa) {}
    double abscissa() const { return abscissa_; }

private:
    double abscissa_;
};

/// The discretized integral operator is not invertible at this point.
class SingularOperator : public std::runtime_error {
public:
    explicit SingularOperator(const std::string& msg) : std::runtime_error(msg) {}
};

/// The truncation length L leaves a non-negligible data tail.
class TruncationInsufficient : public std::runtime_error {
public:
    explicit TruncationInsufficient(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace marchenko

#endif // MARCHENKO_ERRORS_HPP
