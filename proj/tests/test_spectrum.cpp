#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "marchenko/errors.hpp"
#include "marchenko/spectrum.hpp"
#include "support/reference.hpp"

using marchenko::cplx;
using marchenko::SpectralDataset;

namespace {

const cplx I{0.0, 1.0};

SpectralDataset make(std::vector<std::pair<cplx, cplx>> raw) {
    return marchenko::validate_dataset(raw);
}

} // namespace

TEST_CASE("validate keeps well-formed components in order") {
    const SpectralDataset d = make({{cplx(2.0, 0.0), cplx(0.0, 10.0)},
                                    {cplx(-1.0, 0.5), cplx(0.3, 1.1)}});
    REQUIRE(d.size() == 2);
    CHECK(d.components[0].amplitude == cplx(2.0, 0.0));
    CHECK(d.components[0].wavenumber == cplx(0.0, 10.0));
    CHECK(d.components[1].amplitude == cplx(-1.0, 0.5));
    CHECK(d.components[1].wavenumber == cplx(0.3, 1.1));
}

TEST_CASE("validate accepts the empty dataset") {
    const SpectralDataset d = make({});
    CHECK(d.empty());
    CHECK(marchenko::evaluate_data(d, 0.7) == cplx(0.0, 0.0));
}

TEST_CASE("validate rejects non-decaying wavenumbers") {
    CHECK_THROWS_AS(make({{cplx(1.0, 0.0), cplx(1.0, 0.0)}}), marchenko::NonDecayingComponent);
    CHECK_THROWS_AS(make({{cplx(1.0, 0.0), cplx(0.0, -1.0)}}), marchenko::NonDecayingComponent);
    CHECK_THROWS_AS(make({{cplx(1.0, 0.0), cplx(0.5, 0.0)}}), marchenko::NonDecayingComponent);
    // rejected even when the amplitude is zero: validation precedes dropping
    CHECK_THROWS_AS(make({{cplx(0.0, 0.0), cplx(0.0, -1.0)}}), marchenko::NonDecayingComponent);
}

TEST_CASE("validate rejects non-finite entries") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(make({{cplx(nan, 0.0), cplx(0.0, 1.0)}}), marchenko::NonDecayingComponent);
    CHECK_THROWS_AS(make({{cplx(1.0, 0.0), cplx(0.0, inf)}}), marchenko::NonDecayingComponent);
}

TEST_CASE("validate drops zero amplitudes") {
    const SpectralDataset d = make({{cplx(0.0, 0.0), cplx(0.0, 1.0)},
                                    {cplx(1.0, 0.0), cplx(0.0, 2.0)}});
    REQUIRE(d.size() == 1);
    CHECK(d.components[0].wavenumber == cplx(0.0, 2.0));
}

TEST_CASE("validate merges duplicate wavenumbers at first occurrence") {
    const SpectralDataset d = make({{cplx(1.0, 0.0), cplx(0.0, 2.0)},
                                    {cplx(1.0, 0.0), cplx(0.0, 1.0)},
                                    {cplx(1.0, 0.0), cplx(0.0, 2.0 + 1e-13)}});
    REQUIRE(d.size() == 2);
    CHECK(d.components[0].wavenumber == cplx(0.0, 2.0));
    CHECK(d.components[0].amplitude == cplx(2.0, 0.0));
    CHECK(d.components[1].wavenumber == cplx(0.0, 1.0));
}

TEST_CASE("validate drops components that cancel after merging") {
    const SpectralDataset d = make({{cplx(1.0, 0.0), cplx(0.0, 1.0)},
                                    {cplx(-1.0, 0.0), cplx(0.0, 1.0)}});
    CHECK(d.empty());
}

TEST_CASE("evaluate_data matches direct exponential sums") {
    const SpectralDataset d = make({{cplx(2.0, 0.0), cplx(0.0, 10.0)}});
    const cplx got = marchenko::evaluate_data(d, 0.3);
    const cplx want = 2.0 * std::exp(I * cplx(0.0, 10.0) * 0.3);
    CHECK(std::abs(got - want) == 0.0);
    CHECK(std::abs(got - 2.0 * std::exp(-3.0)) < 1e-15);
}

TEST_CASE("evaluate_data is linear in the components") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> decay(0.1, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::pair<cplx, cplx> c1{cplx(u(rng), u(rng)), cplx(u(rng), decay(rng))};
        const std::pair<cplx, cplx> c2{cplx(u(rng), u(rng)), cplx(u(rng), decay(rng))};
        if (std::abs(c1.second - c2.second) < 1e-6) continue;
        const double x = u(rng);
        const cplx sum = marchenko::evaluate_data(make({c1, c2}), x);
        const cplx parts =
            marchenko::evaluate_data(make({c1}), x) + marchenko::evaluate_data(make({c2}), x);
        CHECK(std::abs(sum - parts) < 1e-12 * (1.0 + std::abs(sum)));
    }
}

TEST_CASE("single-component data decays monotonically in magnitude") {
    const SpectralDataset d = make({{cplx(1.5, -0.7), cplx(0.4, 2.0)}});
    double prev = std::abs(marchenko::evaluate_data(d, 0.0));
    for (int i = 1; i <= 20; ++i) {
        const double cur = std::abs(marchenko::evaluate_data(d, 0.1 * i));
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("rational conversion maps poles and residues") {
    const SpectralDataset d = marchenko::rational_to_components(
        {cplx(0.3, 1.1), cplx(-1.2, 2.5)}, {cplx(0.7, -0.2), cplx(1.5, 0.4)});
    REQUIRE(d.size() == 2);
    CHECK(std::abs(d.components[0].amplitude - I * cplx(0.7, -0.2)) == 0.0);
    CHECK(d.components[0].wavenumber == cplx(0.3, 1.1));
    CHECK(std::abs(d.components[1].amplitude - I * cplx(1.5, 0.4)) == 0.0);
}

TEST_CASE("rational conversion rejects bad inputs") {
    CHECK_THROWS_AS(marchenko::rational_to_components({cplx(1.0, -0.5)}, {cplx(1.0, 0.0)}),
                    marchenko::PoleInLowerHalfPlane);
    CHECK_THROWS_AS(marchenko::rational_to_components({cplx(1.0, 0.0)}, {cplx(1.0, 0.0)}),
                    marchenko::PoleInLowerHalfPlane);
    CHECK_THROWS_AS(
        marchenko::rational_to_components({cplx(0.0, 1.0), cplx(0.0, 2.0)}, {cplx(1.0, 0.0)}),
        marchenko::LengthMismatch);
}

TEST_CASE("rational conversion drops zero residues") {
    const SpectralDataset d = marchenko::rational_to_components(
        {cplx(0.0, 1.0), cplx(0.0, 2.0)}, {cplx(0.0, 0.0), cplx(1.0, 0.0)});
    REQUIRE(d.size() == 1);
    CHECK(d.components[0].wavenumber == cplx(0.0, 2.0));
}

// Frozen values of (1/2pi) integral R(k) e^{ikx} dk for the rational
// function R(k) = sum_n r_n / (k - p_n), computed by real-line trapezoid
// quadrature (half-width 8000, step 0.02) with third-order analytic
// endpoint corrections; quadrature self-agreement is below 1e-8.
TEST_CASE("rational conversion agrees with numerical Fourier inversion, two poles") {
    const SpectralDataset d = marchenko::rational_to_components(
        {cplx(0.3, 1.1), cplx(-1.2, 2.5)}, {cplx(0.7, -0.2), cplx(1.5, 0.4)});
    const struct {
        double x;
        cplx value;
    } table[] = {
        {0.2, {0.10713176098460472, 1.5117657026541156}},
        {0.4, {0.1982073880304669, 1.0204156692155872}},
        {0.6, {0.19052071130111936, 0.6849342263937482}},
        {0.8, {0.1468136760758801, 0.4625175147328141}},
        {1.0, {0.097603672777107, 0.3174955256922137}},
        {1.2, {0.055574138519370896, 0.22331357878819744}},
        {1.4, {0.02430120983109815, 0.16157786129197596}},
        {1.5999999999999999, {0.003229855764052121, 0.12019544216374346}},
        {1.7999999999999998, {-0.009682760561436464, 0.09152794838605222}},
        {1.9999999999999998, {-0.01669069892441232, 0.07089539746647948}},
        {2.1999999999999997, {-0.01973320259470541, 0.05548801721383853}},
        {2.4, {-0.02028885771713383, 0.04363056077058414}},
        {2.6, {-0.019400603760161592, 0.034312728471741265}},
        {2.8, {-0.017761338087200453, 0.026903561478446348}},
        {3.0, {-0.015807448704860484, 0.020985299890578308}},
    };
    for (const auto& row : table) {
        const cplx got = marchenko::evaluate_data(d, row.x);
        CHECK(std::abs(got - row.value) < 1e-6);
    }
}

TEST_CASE("rational conversion agrees with numerical Fourier inversion, one pole") {
    const SpectralDataset d =
        marchenko::rational_to_components({cplx(0.0, 10.0)}, {cplx(0.0, -2.0)});
    REQUIRE(d.size() == 1);
    CHECK(std::abs(d.components[0].amplitude - cplx(2.0, 0.0)) == 0.0);
    const struct {
        double x;
        cplx value;
    } table[] = {
        {0.2, {0.27067056613905605, 8.300954925369806e-12}},
        {0.4, {0.03663127748718144, 3.962058777050629e-12}},
        {0.6, {0.00495750584233144, -1.30422980272583e-11}},
        {0.8, {0.0006709234698890357, 1.164595724283073e-11}},
        {1.0, {9.080004388124411e-05, -8.948170936057402e-13}},
    };
    for (const auto& row : table) {
        const cplx got = marchenko::evaluate_data(d, row.x);
        CHECK(std::abs(got - row.value) < 1e-6);
    }
}

TEST_CASE("fit recovers amplitudes from exact samples") {
    std::vector<std::pair<double, cplx>> samples;
    for (int i = 0; i < 20; ++i) {
        const double x = i / 19.0;
        samples.emplace_back(x, 2.0 * std::exp(I * cplx(0.0, 10.0) * x));
    }
    const marchenko::AmplitudeFit fit = marchenko::fit_amplitudes(samples, {cplx(0.0, 10.0)});
    REQUIRE(fit.dataset.size() == 1);
    CHECK(std::abs(fit.dataset.components[0].amplitude - cplx(2.0, 0.0)) < 1e-8);
    CHECK(fit.residual_norm < 1e-10);
}

TEST_CASE("fit recovers two complex amplitudes") {
    const cplx a0(1.0, 0.5), a1(-0.3, 0.0);
    const cplx k0(0.0, 2.0), k1(0.0, 1.0);
    std::vector<std::pair<double, cplx>> samples;
    for (int i = 0; i < 25; ++i) {
        const double x = 2.0 * i / 24.0;
        samples.emplace_back(x, a0 * std::exp(I * k0 * x) + a1 * std::exp(I * k1 * x));
    }
    const marchenko::AmplitudeFit fit = marchenko::fit_amplitudes(samples, {k0, k1});
    REQUIRE(fit.dataset.size() == 2);
    CHECK(std::abs(fit.dataset.components[0].amplitude - a0) < 1e-8);
    CHECK(std::abs(fit.dataset.components[1].amplitude - a1) < 1e-8);
    CHECK(fit.residual_norm < 1e-10);
}

TEST_CASE("fit of all-zero samples yields the empty dataset") {
    std::vector<std::pair<double, cplx>> samples;
    for (int i = 0; i < 5; ++i) samples.emplace_back(0.25 * i, cplx(0.0, 0.0));
    const marchenko::AmplitudeFit fit = marchenko::fit_amplitudes(samples, {cplx(0.0, 1.0)});
    CHECK(fit.dataset.empty());
    CHECK(fit.residual_norm < 1e-14);
}

TEST_CASE("fit rejects underdetermined and degenerate systems") {
    const std::vector<std::pair<double, cplx>> one = {{0.0, cplx(1.0, 0.0)}};
    CHECK_THROWS_AS(marchenko::fit_amplitudes(one, {cplx(0.0, 1.0), cplx(0.0, 2.0)}),
                    marchenko::Underdetermined);

    std::vector<std::pair<double, cplx>> samples;
    for (int i = 0; i < 6; ++i) samples.emplace_back(0.2 * i, cplx(1.0, 0.0));
    CHECK_THROWS_AS(marchenko::fit_amplitudes(samples, {cplx(0.0, 1.0), cplx(0.0, 1.0)}),
                    marchenko::RankDeficient);
    CHECK_THROWS_AS(marchenko::fit_amplitudes(samples, {cplx(0.0, -1.0)}),
                    marchenko::NonDecayingComponent);
}
