#include "landau/taylor.hpp"

#include <cmath>
#include <numbers>

#include "landau/errors.hpp"

namespace landau {

CoefficientExtraction taylor_coefficients(const std::function<Complex(Complex)>& f,
                                          int n_max,
                                          double sample_radius,
                                          int n_samples,
                                          double sup_bound) {
    if (n_max < 0) {
        throw DomainError("taylor_coefficients: n_max must be >= 0");
    }
    if (!(sample_radius > 0.0 && sample_radius < 1.0)) {
        throw DomainError("taylor_coefficients: sample_radius must lie in (0, 1)");
    }
    if (n_samples < 4 * n_max || n_samples < 4) {
        throw DomainError("taylor_coefficients: n_samples must be >= 4 * n_max");
    }
    if (!(sup_bound >= 0.0) || !std::isfinite(sup_bound)) {
        throw DomainError("taylor_coefficients: sup_bound must be finite and >= 0");
    }
    if (std::pow(sample_radius, n_max) < 1e-300) {
        throw IllConditionedError(
            "taylor_coefficients: sample_radius^n_max underflows; extraction ill-conditioned");
    }

    const double two_pi = 2.0 * std::numbers::pi;
    // Roots-of-unity table indexed mod n_samples keeps the twiddle angles
    // small; cos/sin of k*n*2pi/N directly would lose digits for large k*n.
    std::vector<Complex> unit(static_cast<size_t>(n_samples));
    std::vector<Complex> samples(static_cast<size_t>(n_samples));
    for (int k = 0; k < n_samples; ++k) {
        const double t = two_pi * static_cast<double>(k) / static_cast<double>(n_samples);
        unit[static_cast<size_t>(k)] = Complex{std::cos(t), std::sin(t)};
        samples[static_cast<size_t>(k)] = f(sample_radius * unit[static_cast<size_t>(k)]);
    }

    const double rn_den = 1.0 - std::pow(sample_radius, n_samples);
    std::vector<Complex> coeffs(static_cast<size_t>(n_max) + 1);
    std::vector<double> bounds(static_cast<size_t>(n_max) + 1);
    double rn = 1.0;  // sample_radius^n
    for (int n = 0; n <= n_max; ++n) {
        Complex acc{0.0, 0.0};
        for (int k = 0; k < n_samples; ++k) {
            const long idx = (static_cast<long>(k) * n) % n_samples;  // w^{-kn} = conj(w^{kn})
            acc += samples[static_cast<size_t>(k)] * std::conj(unit[static_cast<size_t>(idx)]);
        }
        coeffs[static_cast<size_t>(n)] = acc / (static_cast<double>(n_samples) * rn);
        // Aliasing: the discrete sum picks up every coefficient n + j*n_samples.
        bounds[static_cast<size_t>(n)] =
            sup_bound * std::pow(sample_radius, n_samples - n) / rn_den;
        rn *= sample_radius;
    }
    return CoefficientExtraction{SeriesFunction(std::move(coeffs), 0.0), std::move(bounds)};
}

} // namespace landau
