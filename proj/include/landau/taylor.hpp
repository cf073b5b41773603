#ifndef LANDAU_TAYLOR_HPP
#define LANDAU_TAYLOR_HPP

#include <functional>
#include <vector>

#include "landau/complex.hpp"
#include "landau/series.hpp"

namespace landau {

/// Taylor coefficients recovered by a discretized Cauchy integral, together
/// with a per-coefficient aliasing bound.
struct CoefficientExtraction {
    /// Truncated polynomial a_0..a_{n_max}; tail_bound = 0 (the truncation
    /// itself is exact; its distance to the sampled function is described
    /// by coeff_bound plus the function's own tail beyond n_max).
    SeriesFunction series;
    /// coeff_bound[n] = sup_bound * r^{n_samples - n} / (1 - r^{n_samples}).
    std::vector<double> coeff_bound;
};

/// a_n ~ (1 / (n_samples * r^n)) sum_k f(r w^k) w^{-kn}, w = exp(2 pi i / n_samples).
///
/// Requires f analytic on |z| <= sample_radius and bounded by sup_bound on
/// the unit disk (which bounds its Taylor coefficients and hence the
/// aliasing error), sample_radius in (0,1), n_samples >= 4*n_max. Throws
/// IllConditionedError when sample_radius^n_max underflows below 1e-300.
CoefficientExtraction taylor_coefficients(const std::function<Complex(Complex)>& f,
                                          int n_max,
                                          double sample_radius,
                                          int n_samples,
                                          double sup_bound);

} // namespace landau

#endif
