#ifndef LANDAU_COMPLEX_HPP
#define LANDAU_COMPLEX_HPP

#include <cmath>
#include <complex>

#include "landau/errors.hpp"

namespace landau {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what) {
    if (!is_finite(z)) {
        throw DomainError(std::string(what) + ": non-finite complex value");
    }
}

/// Principal branch of log, imaginary part in (-pi, pi).
/// Signals a branch-cut error for z on the closed negative real axis.
Complex principal_log(Complex z);

} // namespace landau

#endif
