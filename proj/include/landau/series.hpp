#ifndef LANDAU_SERIES_HPP
#define LANDAU_SERIES_HPP

#include <string>
#include <vector>

#include "landau/complex.hpp"

namespace landau {

/// Analytic function as a truncated power series sum a_n z^n, n = 0..N.
///
/// tail_bound is a guaranteed bound on |sum_{n>N} a_n z^n| on the evaluation
/// disk; 0 when the series is exactly finite. Evaluation at |z| < 1 then
/// differs from the true function by at most tail_bound.
class SeriesFunction {
public:
    explicit SeriesFunction(std::vector<Complex> coeffs, double tail_bound = 0.0);

    /// Horner evaluation of the truncation.
    /// Requires |z| < 1 when tail_bound > 0, |z| <= 1 otherwise.
    Complex eval(Complex z) const;

    /// Derivative evaluated directly (Horner on the shifted coefficients).
    Complex derivative_eval(Complex z) const;

    /// Term-wise derivative series with coefficients n*a_n shifted by one
    /// index. The tail bound propagates by the conservative rule
    /// tail' = tail * N / (1 - eval_radius), valid on the declared
    /// evaluation disk |z| <= eval_radius. Requires truncation order >= 1.
    SeriesFunction derivative(double eval_radius = 0.0) const;

    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    double tail_bound() const { return tail_bound_; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int n) const;

    /// Parse the series file format {"coeffs": [[re, im], ...],
    /// "tail_bound": number}; coefficients indexed from a_0.
    static SeriesFunction from_json_file(const std::string& path);
    static SeriesFunction from_json_text(const std::string& text);

private:
    std::vector<Complex> coeffs_;
    double tail_bound_;
};

} // namespace landau

#endif
