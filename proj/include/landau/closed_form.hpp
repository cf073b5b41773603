#ifndef LANDAU_CLOSED_FORM_HPP
#define LANDAU_CLOSED_FORM_HPP

#include <string>
#include <variant>

#include "landau/complex.hpp"
#include "landau/series.hpp"

namespace landau {

enum class ClosedFormKind {
    identity,   // z
    landau_f0,  // M z (1 - M z) / (M - z)
    lemma3_fn,  // M z (1 - M z^{n-1}) / (M - z^{n-1})
    h1_part,    // L^2 z + (L^3 - L) log(1 - z/L), L > 1
    g1_part,    // -L z, L >= 0
    linear,     // c z
};

/// One of the closed-form analytic functions used by the extremal mappings
/// and coefficient checks. Derivatives are implemented symbolically per kind.
class ClosedFormFunction {
public:
    static ClosedFormFunction identity();
    static ClosedFormFunction landau_f0(double m);
    static ClosedFormFunction lemma3_fn(double m, int n);
    static ClosedFormFunction h1_part(double lambda2);
    static ClosedFormFunction g1_part(double lambda1);
    static ClosedFormFunction linear(Complex c);

    /// Requires |z| <= 1 and z away from any pole of the kind
    /// (|denominator| >= 1e-12, else PoleProximityError).
    Complex eval(Complex z) const;
    Complex derivative_eval(Complex z) const;

    /// Bound for |f| on the closed unit disk (used for tail bounds and as
    /// the default sup bound for coefficient extraction).
    double sup_norm_bound() const;

    /// Exact Taylor coefficients up to `order`, with the geometric tail
    /// bound sup_norm * r^{order+1} / (1 - r) on the disk |z| <= eval_radius
    /// (0 for the polynomial kinds).
    SeriesFunction expand(int order = 60, double eval_radius = 0.5) const;

    ClosedFormKind kind() const { return kind_; }
    double m() const { return m_; }
    int n() const { return n_; }
    std::string describe() const;

private:
    ClosedFormFunction(ClosedFormKind kind, double m, int n, Complex c)
        : kind_(kind), m_(m), n_(n), c_(c) {}

    ClosedFormKind kind_;
    double m_ = 0.0;   // M, Lambda_1 or Lambda_2 depending on kind
    int n_ = 0;        // lemma3 index
    Complex c_{0.0, 0.0};
};

/// Either representation of an analytic factor; evaluation and symbolic
/// differentiation dispatch on the alternative.
class AnalyticFunction {
public:
    AnalyticFunction(SeriesFunction s) : impl_(std::move(s)) {}
    AnalyticFunction(ClosedFormFunction c) : impl_(std::move(c)) {}

    Complex eval(Complex z) const;
    Complex derivative_eval(Complex z) const;
    double sup_norm_bound() const;
    SeriesFunction expand(int order = 60, double eval_radius = 0.5) const;

    bool is_series() const { return std::holds_alternative<SeriesFunction>(impl_); }
    const SeriesFunction& series() const { return std::get<SeriesFunction>(impl_); }
    const ClosedFormFunction& closed_form() const { return std::get<ClosedFormFunction>(impl_); }

private:
    std::variant<SeriesFunction, ClosedFormFunction> impl_;
};

} // namespace landau

#endif
