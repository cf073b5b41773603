#include "landau/maps.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "landau/errors.hpp"

namespace landau {

BiAnalyticMap::BiAnalyticMap(AnalyticFunction g, AnalyticFunction h, MapView view,
                             std::string name)
    : g_(std::move(g)), h_(std::move(h)), view_(view), name_(std::move(name)) {
    if (view_ == MapView::biharmonic) {
        // |z|^2 G1 + H needs G(z)/z analytic, i.e. a_0 = 0.
        if (std::abs(g_.expand(2, 0.5).coeff(0)) != 0.0) {
            throw DomainError("BiAnalyticMap: biharmonic view requires G(0) = 0");
        }
    }
}

Complex BiAnalyticMap::eval(Complex z) const {
    require_finite(z, "BiAnalyticMap::eval");
    return std::conj(z) * g_.eval(z) + h_.eval(z);
}

WirtingerPair BiAnalyticMap::wirtinger(Complex z) const {
    require_finite(z, "BiAnalyticMap::wirtinger");
    if (std::abs(z) >= 1.0) {
        throw DomainError("BiAnalyticMap::wirtinger: requires |z| < 1");
    }
    return WirtingerPair{std::conj(z) * g_.derivative_eval(z) + h_.derivative_eval(z),
                         g_.eval(z)};
}

double BiAnalyticMap::jacobian(Complex z) const {
    const WirtingerPair w = wirtinger(z);
    return std::norm(w.d_z) - std::norm(w.d_zbar);
}

namespace {

/// Sample-grid re-verification of the F1 construction invariants:
/// H'(0) = 1, |H'| < L2 and |G'| = L1 on the disk.
void verify_f1_parts(const AnalyticFunction& g, const AnalyticFunction& h,
                     const Theorem1Params& p) {
    if (std::abs(h.derivative_eval(Complex{0.0, 0.0}) - 1.0) > 1e-12) {
        throw Error("make_F1: H'(0) != 1");
    }
    for (int i = 1; i <= 8; ++i) {
        for (int j = 0; j < 16; ++j) {
            const double r = 0.99 * i / 8.0;
            const double t = 2.0 * std::numbers::pi * j / 16.0;
            const Complex z{r * std::cos(t), r * std::sin(t)};
            if (std::abs(h.derivative_eval(z)) >= p.lambda2) {
                throw Error("make_F1: |H'| >= lambda2 inside the disk");
            }
            if (std::abs(std::abs(g.derivative_eval(z)) - p.lambda1) > 1e-12) {
                throw Error("make_F1: |G'| != lambda1");
            }
        }
    }
}

std::string format_params(const char* name, double a) {
    std::ostringstream os;
    os << name << "(" << a << ")";
    return os.str();
}

std::string format_params(const char* name, double a, double b) {
    std::ostringstream os;
    os << name << "(" << a << "," << b << ")";
    return os.str();
}

} // namespace

BiAnalyticMap make_F1(const Theorem1Params& p) {
    validate(p);
    AnalyticFunction g{ClosedFormFunction::g1_part(p.lambda1)};
    AnalyticFunction h{ClosedFormFunction::h1_part(p.lambda2)};
    verify_f1_parts(g, h, p);
    return BiAnalyticMap(std::move(g), std::move(h), MapView::bi_analytic,
                         format_params("F1", p.lambda1, p.lambda2));
}

BiAnalyticMap make_F2(double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw DomainError("make_F2: requires lambda >= 0");
    }
    AnalyticFunction g{ClosedFormFunction::linear(Complex{lambda, 0.0})};
    AnalyticFunction h{ClosedFormFunction::identity()};
    return BiAnalyticMap(std::move(g), std::move(h), MapView::biharmonic,
                         format_params("F2", lambda));
}

BiAnalyticMap make_F3() {
    AnalyticFunction g{ClosedFormFunction::identity()};
    AnalyticFunction h{ClosedFormFunction::identity()};
    return BiAnalyticMap(std::move(g), std::move(h), MapView::biharmonic, "F3");
}

BiAnalyticMap make_F0(const Theorem1Params& p) {
    validate(p);
    // G(z) = -L1 z^2, an exactly finite series.
    AnalyticFunction g{SeriesFunction({Complex{0.0, 0.0}, Complex{0.0, 0.0},
                                       Complex{-p.lambda1, 0.0}})};
    AnalyticFunction h{ClosedFormFunction::h1_part(p.lambda2)};
    return BiAnalyticMap(std::move(g), std::move(h), MapView::biharmonic,
                         format_params("F0", p.lambda1, p.lambda2));
}

BiAnalyticMap make_analytic_map(AnalyticFunction h, std::string name) {
    AnalyticFunction g{SeriesFunction({Complex{0.0, 0.0}})};
    return BiAnalyticMap(std::move(g), std::move(h), MapView::bi_analytic, std::move(name));
}

} // namespace landau
