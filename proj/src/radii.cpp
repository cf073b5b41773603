#include "landau/radii.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "landau/errors.hpp"
#include "landau/solvers.hpp"

namespace landau {

namespace {

constexpr double kBracketLo = 1e-15;
constexpr double kBracketHi = 1.0 - 1e-15;

/// Sampled strict-decrease check backing a "unique root" claim.
void require_strictly_decreasing(const std::function<double(double)>& f,
                                 const char* what, int n_points = 1000) {
    double prev = f(kBracketLo);
    for (int i = 1; i <= n_points; ++i) {
        const double r = static_cast<double>(i) / (n_points + 1);
        const double v = f(r);
        if (!(v < prev)) {
            std::ostringstream os;
            os << what << ": equation not strictly decreasing near r = " << r
               << " (uniqueness assumption violated)";
            throw MonotonicityDefect(os.str());
        }
        prev = v;
    }
}

} // namespace

void validate(const Theorem1Params& p) {
    if (!(p.lambda1 >= 0.0) || !std::isfinite(p.lambda1)) {
        throw DomainError("Theorem1Params: lambda1 must be finite and >= 0");
    }
    if (!(p.lambda2 > 1.0) || !std::isfinite(p.lambda2)) {
        throw DomainError("Theorem1Params: lambda2 must be finite and > 1");
    }
}

void validate(const Theorem2Params& p) {
    if (!(p.lambda >= 0.0) || !std::isfinite(p.lambda)) {
        throw DomainError("Theorem2Params: lambda must be finite and >= 0");
    }
}

void validate(const Theorem3Params& p) {
    if (!std::isfinite(p.m1) || !std::isfinite(p.m2) || !(p.m1 > 0.0) || !(p.m2 > 0.0)) {
        throw DomainError("Theorem3Params: bounds must be finite and positive");
    }
    if (p.m1 < 1.0 || p.m2 < 1.0) {
        throw DomainError(
            "Theorem3Params: bounds in (0,1) are rejected; the normalization "
            "|a_1| = 1 forces M >= 1 for any admissible G, H");
    }
}

double rho1_quadratic_residual(const Theorem1Params& p, double r) {
    return 2.0 * p.lambda1 * r * r - p.lambda2 * (2.0 * p.lambda1 + p.lambda2) * r + p.lambda2;
}

double rho1(const Theorem1Params& p) {
    validate(p);
    const double l1 = p.lambda1;
    const double l2 = p.lambda2;
    const double b = l2 * (2.0 * l1 + l2);
    const double disc = l2 * l2 * (2.0 * l1 + l2) * (2.0 * l1 + l2) - 8.0 * l1 * l2;
    double r = 2.0 * l2 / (b + std::sqrt(disc));
    // One Newton polish keeps the quadratic residual at rounding level even
    // when the coefficients are large.
    const double dq = 4.0 * l1 * r - b;
    if (dq != 0.0) {
        r -= rho1_quadratic_residual(p, r) / dq;
    }
    return r;
}

double h0(const Theorem1Params& p, double x) {
    return p.lambda2 * p.lambda2 * x - p.lambda1 * x * x +
           (p.lambda2 * p.lambda2 * p.lambda2 - p.lambda2) * std::log1p(-x / p.lambda2);
}

double h0_derivative(const Theorem1Params& p, double x) {
    return (2.0 * p.lambda1 * x * x - p.lambda2 * (2.0 * p.lambda1 + p.lambda2) * x + p.lambda2) /
           (p.lambda2 - x);
}

double sigma1(const Theorem1Params& p) {
    return h0(p, rho1(p));
}

RadiusResult theorem1_radii(const Theorem1Params& p) {
    const double r = rho1(p);
    return RadiusResult{r, h0(p, r), std::abs(rho1_quadratic_residual(p, r)), "quadratic-root"};
}

RadiusResult rho2_sigma2(const Theorem2Params& p) {
    validate(p);
    RadiusResult out;
    if (p.lambda <= 0.5) {
        out.rho = 1.0;
        out.branch = "lambda<=1/2";
    } else {
        out.rho = 1.0 / (2.0 * p.lambda);
        out.branch = "lambda>1/2";
    }
    out.sigma = out.rho - p.lambda * out.rho * out.rho;
    out.residual = 0.0;
    return out;
}

double rho3_equation(const Theorem3Params& p, double r) {
    const double c2 = p.m2 - 1.0 / p.m2;
    const double c1 = p.m1 - 1.0 / p.m1;
    const double om = 1.0 - r;
    return 1.0 - c2 * (2.0 * r - r * r) / (om * om) - c1 * (3.0 - 2.0 * r) * r * r / (om * om) -
           2.0 * r;
}

double rho3(const Theorem3Params& p, double tol) {
    validate(p);
    if (!(tol > 0.0)) throw DomainError("rho3: tol must be > 0");
    auto eq = [&p](double r) { return rho3_equation(p, r); };
    require_strictly_decreasing(eq, "rho3");
    const BisectionResult res = bisect(eq, kBracketLo, kBracketHi);
    if (res.bracket_width > tol || res.residual > tol) {
        std::ostringstream os;
        os << "rho3: bisection did not meet tol=" << tol << " (width=" << res.bracket_width
           << ", residual=" << res.residual << ")";
        throw Error(os.str());
    }
    return res.root;
}

double sigma3(const Theorem3Params& p, double rho3_value) {
    validate(p);
    if (!(rho3_value > 0.0 && rho3_value < 1.0)) {
        throw DomainError("sigma3: rho3 must lie in (0, 1)");
    }
    const double r = rho3_value;
    const double c2 = p.m2 - 1.0 / p.m2;
    const double c1 = p.m1 - 1.0 / p.m1;
    return r - r * r - c2 * r * r / (1.0 - r) - c1 * r * r * r / (1.0 - r);
}

RadiusResult theorem3_radii(const Theorem3Params& p, double tol) {
    const double r = rho3(p, tol);
    return RadiusResult{r, sigma3(p, r), std::abs(rho3_equation(p, r)), "root-bisection"};
}

double theoremC_equation(double lambda1, double lambda2, double r) {
    return lambda2 * (1.0 - lambda2 * r) / (lambda2 - r) - 3.0 * lambda1 * r * r;
}

RadiusResult theoremC_radii(double lambda1, double lambda2, double tol) {
    validate(Theorem1Params{lambda1, lambda2});
    if (!(tol > 0.0)) throw DomainError("theoremC_radii: tol must be > 0");
    auto eq = [lambda1, lambda2](double r) { return theoremC_equation(lambda1, lambda2, r); };
    require_strictly_decreasing(eq, "theoremC_radii");
    const BisectionResult res = bisect(eq, kBracketLo, kBracketHi);
    if (res.bracket_width > tol || res.residual > tol) {
        throw Error("theoremC_radii: bisection did not meet the requested tolerance");
    }
    const double r3 = res.root;
    const double R3 = lambda2 * lambda2 * r3 +
                      (lambda2 * lambda2 * lambda2 - lambda2) * std::log1p(-r3 / lambda2) -
                      lambda1 * r3 * r3 * r3;
    return RadiusResult{r3, R3, res.residual, "root-bisection"};
}

RadiusResult theoremD_radii(double lambda) {
    validate(Theorem2Params{lambda});
    RadiusResult out;
    if (lambda <= 1.0 / 3.0) {
        out.rho = 1.0;
        out.branch = "lambda<=1/3";
    } else {
        out.rho = 1.0 / std::sqrt(3.0 * lambda);
        out.branch = "lambda>1/3";
    }
    out.sigma = out.rho - lambda * out.rho * out.rho * out.rho;
    return out;
}

RadiusResult theoremE_radii(double m) {
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw DomainError("theoremE_radii: requires M > 0");
    }
    const double r5 = 1.0 - std::sqrt(2.0 * m / (2.0 * m + 1.0));
    const double R5 = r5 - r5 * r5 - m * (r5 * r5 + r5 * r5 * r5) / (1.0 - r5);
    return RadiusResult{r5, R5, 0.0, "closed-form"};
}

double theoremA_min_constant(double tol) {
    auto phi = [](double r) { return (3.0 - r * r) / (r * (1.0 - r * r)); };
    const double rstar = golden_min(phi, 1e-6, 1.0 - 1e-6, tol);
    return phi(rstar);
}

RadiusResult theoremA_radius(double m_bound, double tol) {
    if (!(m_bound > 1.0) || !std::isfinite(m_bound)) {
        throw DomainError("theoremA_radius: requires M > 1");
    }
    const double m = theoremA_min_constant(tol);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double r1 = pi2 / (16.0 * m * m_bound);
    return RadiusResult{r1, r1 / 2.0, 0.0, "minimized-m"};
}

RadiusResult theoremB_radius(double lambda_bound) {
    if (!(lambda_bound >= 1.0) || !std::isfinite(lambda_bound)) {
        throw DomainError("theoremB_radius: requires Lambda >= 1");
    }
    const double r2 = std::numbers::pi / (4.0 * (1.0 + lambda_bound));
    return RadiusResult{r2, r2 / 2.0, 0.0, "closed-form"};
}

} // namespace landau
