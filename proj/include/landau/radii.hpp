#ifndef LANDAU_RADII_HPP
#define LANDAU_RADII_HPP

#include <string>

namespace landau {

// Parameter tuples. Validation throws DomainError; the M >= 1 restriction
// on Theorem3Params is forced by the normalization a_1 = 1 (a bound M < 1
// is impossible for a function fixing the derivative at the origin), so
// values in (0,1) are rejected with a message saying so.

struct Theorem1Params {
    double lambda1 = 0.0;  // bound on |G'|, >= 0
    double lambda2 = 2.0;  // bound on |H'|, > 1
};

struct Theorem2Params {
    double lambda = 0.0;   // bound on |G'|, >= 0
};

struct Theorem3Params {
    double m1 = 1.0;       // bound on |G|, >= 1
    double m2 = 1.0;       // bound on |H|, >= 1
};

void validate(const Theorem1Params& p);
void validate(const Theorem2Params& p);
void validate(const Theorem3Params& p);

/// Univalence radius rho, covering radius sigma, root residual (0 for pure
/// closed forms) and the piecewise/branch tag that applied.
struct RadiusResult {
    double rho = 0.0;
    double sigma = 0.0;
    double residual = 0.0;
    std::string branch;
};

/// Smaller root of 2*L1*r^2 - L2*(2*L1+L2)*r + L2 in (0,1), evaluated in the
/// cancellation-free quotient form and polished by one Newton step so that
/// the quadratic residual stays at rounding level.
double rho1(const Theorem1Params& p);

/// Residual of the defining quadratic at r (diagnostic).
double rho1_quadratic_residual(const Theorem1Params& p, double r);

/// sigma1 = L2^2 rho1 - L1 rho1^2 + (L2^3 - L2) ln(1 - rho1/L2).
double sigma1(const Theorem1Params& p);

/// The auxiliary real function whose value at rho1 is sigma1:
/// h0(x) = L2^2 x - L1 x^2 + (L2^3 - L2) ln(1 - x/L2), x in [0, 1].
double h0(const Theorem1Params& p, double x);
double h0_derivative(const Theorem1Params& p, double x);

RadiusResult theorem1_radii(const Theorem1Params& p);

/// rho2 = 1 for lambda <= 1/2, else 1/(2 lambda); sigma2 = rho2 - lambda rho2^2.
RadiusResult rho2_sigma2(const Theorem2Params& p);

/// Unique root in (0,1) of
/// 1 - (M2 - 1/M2)(2r - r^2)/(1-r)^2 - (M1 - 1/M1)(3 - 2r)r^2/(1-r)^2 - 2r = 0,
/// found by bisection on a verified sign-change bracket. A sampled
/// strict-decrease check backs the uniqueness claim; violations throw
/// MonotonicityDefect rather than being ignored.
double rho3(const Theorem3Params& p, double tol = 1e-13);

double rho3_equation(const Theorem3Params& p, double r);

/// sigma3 = r - r^2 - (M2 - 1/M2) r^2/(1-r) - (M1 - 1/M1) r^3/(1-r).
double sigma3(const Theorem3Params& p, double rho3_value);

RadiusResult theorem3_radii(const Theorem3Params& p, double tol = 1e-13);

/// Prior-work comparison radii.

/// Root of L2 (1 - L2 r)/(L2 - r) - 3 L1 r^2 = 0 and
/// R3 = L2^2 r + (L2^3 - L2) ln(1 - r/L2) - L1 r^3.
RadiusResult theoremC_radii(double lambda1, double lambda2, double tol = 1e-13);
double theoremC_equation(double lambda1, double lambda2, double r);

/// r4 = 1 for lambda <= 1/3, else 1/sqrt(3 lambda); R4 = r4 - lambda r4^3.
RadiusResult theoremD_radii(double lambda);

/// r5 = 1 - sqrt(2M/(2M+1)); R5 = r5 - r5^2 - M (r5^2 + r5^3)/(1 - r5).
RadiusResult theoremE_radii(double m);

/// Minimum of (3 - r^2)/(r (1 - r^2)) on (0,1), computed at runtime by
/// golden-section search rather than hard-coding its approximate value.
double theoremA_min_constant(double tol = 1e-10);

/// r1 = pi^2 / (16 m M) with the minimized m; schlicht radius r1/2.
RadiusResult theoremA_radius(double m_bound, double tol = 1e-10);

/// r2 = pi / (4 (1 + lambda)); schlicht radius r2/2.
RadiusResult theoremB_radius(double lambda_bound);

} // namespace landau

#endif
