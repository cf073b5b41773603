#ifndef LANDAU_CERTIFY_HPP
#define LANDAU_CERTIFY_HPP

#include <cstdint>

#include "landau/maps.hpp"
#include "landau/report.hpp"
#include "landau/series.hpp"

namespace landau {

/// Grid-level injectivity corroboration: all pairs of grid points with
/// |z1 - z2| >= min_sep must have image separation > tolerance. Image points
/// are spatially hashed with cell size = tolerance and only candidate pairs
/// from neighboring cells are re-examined at full precision, so the scan is
/// O(N) in the common no-collision case. A pass is labeled "grid-level":
/// corroboration, not proof. Fails carry a witness pair. measured is the
/// smallest image distance among re-examined candidates (0 when the hash
/// produced none, i.e. every pair was separated by well over tolerance).
///
/// Throws GridCapError when the grid exceeds max_pair_points.
CertificateReport injectivity_check(const BiAnalyticMap& f, const GridSpec& grid,
                                    double min_sep = 1e-3,
                                    double tolerance = 1e-9,
                                    long max_pair_points = 40000);

/// Pass when min over the grid of J_F is > 0; the minimum and its location
/// are always reported.
CertificateReport jacobian_positivity(const BiAnalyticMap& f, const GridSpec& grid);

/// Minimum of |F(r e^{i theta})| over an angular grid, refined by
/// golden-section minimization around the best grid sample. Pass when the
/// refined minimum is >= claimed_sigma - tolerance; pass claimed_sigma = NaN
/// for a purely informational measurement.
CertificateReport coverage_min_modulus(const BiAnalyticMap& f, double r,
                                       int n_angular, double claimed_sigma,
                                       double tolerance = 1e-6);

/// Re((z F_z - conj(z) F_zbar) / F) > tolerance at every sample of every
/// circle |z| = k r / 10, k = 1..10. Throws VanishingValueError when
/// |F| < 1e-12 at a sample point.
CertificateReport starlike_boundary_check(const BiAnalyticMap& f, double r,
                                          int n_angular, double tolerance = 0.0);

/// Equal-value witness for F1 above its univalence radius: x1 = rho1 + eps
/// with eps half the distance to min(r, rho1') (rho1' the positive zero of
/// h0 when h0(1) <= 0), and x2 in (0, rho1) solving h0(x2) = h0(x1) by
/// bisection on the increasing branch. Requires rho1 < r <= 1.
CertificateReport sharpness_witness_F1(const Theorem1Params& p, double r,
                                       double tolerance = 1e-10);

/// Algebraic collision witness for F2 above rho2 = 1/(2 lambda): the real
/// pair x = -rho2 +- delta has equal values since lambda x^2 + x is
/// symmetric about -1/(2 lambda). Requires lambda > 1/2 and rho2 < r <= 1.
CertificateReport collision_witness_F2(double lambda, double r,
                                       double tolerance = 1e-10);

/// Distortion and growth checks for an analytic part H with H'(0) = 1 and
/// |H'| < lambda: n_pairs seeded random pairs in the closed disk of radius r
/// must satisfy |H(z1) - H(z2)| >= lambda (1 - lambda r)/(lambda - r) |z1 - z2|
/// minus tolerance, and the minimum boundary modulus at radius r must be
/// >= lambda^2 r + (lambda^3 - lambda) ln(1 - r/lambda) - tolerance.
/// A part whose lower bound is negative is vacuous and reported distinctly.
CertificateReport lemma1_distortion_check(const AnalyticFunction& h, double lambda,
                                          double r, int n_pairs,
                                          std::uint64_t seed = 1,
                                          double tolerance = 1e-9);

/// Largest r in (0,1) with
///   sum_{n>=2} n |b_n| r^{n-1} + sum_{n>=1} (n+1) |a_n| r^n <= 1,
/// evaluated with tail-bound padding and found by bisection on the
/// nondecreasing sum. Requires b_1 = 1 (NormalizationError otherwise) and
/// g not identically zero (DomainError).
double lemma4_radius(const SeriesFunction& g, const SeriesFunction& h,
                     double tol = 1e-13);

/// The padded condition sum itself (exposed for oracles and diagnostics).
double lemma4_condition_sum(const SeriesFunction& g, const SeriesFunction& h,
                            double r);

} // namespace landau

#endif
