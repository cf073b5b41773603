#ifndef LANDAU_SCHUR_HPP
#define LANDAU_SCHUR_HPP

#include <cstdint>
#include <vector>

#include "landau/complex.hpp"
#include "landau/report.hpp"
#include "landau/taylor.hpp"

namespace landau {

/// SplitMix64 (Steele, Lea & Flood): counter-based, splittable, with the
/// published constants 0x9E3779B97F4A7C15 / 0xBF58476D1CE4E5B9 /
/// 0x94D049BB133111EB, so seeds are portable across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform in [0, 1): top 53 bits scaled by 2^-53.
    double uniform01();
    double uniform(double lo, double hi);

    /// Uniform in the closed disk |z| <= radius, by rejection from the square.
    Complex in_disk(double radius);

private:
    std::uint64_t state_;
};

/// Finite Blaschke product rot * prod_k (z - zero_k)/(1 - conj(zero_k) z):
/// |beta| <= 1 on the closed disk, = 1 on the boundary. Zeros are confined
/// to |z| <= 0.9 to keep boundary evaluation well-conditioned.
struct SchurSample {
    int degree = 0;                 // in [0, 8]
    std::vector<Complex> zeros;     // |zero| < 1
    Complex rotation{1.0, 0.0};     // unimodular
    std::uint64_t seed = 0;

    Complex eval(Complex z) const;
};

/// Seeded, reproducible sample: degree uniform in [0, max_degree], zeros
/// uniform in |z| <= 0.9, rotation uniform on the circle.
SchurSample sample_schur(std::uint64_t seed, int max_degree = 8);

/// f(z) = M z psi(z) with psi = (alpha + z chi(z)) / (1 + alpha z chi(z)),
/// alpha = 1/M: by the Schwarz-Pick parameterization f(0) = 0, f'(0) = 1 and
/// |f| <= M on the disk for every Schur-class chi.
struct BMASample {
    double m_bound = 1.0;
    SchurSample inner;

    Complex eval(Complex z) const;
};

BMASample lift_to_bma(double m_bound, SchurSample chi);

/// Extraction defaults shared by the campaigns: sample_radius = 0.5,
/// n_samples = 512 (aliasing error ~ sup * 2^-(512-n) is negligible for the
/// coefficient ranges checked here).
CoefficientExtraction extract_coefficients(const std::function<Complex(Complex)>& f,
                                           int n_max, double sup_bound,
                                           double sample_radius = 0.5,
                                           int n_samples = 512);

/// Coefficient inequalities for a function bounded by 1:
///   (a) |a_{2n+1}| <= 1 - |a_0|^2 - ... - |a_n|^2,          n = 0, 1, ...
///   (b) |a_{2n}|   <= 1 - |a_0|^2 - ... - |a_{n-1}|^2 - |a_n|^2/(1 + |a_0|),
///                                                            n = 1, 2, ...
/// checked for all indices <= n_max within a slack equal to the sum of the
/// involved per-coefficient extraction bounds plus slack_abs, so numerical
/// noise can never be reported as a violation. measured is the worst margin.
CertificateReport check_carlson(const CoefficientExtraction& f, int n_max,
                                double slack_abs = 1e-9);

/// Coefficient inequalities for f with f(0) = 0, f'(0) = 1, |f| <= M:
/// |a_n| <= M - 1/M for 2 <= n <= n_max, plus the two refined families
///   (a) |a_{2n}|   <= M [1 - (|a_1|^2 + ... + |a_n|^2)/M^2],
///   (b) |a_{2n+1}| <= M [1 - (|a_1|^2 + ... + |a_n|^2)/M^2
///                         - |a_{n+1}|^2 / (M (M + |a_1|))],   n = 1, 2, ...
CertificateReport check_lemma3(const CoefficientExtraction& f, double m_bound,
                               int n_max, double slack_abs = 1e-9);

} // namespace landau

#endif
