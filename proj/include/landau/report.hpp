#ifndef LANDAU_REPORT_HPP
#define LANDAU_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "landau/complex.hpp"

namespace landau {

/// Polar sampling grid: radii k*radius/n_radial (k = 1..n_radial when the
/// boundary is included, scaled inward otherwise) times n_angular equally
/// spaced angles.
struct GridSpec {
    int n_radial = 100;
    int n_angular = 256;
    double radius = 0.0;
    bool includes_boundary = true;

    long total_points() const {
        return static_cast<long>(n_radial) * static_cast<long>(n_angular);
    }
};

enum class CheckKind {
    injectivity,
    jacobian,
    coverage,
    starlike,
    sharpness,
    lemma1,
    lemma4,
    carlson,
    lemma3,
};

enum class Verdict { pass, fail, inconclusive };

struct Witness {
    Complex z1{};
    Complex z2{};
    Complex f1{};
    Complex f2{};
};

/// Outcome of one numerical certification run.
struct CertificateReport {
    CheckKind kind = CheckKind::injectivity;
    Verdict verdict = Verdict::inconclusive;
    /// Qualifies the verdict where the bare word would overclaim:
    /// "grid-level" for corroboration-not-proof, "vacuous" for checks whose
    /// lower bound was negative, empty otherwise.
    std::string qualifier;
    std::optional<Witness> witness;
    double measured = 0.0;   // e.g. min boundary modulus, min Jacobian, worst margin
    GridSpec grid;
    double tolerance = 0.0;
    std::uint64_t seed = 0;

    bool passed() const { return verdict == Verdict::pass; }
    std::string verdict_label() const;
};

std::string to_string(CheckKind k);

/// JSON object {kind, verdict, measured, witness: {z1, z2, f1, f2} | null,
/// grid, tolerance, seed} serialized as text.
std::string report_to_json(const CertificateReport& r);

} // namespace landau

#endif
