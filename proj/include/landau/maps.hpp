#ifndef LANDAU_MAPS_HPP
#define LANDAU_MAPS_HPP

#include <string>

#include "landau/closed_form.hpp"
#include "landau/complex.hpp"
#include "landau/radii.hpp"

namespace landau {

enum class MapView {
    bi_analytic,  // F(z) = conj(z) G(z) + H(z)
    biharmonic,   // F(z) = |z|^2 G1(z) + H(z), requires G(0) = 0
};

struct WirtingerPair {
    Complex d_z;      // F_z
    Complex d_zbar;   // F_zbar
};

/// A mapping F(z) = conj(z) G(z) + H(z) stored as the pair (G, H); every
/// certification operates on the parts, so the pair is never collapsed into
/// an opaque point function.
class BiAnalyticMap {
public:
    BiAnalyticMap(AnalyticFunction g, AnalyticFunction h, MapView view,
                  std::string name);

    Complex eval(Complex z) const;

    /// Exact analytic formulas F_z = conj(z) G'(z) + H'(z), F_zbar = G(z);
    /// finite differences are test-only oracles, never used here.
    WirtingerPair wirtinger(Complex z) const;

    /// J_F(z) = |F_z|^2 - |F_zbar|^2.
    double jacobian(Complex z) const;

    const AnalyticFunction& g() const { return g_; }
    const AnalyticFunction& h() const { return h_; }
    MapView view() const { return view_; }
    const std::string& name() const { return name_; }

private:
    AnalyticFunction g_;
    AnalyticFunction h_;
    MapView view_;
    std::string name_;
};

/// Extremal for Theorem-1-type bounds:
/// F1(z) = L2^2 z - L1 |z|^2 + (L2^3 - L2) log(1 - z/L2),
/// decomposed as G(z) = -L1 z (sign fixed by the |z|^2 term above),
/// H(z) = L2^2 z + (L2^3 - L2) log(1 - z/L2). The construction invariants
/// H'(0) = 1, |H'| < L2, |G'| = L1 are re-verified on a sample grid.
BiAnalyticMap make_F1(const Theorem1Params& p);

/// F2(z) = lambda |z|^2 + z: G(z) = lambda z, H(z) = z.
BiAnalyticMap make_F2(double lambda);

/// F3(z) = |z|^2 + z: G(z) = z, H(z) = z.
BiAnalyticMap make_F3();

/// Biharmonic extremal F0(z) = L2^2 z - L1 |z|^2 z + (L2^3 - L2) log(1 - z/L2):
/// G(z) = -L1 z^2 (so conj(z) G = -L1 |z|^2 z), H as in make_F1.
BiAnalyticMap make_F0(const Theorem1Params& p);

/// Analytic function wrapped as a map with G identically 0 (so F = H).
BiAnalyticMap make_analytic_map(AnalyticFunction h, std::string name);

} // namespace landau

#endif
