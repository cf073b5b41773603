#ifndef LANDAU_SOLVERS_HPP
#define LANDAU_SOLVERS_HPP

#include <functional>

namespace landau {

struct BisectionResult {
    double root = 0.0;
    double residual = 0.0;      // |f(root)|
    double bracket_width = 0.0;
    int iterations = 0;
};

/// Bisection on a verified sign-change bracket [lo, hi].
///
/// Always drives the bracket to one-ulp width (the midpoint stops making
/// floating-point progress), which keeps residuals at the rounding floor of
/// f; callers verify their own width/residual contracts against the result.
/// Throws BracketError when f(lo) and f(hi) do not straddle zero.
BisectionResult bisect(const std::function<double(double)>& f,
                       double lo, double hi, int max_iter = 200);

/// Golden-section minimization of a unimodal function on [lo, hi].
/// Returns the abscissa of the minimum to within tol.
double golden_min(const std::function<double(double)>& f,
                  double lo, double hi, double tol = 1e-10);

} // namespace landau

#endif
