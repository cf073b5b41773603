#include "landau/solvers.hpp"

#include <cmath>

#include "landau/errors.hpp"

namespace landau {

BisectionResult bisect(const std::function<double(double)>& f,
                       double lo, double hi, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, 0.0, 0.0, 0};
    if (fhi == 0.0) return {hi, 0.0, 0.0, 0};
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw BracketError("bisect: no sign change on the given bracket");
    }

    int iter = 0;
    while (iter < max_iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // one-ulp bracket, cannot shrink
        const double fmid = f(mid);
        ++iter;
        if (fmid == 0.0) {
            lo = hi = mid;
            flo = fhi = 0.0;
            break;
        }
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }

    // Report whichever endpoint has the smaller residual.
    BisectionResult out;
    out.root = std::abs(flo) <= std::abs(fhi) ? lo : hi;
    out.residual = std::min(std::abs(flo), std::abs(fhi));
    out.bracket_width = hi - lo;
    out.iterations = iter;
    return out;
}

double golden_min(const std::function<double(double)>& f,
                  double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace landau
