#include "landau/closed_form.hpp"

#include <cmath>
#include <sstream>

namespace landau {

namespace {

constexpr double kPoleThreshold = 1e-12;

Complex pow_int(Complex z, int n) {
    Complex acc{1.0, 0.0};
    for (int i = 0; i < n; ++i) acc *= z;
    return acc;
}

void check_unit_disk(Complex z, const char* what) {
    require_finite(z, what);
    if (std::abs(z) > 1.0) {
        throw DomainError(std::string(what) + ": |z| exceeds the allowed radius");
    }
}

} // namespace

Complex principal_log(Complex z) {
    require_finite(z, "principal_log");
    if (z.imag() == 0.0 && z.real() <= 0.0) {
        throw BranchCutError("principal_log: z on the closed negative real axis");
    }
    return std::log(z);
}

ClosedFormFunction ClosedFormFunction::identity() {
    return ClosedFormFunction(ClosedFormKind::identity, 0.0, 0, Complex{});
}

ClosedFormFunction ClosedFormFunction::landau_f0(double m) {
    if (!(m >= 1.0) || !std::isfinite(m)) {
        throw DomainError("landau_f0: requires M >= 1");
    }
    return ClosedFormFunction(ClosedFormKind::landau_f0, m, 0, Complex{});
}

ClosedFormFunction ClosedFormFunction::lemma3_fn(double m, int n) {
    if (!(m >= 1.0) || !std::isfinite(m)) {
        throw DomainError("lemma3_fn: requires M >= 1");
    }
    if (n < 2) {
        throw DomainError("lemma3_fn: requires n >= 2");
    }
    return ClosedFormFunction(ClosedFormKind::lemma3_fn, m, n, Complex{});
}

ClosedFormFunction ClosedFormFunction::h1_part(double lambda2) {
    if (!(lambda2 > 1.0) || !std::isfinite(lambda2)) {
        throw DomainError("h1_part: requires lambda2 > 1");
    }
    return ClosedFormFunction(ClosedFormKind::h1_part, lambda2, 0, Complex{});
}

ClosedFormFunction ClosedFormFunction::g1_part(double lambda1) {
    if (!(lambda1 >= 0.0) || !std::isfinite(lambda1)) {
        throw DomainError("g1_part: requires lambda1 >= 0");
    }
    return ClosedFormFunction(ClosedFormKind::g1_part, lambda1, 0, Complex{});
}

ClosedFormFunction ClosedFormFunction::linear(Complex c) {
    require_finite(c, "linear coefficient");
    return ClosedFormFunction(ClosedFormKind::linear, 0.0, 0, c);
}

Complex ClosedFormFunction::eval(Complex z) const {
    check_unit_disk(z, "ClosedFormFunction::eval");
    switch (kind_) {
    case ClosedFormKind::identity:
        return z;
    case ClosedFormKind::linear:
        return c_ * z;
    case ClosedFormKind::g1_part:
        return -m_ * z;
    case ClosedFormKind::landau_f0: {
        const Complex den = m_ - z;
        if (std::abs(den) < kPoleThreshold) {
            throw PoleProximityError("landau_f0: evaluation too close to the pole z = M");
        }
        return m_ * z * (1.0 - m_ * z) / den;
    }
    case ClosedFormKind::lemma3_fn: {
        const Complex w = pow_int(z, n_ - 1);
        const Complex den = m_ - w;
        if (std::abs(den) < kPoleThreshold) {
            throw PoleProximityError("lemma3_fn: evaluation too close to a pole z^{n-1} = M");
        }
        return m_ * z * (1.0 - m_ * w) / den;
    }
    case ClosedFormKind::h1_part:
        // Re(1 - z/L2) > 1 - 1/L2 > 0 inside the closed disk, so the
        // principal branch never meets its cut here.
        return m_ * m_ * z + (m_ * m_ * m_ - m_) * principal_log(1.0 - z / m_);
    }
    throw Error("ClosedFormFunction::eval: unreachable");
}

Complex ClosedFormFunction::derivative_eval(Complex z) const {
    check_unit_disk(z, "ClosedFormFunction::derivative_eval");
    switch (kind_) {
    case ClosedFormKind::identity:
        return Complex{1.0, 0.0};
    case ClosedFormKind::linear:
        return c_;
    case ClosedFormKind::g1_part:
        return Complex{-m_, 0.0};
    case ClosedFormKind::landau_f0: {
        const Complex den = m_ - z;
        if (std::abs(den) < kPoleThreshold) {
            throw PoleProximityError("landau_f0: derivative too close to the pole z = M");
        }
        return m_ * m_ * (1.0 - 2.0 * m_ * z + z * z) / (den * den);
    }
    case ClosedFormKind::lemma3_fn: {
        // d/dz of M (z - M z^n) / (M - z^{n-1}); numerator collapses to
        // M [M + (n - 2 - n M^2) z^{n-1} + M z^{2n-2}].
        const Complex w = pow_int(z, n_ - 1);
        const Complex den = m_ - w;
        if (std::abs(den) < kPoleThreshold) {
            throw PoleProximityError("lemma3_fn: derivative too close to a pole z^{n-1} = M");
        }
        const double k = static_cast<double>(n_);
        const Complex num = m_ + (k - 2.0 - k * m_ * m_) * w + m_ * w * w;
        return m_ * num / (den * den);
    }
    case ClosedFormKind::h1_part: {
        const Complex den = m_ - z;
        if (std::abs(den) < kPoleThreshold) {
            throw PoleProximityError("h1_part: derivative too close to the pole z = L2");
        }
        return m_ * (1.0 - m_ * z) / den;
    }
    }
    throw Error("ClosedFormFunction::derivative_eval: unreachable");
}

double ClosedFormFunction::sup_norm_bound() const {
    switch (kind_) {
    case ClosedFormKind::identity:
        return 1.0;
    case ClosedFormKind::linear:
        return std::abs(c_);
    case ClosedFormKind::g1_part:
        return m_;
    case ClosedFormKind::landau_f0:
    case ClosedFormKind::lemma3_fn:
        // |f| = M on the boundary (the Moebius factor is unimodular there),
        // so M bounds the closed disk by the maximum principle.
        return m_;
    case ClosedFormKind::h1_part:
        // |log(1 - w)| <= -log(1 - |w|) for |w| < 1.
        return m_ * m_ - (m_ * m_ * m_ - m_) * std::log1p(-1.0 / m_);
    }
    throw Error("ClosedFormFunction::sup_norm_bound: unreachable");
}

SeriesFunction ClosedFormFunction::expand(int order, double eval_radius) const {
    if (order < 1) {
        throw DomainError("ClosedFormFunction::expand: order must be >= 1");
    }
    if (!(eval_radius > 0.0 && eval_radius < 1.0)) {
        throw DomainError("ClosedFormFunction::expand: eval_radius must lie in (0, 1)");
    }
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex{0.0, 0.0});
    bool exact = false;
    switch (kind_) {
    case ClosedFormKind::identity:
        c[1] = Complex{1.0, 0.0};
        exact = true;
        break;
    case ClosedFormKind::linear:
        c[1] = c_;
        exact = true;
        break;
    case ClosedFormKind::g1_part:
        c[1] = Complex{-m_, 0.0};
        exact = true;
        break;
    case ClosedFormKind::landau_f0:
    case ClosedFormKind::lemma3_fn: {
        // M z (1 - M w)/(M - w), w = z^{n-1}, expands to
        // z - sum_{j>=1} (M^2 - 1) M^{-j} z^{(n-1) j + 1}.
        const int step = (kind_ == ClosedFormKind::landau_f0 ? 1 : n_ - 1);
        c[1] = Complex{1.0, 0.0};
        double mj = m_;
        for (int j = 1; step * j + 1 <= order; ++j) {
            c[static_cast<size_t>(step * j + 1)] = Complex{-(m_ * m_ - 1.0) / mj, 0.0};
            mj *= m_;
        }
        break;
    }
    case ClosedFormKind::h1_part: {
        // L^2 z - (L^3 - L) sum_{k>=1} (z/L)^k / k; the k = 1 terms combine
        // to the normalized b_1 = 1.
        c[1] = Complex{1.0, 0.0};
        double lk = m_ * m_;  // L^k at k = 2
        for (int k = 2; k <= order; ++k) {
            c[static_cast<size_t>(k)] =
                Complex{-(m_ * m_ * m_ - m_) / (static_cast<double>(k) * lk), 0.0};
            lk *= m_;
        }
        break;
    }
    }
    const double tail = exact ? 0.0
                              : sup_norm_bound() * std::pow(eval_radius, order + 1) /
                                    (1.0 - eval_radius);
    return SeriesFunction(std::move(c), tail);
}

std::string ClosedFormFunction::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case ClosedFormKind::identity: os << "z"; break;
    case ClosedFormKind::linear: os << "(" << c_.real() << "+" << c_.imag() << "i)z"; break;
    case ClosedFormKind::g1_part: os << "-" << m_ << "z"; break;
    case ClosedFormKind::landau_f0: os << "f0(M=" << m_ << ")"; break;
    case ClosedFormKind::lemma3_fn: os << "fn(M=" << m_ << ",n=" << n_ << ")"; break;
    case ClosedFormKind::h1_part: os << "H1(L2=" << m_ << ")"; break;
    }
    return os.str();
}

Complex AnalyticFunction::eval(Complex z) const {
    return std::visit([z](const auto& f) { return f.eval(z); }, impl_);
}

Complex AnalyticFunction::derivative_eval(Complex z) const {
    if (is_series()) return series().derivative_eval(z);
    return closed_form().derivative_eval(z);
}

double AnalyticFunction::sup_norm_bound() const {
    if (is_series()) {
        double s = series().tail_bound();
        for (const Complex& c : series().coeffs()) s += std::abs(c);
        return s;
    }
    return closed_form().sup_norm_bound();
}

SeriesFunction AnalyticFunction::expand(int order, double eval_radius) const {
    if (is_series()) return series();
    return closed_form().expand(order, eval_radius);
}

} // namespace landau
