#include "landau/schur.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "landau/errors.hpp"

namespace landau {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

Complex SplitMix64::in_disk(double radius) {
    for (;;) {
        const double x = uniform(-radius, radius);
        const double y = uniform(-radius, radius);
        if (x * x + y * y <= radius * radius) return Complex{x, y};
    }
}

Complex SchurSample::eval(Complex z) const {
    require_finite(z, "SchurSample::eval");
    Complex acc = rotation;
    for (const Complex& a : zeros) {
        acc *= (z - a) / (1.0 - std::conj(a) * z);
    }
    return acc;
}

SchurSample sample_schur(std::uint64_t seed, int max_degree) {
    if (max_degree < 0 || max_degree > 8) {
        throw DomainError("sample_schur: max_degree must lie in [0, 8]");
    }
    SplitMix64 rng(seed);
    SchurSample s;
    s.seed = seed;
    s.degree = static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_degree + 1));
    s.zeros.reserve(static_cast<size_t>(s.degree));
    for (int i = 0; i < s.degree; ++i) {
        s.zeros.push_back(rng.in_disk(0.9));
    }
    const double t = 2.0 * std::numbers::pi * rng.uniform01();
    s.rotation = Complex{std::cos(t), std::sin(t)};
    return s;
}

Complex BMASample::eval(Complex z) const {
    require_finite(z, "BMASample::eval");
    const double alpha = 1.0 / m_bound;
    const Complex w = z * inner.eval(z);
    const Complex psi = (alpha + w) / (1.0 + alpha * w);
    return m_bound * z * psi;
}

BMASample lift_to_bma(double m_bound, SchurSample chi) {
    if (!(m_bound >= 1.0) || !std::isfinite(m_bound)) {
        throw DomainError("lift_to_bma: requires m_bound >= 1");
    }
    return BMASample{m_bound, std::move(chi)};
}

CoefficientExtraction extract_coefficients(const std::function<Complex(Complex)>& f,
                                           int n_max, double sup_bound,
                                           double sample_radius, int n_samples) {
    return taylor_coefficients(f, n_max, sample_radius, n_samples, sup_bound);
}

namespace {

double coeff_abs(const CoefficientExtraction& f, int n) {
    return std::abs(f.series.coeff(n));
}

/// Margin bookkeeping shared by both inequality checkers: a violation is
/// only reported when the margin is negative beyond the summed extraction
/// bounds of the participating coefficients plus the absolute slack.
struct MarginTracker {
    double worst = std::numeric_limits<double>::infinity();
    int worst_index = -1;
    bool violated = false;
    int violated_index = -1;
    double violated_margin = 0.0;

    void record(int index, double margin, double slack) {
        if (margin < worst) {
            worst = margin;
            worst_index = index;
        }
        if (!violated && margin < -slack) {
            violated = true;
            violated_index = index;
            violated_margin = margin;
        }
    }
};

CertificateReport finish(CheckKind kind, const MarginTracker& t, int n_max,
                         double slack_abs) {
    CertificateReport rep;
    rep.kind = kind;
    rep.tolerance = slack_abs;
    rep.grid = GridSpec{2, 8, 0.5, false};
    rep.measured = std::isfinite(t.worst) ? t.worst : 0.0;
    if (t.violated) {
        rep.verdict = Verdict::fail;
        rep.witness = Witness{Complex{static_cast<double>(t.violated_index), 0.0},
                              Complex{static_cast<double>(n_max), 0.0},
                              Complex{t.violated_margin, 0.0},
                              Complex{t.violated_margin, 0.0}};
    } else {
        rep.verdict = Verdict::pass;
    }
    return rep;
}

} // namespace

CertificateReport check_carlson(const CoefficientExtraction& f, int n_max,
                                double slack_abs) {
    if (n_max > f.series.truncation_order()) {
        throw DomainError("check_carlson: n_max exceeds the extracted coefficient count");
    }
    MarginTracker t;
    // (a) |a_{2n+1}| <= 1 - |a_0|^2 - ... - |a_n|^2
    for (int n = 0; 2 * n + 1 <= n_max; ++n) {
        double rhs = 1.0;
        double slack = slack_abs + f.coeff_bound[static_cast<size_t>(2 * n + 1)];
        for (int j = 0; j <= n; ++j) {
            rhs -= coeff_abs(f, j) * coeff_abs(f, j);
            slack += f.coeff_bound[static_cast<size_t>(j)];
        }
        t.record(2 * n + 1, rhs - coeff_abs(f, 2 * n + 1), slack);
    }
    // (b) |a_{2n}| <= 1 - |a_0|^2 - ... - |a_{n-1}|^2 - |a_n|^2 / (1 + |a_0|)
    for (int n = 1; 2 * n <= n_max; ++n) {
        double rhs = 1.0;
        double slack = slack_abs + f.coeff_bound[static_cast<size_t>(2 * n)];
        for (int j = 0; j < n; ++j) {
            rhs -= coeff_abs(f, j) * coeff_abs(f, j);
            slack += f.coeff_bound[static_cast<size_t>(j)];
        }
        rhs -= coeff_abs(f, n) * coeff_abs(f, n) / (1.0 + coeff_abs(f, 0));
        slack += f.coeff_bound[static_cast<size_t>(n)];
        t.record(2 * n, rhs - coeff_abs(f, 2 * n), slack);
    }
    return finish(CheckKind::carlson, t, n_max, slack_abs);
}

CertificateReport check_lemma3(const CoefficientExtraction& f, double m_bound,
                               int n_max, double slack_abs) {
    if (n_max > f.series.truncation_order()) {
        throw DomainError("check_lemma3: n_max exceeds the extracted coefficient count");
    }
    if (!(m_bound >= 1.0)) {
        throw DomainError("check_lemma3: requires m_bound >= 1");
    }
    const double m = m_bound;
    MarginTracker t;
    // Uniform bound |a_n| <= M - 1/M for n >= 2.
    for (int n = 2; n <= n_max; ++n) {
        const double slack = slack_abs + f.coeff_bound[static_cast<size_t>(n)];
        t.record(n, (m - 1.0 / m) - coeff_abs(f, n), slack);
    }
    // (a) |a_{2n}| <= M [1 - (|a_1|^2 + ... + |a_n|^2)/M^2]
    for (int n = 1; 2 * n <= n_max; ++n) {
        double sum = 0.0;
        double slack = slack_abs + f.coeff_bound[static_cast<size_t>(2 * n)];
        for (int j = 1; j <= n; ++j) {
            sum += coeff_abs(f, j) * coeff_abs(f, j);
            slack += f.coeff_bound[static_cast<size_t>(j)];
        }
        t.record(2 * n, m * (1.0 - sum / (m * m)) - coeff_abs(f, 2 * n), slack);
    }
    // (b) |a_{2n+1}| <= M [1 - (|a_1|^2 + ... + |a_n|^2)/M^2
    //                        - |a_{n+1}|^2 / (M (M + |a_1|))]
    for (int n = 1; 2 * n + 1 <= n_max; ++n) {
        double sum = 0.0;
        double slack = slack_abs + f.coeff_bound[static_cast<size_t>(2 * n + 1)];
        for (int j = 1; j <= n; ++j) {
            sum += coeff_abs(f, j) * coeff_abs(f, j);
            slack += f.coeff_bound[static_cast<size_t>(j)];
        }
        const double last = coeff_abs(f, n + 1) * coeff_abs(f, n + 1) /
                            (m * (m + coeff_abs(f, 1)));
        slack += f.coeff_bound[static_cast<size_t>(n + 1)];
        t.record(2 * n + 1, m * (1.0 - sum / (m * m) - last) - coeff_abs(f, 2 * n + 1), slack);
    }
    return finish(CheckKind::lemma3, t, n_max, slack_abs);
}

} // namespace landau
