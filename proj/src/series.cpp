#include "landau/series.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace landau {

SeriesFunction::SeriesFunction(std::vector<Complex> coeffs, double tail_bound)
    : coeffs_(std::move(coeffs)), tail_bound_(tail_bound) {
    if (coeffs_.empty()) {
        throw DomainError("SeriesFunction: at least one coefficient required");
    }
    if (!(tail_bound_ >= 0.0) || !std::isfinite(tail_bound_)) {
        throw DomainError("SeriesFunction: tail_bound must be finite and >= 0");
    }
    for (const Complex& c : coeffs_) {
        require_finite(c, "SeriesFunction coefficient");
    }
}

Complex SeriesFunction::eval(Complex z) const {
    require_finite(z, "SeriesFunction::eval");
    const double az = std::abs(z);
    if (tail_bound_ > 0.0 ? az >= 1.0 : az > 1.0) {
        throw DomainError("SeriesFunction::eval: |z| exceeds the allowed radius");
    }
    Complex acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Complex SeriesFunction::derivative_eval(Complex z) const {
    require_finite(z, "SeriesFunction::derivative_eval");
    const int n = truncation_order();
    if (n < 1) return Complex{0.0, 0.0};
    Complex acc = static_cast<double>(n) * coeffs_[static_cast<size_t>(n)];
    for (int k = n - 1; k >= 1; --k) {
        acc = acc * z + static_cast<double>(k) * coeffs_[static_cast<size_t>(k)];
    }
    return acc;
}

SeriesFunction SeriesFunction::derivative(double eval_radius) const {
    const int n = truncation_order();
    if (n < 1) {
        throw DomainError("SeriesFunction::derivative: truncation order must be >= 1");
    }
    if (!(eval_radius >= 0.0 && eval_radius < 1.0)) {
        throw DomainError("SeriesFunction::derivative: eval_radius must lie in [0, 1)");
    }
    std::vector<Complex> d(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        d[static_cast<size_t>(k - 1)] = static_cast<double>(k) * coeffs_[static_cast<size_t>(k)];
    }
    const double tail = tail_bound_ * static_cast<double>(n) / (1.0 - eval_radius);
    return SeriesFunction(std::move(d), tail);
}

Complex SeriesFunction::coeff(int n) const {
    if (n < 0 || n > truncation_order()) return Complex{0.0, 0.0};
    return coeffs_[static_cast<size_t>(n)];
}

SeriesFunction SeriesFunction::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw DomainError("series file: missing \"coeffs\" array");
    }
    std::vector<Complex> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (const auto& pair : j["coeffs"]) {
        if (!pair.is_array() || pair.size() != 2) {
            throw DomainError("series file: each coefficient must be [re, im]");
        }
        coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    const double tail = j.value("tail_bound", 0.0);
    return SeriesFunction(std::move(coeffs), tail);
}

SeriesFunction SeriesFunction::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("series file: cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

} // namespace landau
