#include "landau/report.hpp"

#include <json.hpp>

namespace landau {

std::string to_string(CheckKind k) {
    switch (k) {
    case CheckKind::injectivity: return "injectivity";
    case CheckKind::jacobian: return "jacobian";
    case CheckKind::coverage: return "coverage";
    case CheckKind::starlike: return "starlike";
    case CheckKind::sharpness: return "sharpness";
    case CheckKind::lemma1: return "lemma1";
    case CheckKind::lemma4: return "lemma4";
    case CheckKind::carlson: return "carlson";
    case CheckKind::lemma3: return "lemma3";
    }
    return "unknown";
}

std::string CertificateReport::verdict_label() const {
    std::string base;
    switch (verdict) {
    case Verdict::pass: base = "pass"; break;
    case Verdict::fail: base = "fail"; break;
    case Verdict::inconclusive: base = "inconclusive"; break;
    }
    if (!qualifier.empty()) {
        base += " (" + qualifier + ")";
    }
    return base;
}

std::string report_to_json(const CertificateReport& r) {
    nlohmann::json j;
    j["kind"] = to_string(r.kind);
    j["verdict"] = r.verdict_label();
    j["measured"] = r.measured;
    if (r.witness) {
        j["witness"] = {
            {"z1", {r.witness->z1.real(), r.witness->z1.imag()}},
            {"z2", {r.witness->z2.real(), r.witness->z2.imag()}},
            {"f1", {r.witness->f1.real(), r.witness->f1.imag()}},
            {"f2", {r.witness->f2.real(), r.witness->f2.imag()}},
        };
    } else {
        j["witness"] = nullptr;
    }
    j["grid"] = {
        {"n_radial", r.grid.n_radial},
        {"n_angular", r.grid.n_angular},
        {"radius", r.grid.radius},
        {"includes_boundary", r.grid.includes_boundary},
    };
    j["tolerance"] = r.tolerance;
    j["seed"] = r.seed;
    return j.dump();
}

} // namespace landau
