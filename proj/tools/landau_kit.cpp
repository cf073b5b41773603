// landau-kit: radius tables and sweeps, certification runs, coefficient
// campaigns and sharpness witnesses for bounded bi-analytic mappings
// F(z) = conj(z) G(z) + H(z).
//
// Output contract: identical command + seed produces byte-identical files.
// Floats are printed with "%.17g" (17 significant digits, lowercase
// exponent); every output embeds its run manifest (tool, version, command,
// seed); wall time goes to stderr so it cannot perturb the bytes.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "landau/certify.hpp"
#include "landau/closed_form.hpp"
#include "landau/errors.hpp"
#include "landau/maps.hpp"
#include "landau/radii.hpp"
#include "landau/report.hpp"
#include "landau/schur.hpp"
#include "landau/series.hpp"

namespace {

constexpr const char* kToolName = "landau-kit";
constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Inclusive range syntax "start:stop:count" (count >= 1); a bare number is a
// single-point range.
std::vector<double> parse_range(const std::string& text) {
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        return {std::stod(text)};
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) {
        throw landau::DomainError("range: expected start:stop:count, got " + text);
    }
    const double start = std::stod(text.substr(0, c1));
    const double stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const long count = std::stol(text.substr(c2 + 1));
    if (count < 1) {
        throw landau::DomainError("range: count must be >= 1");
    }
    std::vector<double> out;
    out.reserve(static_cast<size_t>(count));
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    for (long i = 0; i < count; ++i) {
        out.push_back(start + (stop - start) * static_cast<double>(i) /
                                  static_cast<double>(count - 1));
    }
    return out;
}

int thread_cap() {
    if (const char* env = std::getenv("LANDAU_KIT_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Tuples are computed concurrently but stored by index, so emission order
// (and therefore the bytes) never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_cap()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

struct Manifest {
    std::string command;
    std::uint64_t seed = 0;
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

void write_csv_manifest(std::ostream& os, const Manifest& m) {
    os << "# tool: " << kToolName << ' ' << kVersion << '\n';
    os << "# command: " << m.command << '\n';
    os << "# seed: " << m.seed << '\n';
}

json manifest_json(const Manifest& m) {
    return json{{"tool", kToolName}, {"version", kVersion},
                {"command", m.command}, {"seed", m.seed}};
}

class Output {
public:
    explicit Output(const std::string& path) : path_(path) {
        if (path_ != "-") {
            file_.open(path_);
            if (!file_) throw landau::DomainError("cannot open output file " + path_);
        }
    }
    std::ostream& stream() { return path_ == "-" ? std::cout : file_; }

private:
    std::string path_;
    std::ofstream file_;
};

// ---------------------------------------------------------------------------
// radii

struct RadiiRow {
    std::string theorem;
    std::string params;
    double rho = 0.0;
    double sigma = 0.0;
    bool has_sigma = true;
    double residual = 0.0;
    std::string branch;
    std::string error;  // non-empty when the tuple was skipped
};

struct RadiiJob {
    std::string theorem;
    std::vector<std::pair<std::string, double>> params;
};

RadiiRow solve_radii_job(const RadiiJob& job, double tol) {
    RadiiRow row;
    row.theorem = job.theorem;
    {
        std::ostringstream os;
        for (size_t i = 0; i < job.params.size(); ++i) {
            if (i) os << ';';
            os << job.params[i].first << '=' << fmt17(job.params[i].second);
        }
        row.params = os.str();
    }
    auto p = [&job](size_t i) { return job.params[i].second; };
    try {
        if (job.theorem == "t1") {
            const landau::RadiusResult r =
                landau::theorem1_radii(landau::Theorem1Params{p(0), p(1)});
            row.rho = r.rho; row.sigma = r.sigma;
            row.residual = r.residual; row.branch = r.branch;
        } else if (job.theorem == "t2") {
            const landau::RadiusResult r =
                landau::rho2_sigma2(landau::Theorem2Params{p(0)});
            row.rho = r.rho; row.sigma = r.sigma;
            row.residual = r.residual; row.branch = r.branch;
        } else if (job.theorem == "t3") {
            const landau::RadiusResult r =
                landau::theorem3_radii(landau::Theorem3Params{p(0), p(1)}, tol);
            row.rho = r.rho; row.sigma = r.sigma;
            row.residual = r.residual; row.branch = r.branch;
        } else if (job.theorem == "t4") {
            // Same root as t3; the theorem asserts univalence and full
            // starlikeness there, with no covering radius.
            const landau::RadiusResult r =
                landau::theorem3_radii(landau::Theorem3Params{p(0), p(1)}, tol);
            row.rho = r.rho; row.has_sigma = false;
            row.residual = r.residual; row.branch = "starlike-radius";
        } else if (job.theorem == "tA") {
            const landau::RadiusResult r = landau::theoremA_radius(p(0));
            row.rho = r.rho; row.sigma = r.sigma; row.branch = r.branch;
        } else if (job.theorem == "tB") {
            const landau::RadiusResult r = landau::theoremB_radius(p(0));
            row.rho = r.rho; row.sigma = r.sigma; row.branch = r.branch;
        } else if (job.theorem == "tC") {
            const landau::RadiusResult r = landau::theoremC_radii(p(0), p(1), tol);
            row.rho = r.rho; row.sigma = r.sigma;
            row.residual = r.residual; row.branch = r.branch;
        } else if (job.theorem == "tD") {
            const landau::RadiusResult r = landau::theoremD_radii(p(0));
            row.rho = r.rho; row.sigma = r.sigma; row.branch = r.branch;
        } else if (job.theorem == "tE") {
            const landau::RadiusResult r = landau::theoremE_radii(p(0));
            row.rho = r.rho; row.sigma = r.sigma; row.branch = r.branch;
        } else {
            row.error = "unknown theorem id " + job.theorem;
        }
    } catch (const landau::Error& e) {
        row.error = e.what();
    }
    return row;
}

int cmd_radii(const std::vector<std::string>& theorems,
              const std::string& compare,
              const std::map<std::string, std::string>& ranges,
              double tol, const std::string& format, const std::string& out_path,
              const Manifest& manifest) {
    auto range_of = [&ranges](const std::string& key,
                              const char* needed_by) -> std::vector<double> {
        const auto it = ranges.find(key);
        if (it == ranges.end() || it->second.empty()) {
            throw landau::DomainError(std::string("missing --") + key + " (needed by " +
                                      needed_by + ")");
        }
        return parse_range(it->second);
    };

    Output out(out_path);

    if (!compare.empty()) {
        if (compare != "t3,tE") {
            throw landau::DomainError("--compare currently supports exactly t3,tE");
        }
        const std::vector<double> ms = range_of("m", "the t3/tE comparison");
        struct CmpRow {
            double m, rho3, sigma3, r5, R5;
            std::string error;
        };
        std::vector<CmpRow> rows(ms.size());
        parallel_for(ms.size(), [&](std::size_t i) {
            CmpRow& r = rows[i];
            r.m = ms[i];
            try {
                const landau::RadiusResult t3 =
                    landau::theorem3_radii(landau::Theorem3Params{ms[i], ms[i]}, tol);
                const landau::RadiusResult te = landau::theoremE_radii(ms[i]);
                r.rho3 = t3.rho; r.sigma3 = t3.sigma;
                r.r5 = te.rho; r.R5 = te.sigma;
            } catch (const landau::Error& e) {
                r.error = e.what();
            }
        });
        std::size_t failed = 0;
        if (format == "json") {
            json doc;
            doc["manifest"] = manifest_json(manifest);
            doc["rows"] = json::array();
            for (const CmpRow& r : rows) {
                if (!r.error.empty()) {
                    ++failed;
                    std::cerr << "skipped m=" << fmt17(r.m) << ": " << r.error << '\n';
                    continue;
                }
                doc["rows"].push_back(json{{"m", r.m}, {"rho3", r.rho3},
                                           {"sigma3", r.sigma3}, {"r5", r.r5},
                                           {"R5", r.R5},
                                           {"improvement", r.rho3 - r.r5}});
            }
            out.stream() << doc.dump(2) << '\n';
        } else {
            write_csv_manifest(out.stream(), manifest);
            out.stream() << "m,rho3,sigma3,r5,R5,improvement\n";
            for (const CmpRow& r : rows) {
                if (!r.error.empty()) {
                    ++failed;
                    std::cerr << "skipped m=" << fmt17(r.m) << ": " << r.error << '\n';
                    continue;
                }
                out.stream() << fmt17(r.m) << ',' << fmt17(r.rho3) << ','
                             << fmt17(r.sigma3) << ',' << fmt17(r.r5) << ','
                             << fmt17(r.R5) << ',' << fmt17(r.rho3 - r.r5) << '\n';
            }
        }
        return failed == rows.size() ? 2 : 0;
    }

    if (theorems.empty()) {
        throw landau::DomainError("radii: pass --theorem or --compare");
    }

    std::vector<RadiiJob> jobs;
    for (const std::string& th : theorems) {
        auto cross2 = [&](const char* ka, const char* kb) {
            for (const double a : range_of(ka, th.c_str())) {
                for (const double b : range_of(kb, th.c_str())) {
                    jobs.push_back(RadiiJob{th, {{ka, a}, {kb, b}}});
                }
            }
        };
        if (th == "t1" || th == "tC") {
            cross2("l1", "l2");
        } else if (th == "t3" || th == "t4") {
            cross2("m1", "m2");
        } else if (th == "t2" || th == "tB" || th == "tD") {
            for (const double a : range_of("lambda", th.c_str())) {
                jobs.push_back(RadiiJob{th, {{"lambda", a}}});
            }
        } else if (th == "tA" || th == "tE") {
            for (const double a : range_of("m", th.c_str())) {
                jobs.push_back(RadiiJob{th, {{"m", a}}});
            }
        } else {
            throw landau::DomainError("unknown theorem id " + th);
        }
    }

    std::vector<RadiiRow> rows(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) { rows[i] = solve_radii_job(jobs[i], tol); });

    std::size_t failed = 0;
    if (format == "json") {
        json doc;
        doc["manifest"] = manifest_json(manifest);
        doc["rows"] = json::array();
        for (const RadiiRow& r : rows) {
            if (!r.error.empty()) {
                ++failed;
                std::cerr << "skipped " << r.theorem << '[' << r.params << "]: "
                          << r.error << '\n';
                continue;
            }
            json jr{{"theorem", r.theorem}, {"params", r.params}, {"rho", r.rho},
                    {"residual", r.residual}, {"branch", r.branch}};
            jr["sigma"] = r.has_sigma ? json(r.sigma) : json(nullptr);
            doc["rows"].push_back(jr);
        }
        out.stream() << doc.dump(2) << '\n';
    } else {
        write_csv_manifest(out.stream(), manifest);
        out.stream() << "theorem,params,rho,sigma,residual,branch\n";
        for (const RadiiRow& r : rows) {
            if (!r.error.empty()) {
                ++failed;
                std::cerr << "skipped " << r.theorem << '[' << r.params << "]: "
                          << r.error << '\n';
                continue;
            }
            out.stream() << r.theorem << ',' << r.params << ',' << fmt17(r.rho) << ','
                         << (r.has_sigma ? fmt17(r.sigma) : std::string()) << ','
                         << fmt17(r.residual) << ',' << r.branch << '\n';
        }
    }
    return failed == rows.size() ? 2 : 0;
}

// ---------------------------------------------------------------------------
// certify

struct MapSpec {
    landau::BiAnalyticMap map;
    std::optional<double> theorem_rho;
    std::optional<double> theorem_sigma;
    std::optional<double> lemma1_lambda;
};

MapSpec build_map(const std::string& name, const std::vector<double>& params,
                  double tol) {
    auto need = [&](size_t n) {
        if (params.size() != n) {
            throw landau::DomainError("map " + name + " expects " + std::to_string(n) +
                                      " parameter(s)");
        }
    };
    if (name == "F1") {
        need(2);
        const landau::Theorem1Params p{params[0], params[1]};
        return MapSpec{landau::make_F1(p), landau::rho1(p), landau::sigma1(p),
                       p.lambda2};
    }
    if (name == "F2") {
        need(1);
        const auto rr = landau::rho2_sigma2(landau::Theorem2Params{params[0]});
        return MapSpec{landau::make_F2(params[0]), rr.rho, rr.sigma, std::nullopt};
    }
    if (name == "F3") {
        need(0);
        return MapSpec{landau::make_F3(), 0.5, 0.25, std::nullopt};
    }
    if (name == "F0") {
        need(2);
        const auto rr = landau::theoremC_radii(params[0], params[1], tol);
        return MapSpec{landau::make_F0(landau::Theorem1Params{params[0], params[1]}),
                       rr.rho, rr.sigma, params[1]};
    }
    if (name == "f0") {
        need(1);
        return MapSpec{landau::make_analytic_map(
                           landau::ClosedFormFunction::landau_f0(params[0]),
                           "f0(" + fmt17(params[0]) + ")"),
                       std::nullopt, std::nullopt, std::nullopt};
    }
    if (name == "fn") {
        need(2);
        const int n = static_cast<int>(params[1]);
        if (static_cast<double>(n) != params[1]) {
            throw landau::DomainError("fn: the index n must be an integer");
        }
        return MapSpec{landau::make_analytic_map(
                           landau::ClosedFormFunction::lemma3_fn(params[0], n),
                           "fn(" + fmt17(params[0]) + "," + std::to_string(n) + ")"),
                       std::nullopt, std::nullopt, std::nullopt};
    }
    throw landau::DomainError("unknown map " + name +
                              " (expected F1, F2, F3, F0, f0 or fn)");
}

int cmd_certify(const std::string& map_name, const std::vector<double>& params,
                const std::vector<std::string>& series_paths,
                std::optional<double> explicit_r, bool at_theorem_radius,
                const std::string& checks_csv, std::uint64_t seed,
                int n_radial, int n_angular, double min_sep, double cov_tol,
                std::optional<double> lemma1_lambda, int lemma1_pairs,
                const std::string& out_path, const Manifest& manifest) {
    const double solver_tol = 1e-13;

    std::optional<MapSpec> spec;
    if (!series_paths.empty()) {
        if (series_paths.size() != 2) {
            throw landau::DomainError("--series expects two files: g.json h.json");
        }
        landau::SeriesFunction g = landau::SeriesFunction::from_json_file(series_paths[0]);
        landau::SeriesFunction h = landau::SeriesFunction::from_json_file(series_paths[1]);
        spec = MapSpec{landau::BiAnalyticMap(landau::AnalyticFunction(g),
                                             landau::AnalyticFunction(h),
                                             landau::MapView::bi_analytic, "series"),
                       std::nullopt, std::nullopt, std::nullopt};
    } else if (!map_name.empty()) {
        spec = build_map(map_name, params, solver_tol);
    } else {
        throw landau::DomainError("certify: pass a map name or --series");
    }
    if (lemma1_lambda) spec->lemma1_lambda = lemma1_lambda;

    // Radius policy: explicit r applies as given; the theorem policy runs
    // the interior checks strictly inside the univalence disk (0.99 rho)
    // and measures coverage exactly at rho against the claimed sigma.
    double check_r = 0.0;
    double coverage_r = 0.0;
    double claimed_sigma = std::numeric_limits<double>::quiet_NaN();
    if (at_theorem_radius) {
        if (!spec->theorem_rho) {
            throw landau::DomainError(
                "--at-theorem-radius is not defined for this map; pass --r");
        }
        check_r = 0.99 * *spec->theorem_rho;
        coverage_r = *spec->theorem_rho;
        claimed_sigma = *spec->theorem_sigma;
    } else if (explicit_r) {
        if (!(*explicit_r > 0.0 && *explicit_r < 1.0)) {
            throw landau::DomainError("--r must lie in (0, 1)");
        }
        check_r = coverage_r = *explicit_r;
    }

    std::vector<std::string> checks;
    {
        std::stringstream ss(checks_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) checks.push_back(item);
        }
    }
    if (checks.empty()) {
        throw landau::DomainError("certify: --checks must name at least one check");
    }

    std::vector<landau::CertificateReport> reports;
    std::vector<std::pair<std::string, double>> extras;  // lemma4 radius etc.
    for (const std::string& c : checks) {
        if (c == "inj" || c == "jac" || c == "star" || c == "cov" || c == "lemma1") {
            if (!(check_r > 0.0)) {
                throw landau::DomainError("check " + c +
                                          " needs --r or --at-theorem-radius");
            }
        }
        if (c == "inj") {
            landau::GridSpec g{40, 100, check_r, true};
            if (n_radial > 0) g.n_radial = n_radial;
            if (n_angular > 0) g.n_angular = n_angular;
            reports.push_back(landau::injectivity_check(spec->map, g, min_sep));
        } else if (c == "jac") {
            landau::GridSpec g{100, 256, check_r, true};
            if (n_radial > 0) g.n_radial = n_radial;
            if (n_angular > 0) g.n_angular = n_angular;
            reports.push_back(landau::jacobian_positivity(spec->map, g));
        } else if (c == "star") {
            reports.push_back(landau::starlike_boundary_check(
                spec->map, check_r, n_angular > 0 ? n_angular : 256));
        } else if (c == "cov") {
            reports.push_back(landau::coverage_min_modulus(
                spec->map, coverage_r, n_angular > 0 ? n_angular : 256, claimed_sigma,
                cov_tol));
        } else if (c == "lemma1") {
            if (!spec->lemma1_lambda) {
                throw landau::DomainError(
                    "lemma1 needs --lambda (or an F1/F0 map carrying lambda2)");
            }
            reports.push_back(landau::lemma1_distortion_check(
                spec->map.h(), *spec->lemma1_lambda, check_r, lemma1_pairs, seed));
        } else if (c == "lemma4") {
            const landau::SeriesFunction g = spec->map.g().expand(60, 0.9);
            const landau::SeriesFunction h = spec->map.h().expand(60, 0.9);
            extras.emplace_back("lemma4_radius", landau::lemma4_radius(g, h));
        } else {
            throw landau::DomainError("unknown check " + c);
        }
    }

    bool all_pass = true;
    json doc;
    doc["manifest"] = manifest_json(manifest);
    doc["map"] = spec->map.name();
    doc["radius"] = check_r > 0.0 ? json(check_r) : json(nullptr);
    doc["reports"] = json::array();
    for (const auto& r : reports) {
        doc["reports"].push_back(json::parse(landau::report_to_json(r)));
        all_pass = all_pass && r.passed();
    }
    for (const auto& [key, value] : extras) {
        doc["reports"].push_back(json{{"kind", key}, {"verdict", "pass"},
                                      {"measured", value}, {"witness", nullptr}});
    }

    Output out(out_path);
    out.stream() << doc.dump(2) << '\n';
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// coeffs

int cmd_coeffs(double m_bound, int n_samples, std::uint64_t seed, int max_n,
               bool carlson, bool extremal, int extremal_n,
               const std::string& out_path, const Manifest& manifest) {
    Output out(out_path);
    write_csv_manifest(out.stream(), manifest);

    if (extremal) {
        const landau::ClosedFormFunction fn =
            landau::ClosedFormFunction::lemma3_fn(m_bound, extremal_n);
        const auto ext = landau::extract_coefficients(
            [&fn](landau::Complex z) { return fn.eval(z); }, std::max(max_n, extremal_n),
            fn.sup_norm_bound());
        const double an = std::abs(ext.series.coeff(extremal_n));
        const double bound = m_bound - 1.0 / m_bound;
        const double margin = bound - an;
        const double slack = ext.coeff_bound[static_cast<size_t>(extremal_n)] + 1e-9;
        const bool ok = std::abs(margin) <= slack;
        out.stream() << "kind,M,n,abs_coeff,bound,margin,verdict\n";
        out.stream() << "extremal," << fmt17(m_bound) << ',' << extremal_n << ','
                     << fmt17(an) << ',' << fmt17(bound) << ',' << fmt17(margin) << ','
                     << (ok ? "pass" : "fail") << '\n';
        return ok ? 0 : 1;
    }

    struct Row {
        std::uint64_t seed;
        int degree;
        double worst_margin;
        bool pass;
    };
    std::vector<Row> rows(static_cast<size_t>(n_samples));
    parallel_for(rows.size(), [&](std::size_t i) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        const landau::SchurSample chi = landau::sample_schur(s);
        landau::CertificateReport rep;
        if (carlson) {
            const auto ext = landau::extract_coefficients(
                [&chi](landau::Complex z) { return chi.eval(z); }, max_n, 1.0);
            rep = landau::check_carlson(ext, max_n);
        } else {
            const landau::BMASample f = landau::lift_to_bma(m_bound, chi);
            const auto ext = landau::extract_coefficients(
                [&f](landau::Complex z) { return f.eval(z); }, max_n, m_bound);
            rep = landau::check_lemma3(ext, m_bound, max_n);
        }
        rows[i] = Row{s, chi.degree, rep.measured, rep.passed()};
    });

    out.stream() << "seed,M,degree,max_n,worst_margin,verdict\n";
    std::size_t pass_count = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (const Row& r : rows) {
        if (r.pass) ++pass_count;
        worst = std::min(worst, r.worst_margin);
        out.stream() << r.seed << ',' << fmt17(carlson ? 1.0 : m_bound) << ','
                     << r.degree << ',' << max_n << ',' << fmt17(r.worst_margin) << ','
                     << (r.pass ? "pass" : "fail") << '\n';
    }
    out.stream() << "summary,pass=" << pass_count << '/' << rows.size()
                 << ",worst_margin=" << (rows.empty() ? "0" : fmt17(worst)) << ",,,\n";
    return pass_count == rows.size() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sharpness

int cmd_sharpness(double l1, double l2, double r, const std::string& out_path,
                  const Manifest& manifest) {
    const landau::Theorem1Params p{l1, l2};
    const landau::CertificateReport rep = landau::sharpness_witness_F1(p, r);
    json doc;
    doc["manifest"] = manifest_json(manifest);
    doc["rho1"] = landau::rho1(p);
    doc["report"] = json::parse(landau::report_to_json(rep));
    Output out(out_path);
    out.stream() << doc.dump(2) << '\n';
    return rep.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    const auto t0 = std::chrono::steady_clock::now();

    CLI::App app{"Landau-type radii, extremal mappings and numerical "
                 "certification for bounded bi-analytic functions"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
    app.require_subcommand(1);

    Manifest manifest;
    manifest.command = join_args(argc, argv);

    // radii -----------------------------------------------------------------
    auto* radii = app.add_subcommand(
        "radii", "Univalence/covering radius tables and parameter sweeps");
    std::string radii_theorems, radii_compare, radii_format = "csv", radii_out = "-";
    std::map<std::string, std::string> radii_ranges;
    double radii_tol = 1e-13;
    radii->add_option("--theorem", radii_theorems,
                      "Comma-separated ids from t1,t2,t3,t4,tA,tB,tC,tD,tE");
    radii->add_option("--compare", radii_compare,
                      "Emit an improvement table (supported: t3,tE over --m)");
    radii->add_option("--l1", radii_ranges["l1"], "Range for lambda1 (start:stop:count)");
    radii->add_option("--l2", radii_ranges["l2"], "Range for lambda2 (> 1)");
    radii->add_option("--lambda", radii_ranges["lambda"], "Range for lambda");
    radii->add_option("--m1", radii_ranges["m1"], "Range for M1 (>= 1)");
    radii->add_option("--m2", radii_ranges["m2"], "Range for M2 (>= 1)");
    radii->add_option("--m", radii_ranges["m"], "Range for M");
    radii->add_option("--tol", radii_tol, "Root-solver tolerance");
    radii->add_option("--format", radii_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    radii->add_option("--output", radii_out, "Output path (- for stdout)");

    // certify ---------------------------------------------------------------
    auto* certify = app.add_subcommand(
        "certify", "Certification runs for a named map or user series files");
    std::string cert_map;
    std::vector<double> cert_params;
    std::vector<std::string> cert_series;
    double cert_r = -1.0;
    bool cert_theorem_radius = false;
    std::string cert_checks = "inj,jac,cov";
    std::uint64_t cert_seed = 1;
    int cert_n_radial = 0, cert_n_angular = 0;
    double cert_min_sep = 1e-3, cert_cov_tol = 1e-6;
    double cert_lambda = -1.0;
    int cert_pairs = 1000;
    std::string cert_out = "-";
    certify->add_option("map", cert_map, "Map name: F1, F2, F3, F0, f0, fn");
    certify->add_option("params", cert_params, "Map parameters");
    certify->add_option("--series", cert_series,
                        "Two series files g.json h.json instead of a named map")
        ->expected(2);
    certify->add_option("--r", cert_r, "Explicit check radius in (0,1)");
    certify->add_flag("--at-theorem-radius", cert_theorem_radius,
                      "Interior checks at 0.99*rho, coverage at rho vs claimed sigma");
    certify->add_option("--checks", cert_checks,
                        "Comma-separated subset of inj,jac,cov,star,lemma1,lemma4");
    certify->add_option("--seed", cert_seed, "Seed for randomized checks");
    certify->add_option("--n-radial", cert_n_radial, "Grid override: radial count");
    certify->add_option("--n-angular", cert_n_angular, "Grid override: angular count");
    certify->add_option("--min-sep", cert_min_sep,
                        "Injectivity: minimum pair separation in z");
    certify->add_option("--cov-tol", cert_cov_tol, "Coverage comparison tolerance");
    certify->add_option("--lambda", cert_lambda, "Lambda bound for the lemma1 check");
    certify->add_option("--pairs", cert_pairs, "Pair count for the lemma1 check");
    certify->add_option("--output", cert_out, "Output path (- for stdout)");

    // coeffs ----------------------------------------------------------------
    auto* coeffs = app.add_subcommand(
        "coeffs", "Coefficient-inequality campaigns over seeded random samples");
    double co_m = 2.0;
    int co_samples = 100;
    std::uint64_t co_seed = 1;
    int co_max_n = 12;
    bool co_carlson = false, co_extremal = false;
    int co_n = 2;
    std::string co_out = "-";
    coeffs->add_option("--m", co_m, "Bound M >= 1");
    coeffs->add_option("--samples", co_samples, "Number of seeded samples");
    coeffs->add_option("--seed", co_seed, "Base seed (sample i uses seed+i)");
    coeffs->add_option("--max-n", co_max_n, "Highest coefficient index checked");
    coeffs->add_flag("--carlson", co_carlson,
                     "Check the bound-1 inequalities on Schur samples instead");
    coeffs->add_flag("--extremal", co_extremal,
                     "Single extremal row: |a_n| vs M - 1/M for f_n");
    coeffs->add_option("--n", co_n, "Extremal index n >= 2");
    coeffs->add_option("--output", co_out, "Output path (- for stdout)");

    // sharpness --------------------------------------------------------------
    auto* sharp = app.add_subcommand(
        "sharpness", "Equal-value witness for F1 above its univalence radius");
    double sh_l1 = 1.0, sh_l2 = 2.0, sh_r = 0.0;
    std::string sh_out = "-";
    sharp->add_option("--l1", sh_l1, "lambda1 >= 0")->required();
    sharp->add_option("--l2", sh_l2, "lambda2 > 1")->required();
    sharp->add_option("--r", sh_r, "Radius above rho1 (witness lives inside)")->required();
    sharp->add_option("--output", sh_out, "Output path (- for stdout)");

    CLI11_PARSE(app, argc, argv);

    int rc = 0;
    try {
        if (radii->parsed()) {
            std::vector<std::string> ths;
            std::stringstream ss(radii_theorems);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) ths.push_back(item);
            }
            rc = cmd_radii(ths, radii_compare, radii_ranges, radii_tol, radii_format,
                           radii_out, manifest);
        } else if (certify->parsed()) {
            manifest.seed = cert_seed;
            rc = cmd_certify(cert_map, cert_params, cert_series,
                             cert_r > 0.0 ? std::optional<double>(cert_r) : std::nullopt,
                             cert_theorem_radius, cert_checks, cert_seed, cert_n_radial,
                             cert_n_angular, cert_min_sep, cert_cov_tol,
                             cert_lambda > 0.0 ? std::optional<double>(cert_lambda)
                                               : std::nullopt,
                             cert_pairs, cert_out, manifest);
        } else if (coeffs->parsed()) {
            manifest.seed = co_seed;
            rc = cmd_coeffs(co_m, co_samples, co_seed, co_max_n, co_carlson, co_extremal,
                            co_n, co_out, manifest);
        } else if (sharp->parsed()) {
            rc = cmd_sharpness(sh_l1, sh_l2, sh_r, sh_out, manifest);
        }
    } catch (const landau::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const landau::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    const auto t1 = std::chrono::steady_clock::now();
    std::cerr << "wall_time_ms="
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << '\n';
    return rc;
}
