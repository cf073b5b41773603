#include <doctest.h>

#include <cmath>

#include "landau/certify.hpp"
#include "landau/schur.hpp"

#include "oracles.hpp"

using landau::BiAnalyticMap;
using landau::CertificateReport;
using landau::Complex;
using landau::GridSpec;
using landau::SeriesFunction;
using landau::Theorem1Params;
using landau::Verdict;

TEST_CASE("injectivity: identity map passes") {
    const BiAnalyticMap id = landau::make_analytic_map(
        landau::ClosedFormFunction::identity(), "id");
    const CertificateReport rep =
        landau::injectivity_check(id, GridSpec{40, 100, 0.999, true});
    CHECK(rep.passed());
    CHECK(rep.verdict_label() == "pass (grid-level)");
}

TEST_CASE("injectivity: F1 below its radius passes") {
    const Theorem1Params p{1.0, 2.0};
    const BiAnalyticMap f1 = landau::make_F1(p);
    const double rho = landau::rho1(p);
    const CertificateReport rep =
        landau::injectivity_check(f1, GridSpec{40, 100, 0.99 * rho, true});
    CHECK(rep.passed());
}

TEST_CASE("injectivity: F2 above its radius fails with a genuine witness") {
    // rho2(2) = 0.25; at radius 0.3 the real pair (-0.2, -0.3) collides
    // exactly (2x^2 + x is symmetric about -1/4) and lies on a 30-radial
    // boundary-inclusive grid.
    const BiAnalyticMap f2 = landau::make_F2(2.0);
    const CertificateReport rep =
        landau::injectivity_check(f2, GridSpec{30, 100, 0.3, true});
    REQUIRE(rep.verdict == Verdict::fail);
    REQUIRE(rep.witness.has_value());
    // Soundness: the witness re-evaluates to a violation independent of the
    // grid machinery.
    const Complex w1 = f2.eval(rep.witness->z1);
    const Complex w2 = f2.eval(rep.witness->z2);
    CHECK(std::abs(rep.witness->z1 - rep.witness->z2) >= 1e-3);
    CHECK(std::abs(w1 - w2) <= rep.tolerance);
}

TEST_CASE("injectivity: analytic f0 straddles its classical radius") {
    // f0(M) is univalent exactly up to 1/(M + sqrt(M^2-1)); for M = 2 that
    // is ~0.2679, so 0.26 passes and 0.5 must produce a genuine collision.
    const landau::BiAnalyticMap f0 = landau::make_analytic_map(
        landau::ClosedFormFunction::landau_f0(2.0), "f0(2)");
    CHECK(landau::injectivity_check(f0, GridSpec{40, 100, 0.26, true}).passed());

    const CertificateReport rep =
        landau::injectivity_check(f0, GridSpec{40, 100, 0.5, true});
    REQUIRE(rep.verdict == Verdict::fail);
    REQUIRE(rep.witness.has_value());
    CHECK(std::abs(f0.eval(rep.witness->z1) - f0.eval(rep.witness->z2)) <=
          rep.tolerance);
    CHECK(std::abs(rep.witness->z1 - rep.witness->z2) >= 1e-3);
}

TEST_CASE("injectivity grid cap") {
    const BiAnalyticMap id = landau::make_analytic_map(
        landau::ClosedFormFunction::identity(), "id");
    CHECK_THROWS_AS(landau::injectivity_check(id, GridSpec{300, 300, 0.5, true}),
                    landau::GridCapError);
}

TEST_CASE("jacobian positivity") {
    const BiAnalyticMap id = landau::make_analytic_map(
        landau::ClosedFormFunction::identity(), "id");
    const CertificateReport ok = landau::jacobian_positivity(id, GridSpec{20, 64, 0.9, true});
    CHECK(ok.passed());
    CHECK(ok.measured == doctest::Approx(1.0).epsilon(1e-14));

    // Theorem 4 instance: F3 is sense-preserving below 1/2.
    const CertificateReport f3ok =
        landau::jacobian_positivity(landau::make_F3(), GridSpec{100, 256, 0.49, true});
    CHECK(f3ok.passed());

    // F2(1) at radius 0.6: J(-0.6) = |(-0.6)+1|^2 - 0.36 < 0.
    const BiAnalyticMap f2 = landau::make_F2(1.0);
    const CertificateReport bad =
        landau::jacobian_positivity(f2, GridSpec{100, 256, 0.6, true});
    REQUIRE(bad.verdict == Verdict::fail);
    REQUIRE(bad.witness.has_value());
    // Witness re-evaluates negative by direct hand formula |z*1+1|^2 - |z|^2.
    const Complex z = bad.witness->z1;
    const double by_hand = std::norm(std::conj(z) * 1.0 + 1.0) - std::norm(z);
    CHECK(by_hand < 0.0);
    CHECK(f2.jacobian(z) == doctest::Approx(by_hand).epsilon(1e-12));
}

TEST_CASE("coverage of the identity") {
    const BiAnalyticMap id = landau::make_analytic_map(
        landau::ClosedFormFunction::identity(), "id");
    const CertificateReport rep = landau::coverage_min_modulus(id, 0.7, 256, 0.7, 1e-9);
    CHECK(rep.passed());
    CHECK(rep.measured == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("coverage of F1 at rho1 attains sigma1 at theta = 0") {
    const Theorem1Params p{1.0, 2.0};
    const BiAnalyticMap f1 = landau::make_F1(p);
    const double rho = landau::rho1(p);
    const double sig = landau::sigma1(p);
    const CertificateReport rep = landau::coverage_min_modulus(f1, rho, 512, sig, 1e-6);
    CHECK(rep.passed());
    CHECK(std::abs(rep.measured - sig) <= 1e-6);
    REQUIRE(rep.witness.has_value());
    const double theta = std::atan2(rep.witness->z1.imag(), rep.witness->z1.real());
    CHECK(std::abs(theta) <= 1e-6);
}

TEST_CASE("coverage of F2 at rho2 attains the minimum at theta = pi") {
    const double lambda = 2.0;
    const BiAnalyticMap f2 = landau::make_F2(lambda);
    const auto rr = landau::rho2_sigma2(landau::Theorem2Params{lambda});
    const CertificateReport rep =
        landau::coverage_min_modulus(f2, rr.rho, 256, rr.sigma, 1e-10);
    CHECK(rep.passed());
    CHECK(std::abs(rep.measured - (rr.rho - lambda * rr.rho * rr.rho)) <= 1e-10);
    REQUIRE(rep.witness.has_value());
    const double theta = std::atan2(rep.witness->z1.imag(), rep.witness->z1.real());
    CHECK(std::abs(std::abs(theta) - 3.14159265358979323846) <= 1e-6);
}

TEST_CASE("starlike check") {
    const BiAnalyticMap id = landau::make_analytic_map(
        landau::ClosedFormFunction::identity(), "id");
    const CertificateReport rep = landau::starlike_boundary_check(id, 0.8, 64);
    CHECK(rep.passed());
    CHECK(rep.measured == doctest::Approx(1.0).epsilon(1e-12));

    // Theorem 4 instance at r = 0.49.
    CHECK(landau::starlike_boundary_check(landau::make_F3(), 0.49, 256).passed());

    // F2(2) at r = 0.45: no claim at this radius; record the measured sign.
    const CertificateReport info =
        landau::starlike_boundary_check(landau::make_F2(2.0), 0.45, 256);
    MESSAGE("F2(2) starlike functional min at r=0.45: " << info.measured);
}

TEST_CASE("sharpness witness for F1") {
    const Theorem1Params p{1.0, 2.0};
    const double rho = landau::rho1(p);
    const CertificateReport rep = landau::sharpness_witness_F1(p, rho + 0.05);
    CHECK(rep.passed());
    REQUIRE(rep.witness.has_value());
    CHECK(rep.measured <= 1e-10);

    // The pair straddles rho1 on the real axis.
    CHECK(rep.witness->z1.real() > rho);
    CHECK(rep.witness->z2.real() < rho);
    CHECK(rep.witness->z2.real() > 0.0);
    CHECK(std::abs(rep.witness->z1.imag()) == 0.0);

    // h0'(rho1) = 0 and h0(0) = 0.
    CHECK(std::abs(landau::h0_derivative(p, rho)) <= 1e-10);
    CHECK(landau::h0(p, 0.0) == 0.0);

    CHECK_THROWS_AS(landau::sharpness_witness_F1(p, rho * 0.9), landau::DomainError);
}

TEST_CASE("coverage of F3 at the sharp radius") {
    // Coverage at rho3(1,1) = 1/2 equals sigma3 = 1/4, attained at theta = pi.
    const CertificateReport rep =
        landau::coverage_min_modulus(landau::make_F3(), 0.5, 256, 0.25, 1e-6);
    CHECK(rep.passed());
    CHECK(std::abs(rep.measured - 0.25) <= 1e-10);
}

TEST_CASE("F3 collides just above 1/2") {
    // F3 = F2(lambda = 1); x^2 + x pairs about -1/2 fit inside any radius
    // 1/2 + eps.
    const CertificateReport rep = landau::collision_witness_F2(1.0, 0.52);
    CHECK(rep.passed());
    REQUIRE(rep.witness.has_value());
    CHECK(rep.measured <= 1e-10);
    CHECK(std::abs(rep.witness->z1) < 0.52);
    CHECK(std::abs(rep.witness->z2) < 0.52);
    const landau::BiAnalyticMap f3 = landau::make_F3();
    CHECK(std::abs(f3.eval(rep.witness->z1) - f3.eval(rep.witness->z2)) <= 1e-15);
}

TEST_CASE("algebraic collision witness for F2") {
    const double lambda = 2.0;
    const double rho = 0.25;
    const CertificateReport rep = landau::collision_witness_F2(lambda, 1.05 * rho);
    CHECK(rep.passed());
    REQUIRE(rep.witness.has_value());
    CHECK(rep.measured <= 1e-10);
    CHECK(std::abs(rep.witness->z1 - rep.witness->z2) > 1e-3);
    // x2 = -x1 - 1/lambda.
    CHECK(rep.witness->z2.real() ==
          doctest::Approx(-rep.witness->z1.real() - 1.0 / lambda).epsilon(1e-12));
    CHECK_THROWS_AS(landau::collision_witness_F2(0.4, 0.9), landau::DomainError);
}

TEST_CASE("lemma1 bounds for the extremal H-part") {
    const Theorem1Params p{0.0, 2.0};
    const BiAnalyticMap f1 = landau::make_F1(p);
    const CertificateReport rep =
        landau::lemma1_distortion_check(f1.h(), p.lambda2, 0.2, 1000, 7);
    CHECK(rep.passed());
    CHECK(rep.measured >= -rep.tolerance);
}

TEST_CASE("lemma1 with near-identity bound") {
    // H = z with lambda = 1.01: the difference quotient is exactly 1, above
    // the bound 1.01(1 - 1.01 r)/(1.01 - r) < 1.
    const landau::AnalyticFunction h{landau::ClosedFormFunction::identity()};
    const CertificateReport rep = landau::lemma1_distortion_check(h, 1.01, 0.5, 200, 3);
    CHECK(rep.passed());
    CHECK(rep.qualifier.empty());
}

TEST_CASE("lemma1 vacuous regime is reported distinctly") {
    // lambda = 4, r = 0.4: distortion factor 4(1 - 1.6)/(3.6) < 0.
    const landau::AnalyticFunction h{landau::ClosedFormFunction::h1_part(4.0)};
    const CertificateReport rep = landau::lemma1_distortion_check(h, 4.0, 0.4, 100, 5);
    CHECK(rep.passed());
    CHECK(rep.qualifier == "distortion-vacuous");
}

TEST_CASE("lemma4 radius for F3 parts is exactly 1/2") {
    const SeriesFunction z_series({Complex{0, 0}, Complex{1, 0}});
    const double r = landau::lemma4_radius(z_series, z_series);
    CHECK(r == 0.5);
    CHECK(r == landau::rho3(landau::Theorem3Params{1.0, 1.0}));
}

TEST_CASE("lemma4 rejects g identically zero and unnormalized h") {
    const SeriesFunction z_series({Complex{0, 0}, Complex{1, 0}});
    const SeriesFunction zero({Complex{0, 0}});
    CHECK_THROWS_AS(landau::lemma4_radius(zero, z_series), landau::DomainError);
    const SeriesFunction bad_h({Complex{0, 0}, Complex{2, 0}});
    CHECK_THROWS_AS(landau::lemma4_radius(z_series, bad_h), landau::NormalizationError);
}

TEST_CASE("lemma4 agrees with a dense scan on truncated extremal parts") {
    const SeriesFunction g = landau::ClosedFormFunction::lemma3_fn(2.0, 2).expand(60, 0.9);
    const SeriesFunction h = landau::ClosedFormFunction::lemma3_fn(2.0, 3).expand(60, 0.9);
    const double r = landau::lemma4_radius(g, h);
    // Dense scan of the padded condition sum for its crossing of 1.
    const double scanned = oracles::dense_scan_root(
        [&](double x) { return 1.0 - landau::lemma4_condition_sum(g, h, x); }, 1000000);
    CHECK(std::abs(r - scanned) <= 1e-6);
}

TEST_CASE("lemma4 radius shrinks when coefficients grow") {
    const SeriesFunction g({Complex{0, 0}, Complex{0.5, 0}});
    const SeriesFunction g_bigger({Complex{0, 0}, Complex{0.8, 0}});
    const SeriesFunction h({Complex{0, 0}, Complex{1, 0}, Complex{0.1, 0}});
    const SeriesFunction h_bigger({Complex{0, 0}, Complex{1, 0}, Complex{0.3, 0}});
    const double base = landau::lemma4_radius(g, h);
    CHECK(landau::lemma4_radius(g_bigger, h) <= base);
    CHECK(landau::lemma4_radius(g, h_bigger) <= base);
}

TEST_CASE("report serialization shape") {
    const BiAnalyticMap f2 = landau::make_F2(2.0);
    const CertificateReport rep =
        landau::injectivity_check(f2, GridSpec{30, 100, 0.3, true});
    const std::string js = landau::report_to_json(rep);
    CHECK(js.find("\"kind\":\"injectivity\"") != std::string::npos);
    CHECK(js.find("\"verdict\":\"fail\"") != std::string::npos);
    CHECK(js.find("\"witness\":{") != std::string::npos);
    CHECK(js.find("\"grid\":") != std::string::npos);

    const CertificateReport ok =
        landau::injectivity_check(f2, GridSpec{30, 100, 0.2, true});
    const std::string js2 = landau::report_to_json(ok);
    CHECK(js2.find("\"verdict\":\"pass (grid-level)\"") != std::string::npos);
    CHECK(js2.find("\"witness\":null") != std::string::npos);
}
