#include <doctest.h>

#include <cmath>
#include <string>

#include "nullsurf/curve.hpp"
#include "nullsurf/errors.hpp"
#include "nullsurf/presets.hpp"
#include "nullsurf/util.hpp"

using namespace nullsurf;

namespace {

NullCurve make_curve(const char* c0, const char* c1, const char* c2, double lo, double hi) {
    NullCurve c;
    c.components = {parse(c0), parse(c1), parse(c2)};
    c.s_min = lo;
    c.s_max = hi;
    return c;
}

NullCurve preset_curve(const char* name) {
    const Preset* p = find_preset(name);
    REQUIRE(p != nullptr);
    return preset_scene(*p).member.curve;
}

double edot(const MVec3& a, const MVec3& b) { return a.c0 * b.c0 + a.c1 * b.c1 + a.c2 * b.c2; }

}  // namespace

TEST_CASE("curve evaluation") {
    NullCurve helix = preset_curve("ex31a");
    MVec3 p = evaluate_curve(helix, M_PI / 2);
    CHECK(p.c0 == doctest::Approx(M_PI / 2));
    CHECK(p.c1 == doctest::Approx(1.0));
    CHECK(std::abs(p.c2) < 1e-12);

    NullCurve cubic = preset_curve("ex32");
    MVec3 q = evaluate_curve(cubic, 2.0);
    double r2 = std::sqrt(2.0);
    CHECK(q.c0 == doctest::Approx(-5.0 * r2 / 3.0));
    CHECK(q.c1 == doctest::Approx(-2.0));
    CHECK(q.c2 == doctest::Approx(r2 / 3.0));
}

TEST_CASE("domain is enforced") {
    NullCurve c = preset_curve("ex31a");
    CHECK_THROWS_AS(evaluate_curve(c, -0.5), OutOfDomainError);
    CHECK_THROWS_AS(evaluate_curve(c, 7.0), OutOfDomainError);
    CHECK_THROWS_AS(build_cartan_frame(c, 7.0), OutOfDomainError);
    CHECK_NOTHROW(evaluate_curve(c, 0.0));
    CHECK_NOTHROW(evaluate_curve(c, c.s_max));
}

TEST_CASE("analytic frame values on the cylindrical curve") {
    NullCurve c = preset_curve("ex31a");
    CartanFrameSample f = build_cartan_frame(c, M_PI / 2);
    CHECK(euclidean_norm(f.ell - MVec3{1, 0, -1}) < 1e-12);
    CHECK(euclidean_norm(f.n - MVec3{0.5, 0, 0.5}) < 1e-12);
    CHECK(euclidean_norm(f.u - MVec3{0, -1, 0}) < 1e-12);
    CHECK(f.k1 == doctest::Approx(1.0));
    CHECK(f.k2 == doctest::Approx(0.5));
}

TEST_CASE("analytic frame curvatures on the cubic curve") {
    NullCurve c = preset_curve("ex32");
    for (double s : linspace(c.s_min, c.s_max, 17)) {
        CartanFrameSample f = build_cartan_frame(c, s);
        CHECK(f.k1 == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(f.k2) < 1e-10);
    }
}

TEST_CASE("automatic frame reproduces the analytic frames") {
    for (const char* name : {"ex31a", "ex32"}) {
        NullCurve with = preset_curve(name);
        NullCurve without = with;
        without.frame.reset();
        for (double s : linspace(with.s_min, with.s_max, 33)) {
            CartanFrameSample a = build_cartan_frame(with, s);
            CartanFrameSample b = build_cartan_frame(without, s);
            CHECK(euclidean_norm(a.ell - b.ell) < 1e-9);
            CHECK(euclidean_norm(a.n - b.n) < 1e-9);
            CHECK(euclidean_norm(a.u - b.u) < 1e-9);
            CHECK(std::abs(a.k1 - b.k1) < 1e-9);
            CHECK(std::abs(a.k2 - b.k2) < 1e-9);
        }
    }
}

TEST_CASE("k2 agrees with a least squares fit of the u equation") {
    // u' = -k2 ell + k1 n determines k2 by projection, independently of the
    // inner product route used in the library.
    for (const char* name : {"ex31a", "ex32"}) {
        NullCurve c = preset_curve(name);
        for (double s : linspace(c.s_min + 0.05, c.s_max - 0.05, 21)) {
            CartanFrameSample f = build_cartan_frame(c, s);
            MVec3 resid = f.du - f.k1 * f.n;
            double k2_lsq = -edot(resid, f.ell) / edot(f.ell, f.ell);
            CHECK(std::abs(f.k2 - k2_lsq) < 1e-8);
        }
    }
}

TEST_CASE("null check flags a spacelike-tangent curve") {
    NullCurve good = preset_curve("ex31b");
    VerificationItem ok = check_null(good, 64, 1e-9);
    CHECK(ok.passed);
    CHECK(ok.max_defect < 1e-12);

    NullCurve bad = make_curve("s", "2*s", "0", 0.0, 1.0);
    VerificationItem item = check_null(bad, 64, 1e-9);
    CHECK_FALSE(item.passed);
    CHECK(item.max_defect == doctest::Approx(3.0));
}

TEST_CASE("straight null line has no frame") {
    NullCurve line = make_curve("s", "s", "0", 0.0, 1.0);
    CHECK(check_null(line, 16, 1e-9).passed);
    CHECK_THROWS_AS(build_cartan_frame(line, 0.5), FrameError);
}

TEST_CASE("frame validation passes the preset frames") {
    for (const char* name : {"ex31a", "ex32"}) {
        NullCurve c = preset_curve(name);
        Tolerances tol;
        VerificationReport rep = validate_frame(c, 128, tol);
        CHECK(rep.overall_pass());
        const VerificationItem* det = rep.find("frame-det");
        REQUIRE(det != nullptr);
        CHECK(det->passed);
        CHECK(rep.find("frame-nu-alt-convention") == nullptr);
    }
}

TEST_CASE("frame validation catches a rescaled u") {
    NullCurve c = preset_curve("ex31a");
    AnalyticFrame af = *c.frame;
    af.u = {parse("0"), parse("-1.1*sin(s)"), parse("-1.1*cos(s)")};
    c.frame = af;
    VerificationReport rep = validate_frame(c, 64, Tolerances{});
    CHECK_FALSE(rep.overall_pass());
    const VerificationItem* uu = rep.find("metric-uu");
    REQUIRE(uu != nullptr);
    CHECK_FALSE(uu->passed);
    CHECK(uu->max_defect == doctest::Approx(0.21));
}

TEST_CASE("a frame using the opposite n-u convention is called out") {
    NullCurve c = preset_curve("ex31a");
    AnalyticFrame af = *c.frame;
    // n + u has <n+u, u> = 1: the convention this library does not use.
    af.n = {parse("1/2"), parse("-cos(s)/2 - sin(s)"), parse("sin(s)/2 - cos(s)")};
    c.frame = af;
    VerificationReport rep = validate_frame(c, 64, Tolerances{});
    CHECK_FALSE(rep.overall_pass());
    const VerificationItem* nu = rep.find("metric-nu");
    REQUIRE(nu != nullptr);
    CHECK_FALSE(nu->passed);
    const VerificationItem* alt = rep.find("frame-nu-alt-convention");
    REQUIRE(alt != nullptr);
    CHECK(alt->severity == Severity::Warning);
}
