#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "extray/poly.hpp"

using namespace extray;

namespace {

double min_dist(const std::vector<Complex>& roots, Complex w) {
    double d = 1e300;
    for (Complex r : roots) d = std::min(d, std::abs(r - w));
    return d;
}

}  // namespace

TEST_CASE("aberth finds the roots of simple polynomials") {
    // z^3 - 1
    Poly cyc{{Complex(-1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)}};
    auto roots = aberth_roots(cyc);
    REQUIRE(roots.size() == 3);
    for (int k = 0; k < 3; ++k) {
        Complex w = std::polar(1.0, 2 * M_PI * k / 3);
        CHECK(min_dist(roots, w) < 1e-10);
    }

    // (z-2)(z+3)(z-i) expanded: z^3 + (1-i) z^2 + (-6-i) z + 6i
    Poly p{{Complex(0, 6), Complex(-6, -1), Complex(1, -1), Complex(1, 0)}};
    roots = aberth_roots(p);
    CHECK(min_dist(roots, Complex(2, 0)) < 1e-10);
    CHECK(min_dist(roots, Complex(-3, 0)) < 1e-10);
    CHECK(min_dist(roots, Complex(0, 1)) < 1e-10);
}

TEST_CASE("critical orbit roots at degree 128") {
    // roots of p_c^8(0) through the stable orbit evaluation: every computed
    // root is a center with a tiny orbit residual, and roots are distinct
    auto roots = critical_orbit_roots(8);
    REQUIRE(roots.size() == 128);
    for (Complex r : roots) {
        Complex z(0, 0);
        for (int i = 0; i < 8; ++i) z = z * z + r;
        CHECK(std::abs(z) <= 1e-10);
        CHECK(std::abs(r) < 2.1);  // centers live in the Mandelbrot set
    }
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            CHECK(std::abs(roots[i] - roots[j]) > 1e-8);

    // the known low-period centers appear
    auto has = [&roots](Complex w) {
        for (Complex r : roots)
            if (std::abs(r - w) < 1e-10) return true;
        return false;
    };
    CHECK(has(Complex(0, 0)));
    CHECK(has(Complex(-1, 0)));  // period 2
    // divisibility: every root of p^4(0) is a root of p^8(0)
    for (Complex r : critical_orbit_roots(4)) CHECK(has(r));
}

TEST_CASE("critical orbit polynomials, exact") {
    // p^1(0) = c, p^2(0) = c^2 + c, p^3(0) = (c^2+c)^2 + c
    CHECK(critical_orbit_poly(1).coef == std::vector<BigInt>{BigInt(0), BigInt(1)});
    CHECK(critical_orbit_poly(2).coef ==
          std::vector<BigInt>{BigInt(0), BigInt(1), BigInt(1)});
    IntPoly p3 = critical_orbit_poly(3);
    CHECK(p3.coef == std::vector<BigInt>{BigInt(0), BigInt(1), BigInt(1), BigInt(2), BigInt(1)});

    // evaluation agrees with direct iteration at a few rational points
    for (double c : {-1.5, -0.25, 0.3}) {
        Complex z(0, 0);
        for (int i = 0; i < 6; ++i) z = z * z + c;
        CHECK(std::abs(critical_orbit_poly(6).to_complex().eval(Complex(c, 0)) - z) < 1e-9);
    }
}

TEST_CASE("per(n,1) factorization is exact for n <= 8") {
    // p_c^n(0) - p_c(0) = (p_c^(n-1)(0))^2 as integer polynomials; every
    // parameter with p^n(0) = p(0) is a center of period dividing n-1
    for (int n = 2; n <= 8; ++n) {
        IntPoly lhs = critical_orbit_poly(n);
        lhs.coef[1] -= BigInt(1);  // subtract p(0) = c
        IntPoly prev = critical_orbit_poly(n - 1);
        CHECK(lhs == prev * prev);
    }
}

TEST_CASE("periodic points via the solver") {
    Complex c(0.1, 0.05);
    auto fixed = periodic_point_roots(c, 1);
    REQUIRE(fixed.size() == 2);
    for (Complex r : fixed) CHECK(std::abs(r * r + c - r) < 1e-12);

    for (int q : {3, 5, 7}) {
        auto roots = periodic_point_roots(Complex(-0.75, 0.1), q);
        REQUIRE(static_cast<int>(roots.size()) == 1 << q);
        for (Complex r : roots) {
            Complex w = r;
            for (int i = 0; i < q; ++i) w = w * w + Complex(-0.75, 0.1);
            CHECK(std::abs(w - r) < 1e-9);
        }
    }
}
