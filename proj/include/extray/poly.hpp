#pragma once

#include <functional>
#include <vector>

#include "extray/bigint.hpp"
#include "extray/dynamics.hpp"

namespace extray {

// dense polynomial, coef[i] multiplies z^i
struct Poly {
    std::vector<Complex> coef;

    int degree() const { return static_cast<int>(coef.size()) - 1; }
    Complex eval(Complex z) const;
    Complex eval_with_deriv(Complex z, Complex* deriv) const;
    Poly derivative() const;
};

// All roots by the Aberth-Ehrlich simultaneous iteration. Meant for the
// moderate degrees used here (<= 1024); roots of multiplicity > 1 come back
// as close clusters.
std::vector<Complex> aberth_roots(const Poly& p, double tol = 1e-13, int max_iters = 400);

// Same iteration with caller-supplied evaluation: coefficient-form Horner is
// hopeless for orbit polynomials (terms near 1e40 cancelling to O(1)), while
// the orbit recursion evaluates them stably. eval returns p(z) and writes
// p'(z); degree and a root-radius bound must be known to the caller.
std::vector<Complex> aberth_roots_fn(int degree, double radius,
                                     const std::function<Complex(Complex, Complex*)>& eval,
                                     double tol = 1e-13, int max_iters = 400);

// centers of period dividing n (roots of p_c^n(0), degree 2^(n-1)), via the
// stable orbit evaluation
std::vector<Complex> critical_orbit_roots(int n);

// periodic points of p_c of period dividing q (roots of p_c^q(z) - z)
std::vector<Complex> periodic_point_roots(Complex c, int q);

// exact integer polynomial in one variable
struct IntPoly {
    std::vector<BigInt> coef;

    int degree() const { return static_cast<int>(coef.size()) - 1; }
    void trim();
    bool operator==(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    Poly to_complex() const;
};

// p_c^n(0) as an exact polynomial in c (degree 2^(n-1)); n >= 1
IntPoly critical_orbit_poly(int n);

}  // namespace extray
