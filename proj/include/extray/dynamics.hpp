#pragma once

#include <array>
#include <complex>

namespace extray {

using Complex = std::complex<double>;

enum class Family { Mandelbrot, Tricorn };
const char* to_string(Family f);

enum class OrbitStart { CriticalPoint, CriticalValue };

// squaring cascades overflow doubles quickly; orbits stop early past this
constexpr double kOverflowGuard = 1e150;

// value + exact d/dc of the composition
struct CJet {
    Complex z{0, 0};
    Complex dc{0, 0};
};

// value + Wirtinger pair (d/dc, d/dcbar); the total real differential of the
// composition is dc*delta_c + dcbar*conj(delta_c)
struct WJet {
    Complex z{0, 0};
    Complex dc{0, 0};
    Complex dcbar{0, 0};
};

template <class Jet>
struct OrbitResult {
    Jet jet;
    bool escaped = false;  // |z| exceeded the overflow guard before n steps
    int steps = 0;         // steps actually taken
    double modulus = 0;    // |z| at the stopping step
};

// p_c(z) = z^2 + c iterated n times from the critical point 0 (jet dc = 0)
// or from the critical value c (jet dc = 1).
OrbitResult<CJet> quad_orbit(Complex c, OrbitStart start, int n);

// f_c(z) = conj(z)^2 + c; Wirtinger recursion under one step is
//   dc'    = 2 conj(z) conj(dcbar) + 1,
//   dcbar' = 2 conj(z) conj(dc).
OrbitResult<WJet> anti_orbit(Complex c, OrbitStart start, int n);

// lambda = (a,b) in R^2 with c = (a+ib)^2; lambda and -lambda give the same c.
struct TricornParam {
    double a = 0;
    double b = 0;
    Complex c() const {
        Complex w(a, b);
        return w * w;
    }
};

// P_lambda(z) = z^4 + 2(a-ib)^2 z^2 + (a+ib)^2 + (a-ib)^4, the second iterate
// of f_c for c = (a+ib)^2.
Complex quartic_eval(const TricornParam& lambda, Complex z);

// critical points of P_lambda: (0, ia+b, -(ia+b)); the last two coincide only
// at lambda = (0,0) on real parameters
std::array<Complex, 3> quartic_crit(const TricornParam& lambda);

struct GreenResult {
    double g = 0;      // see normalization note below
    double bound = 0;  // tail estimate when escaped, cap when not
    bool escaped = false;
    int steps = 0;        // map iterations taken (f-steps for the tricorn)
    double g_quartic = 0; // tricorn only: the P_lambda-scale value r = g/2
};

// Escape-time Green function g(z) = lim D^-n log+|z_n|.
//
// Mandelbrot: one step of p_c per iteration, D = 2; g = g_{p_c}(z).
// Tricorn: D = 4 per double-step of f_c, which is the Green function of the
// degree-4 second iterate P_lambda; the primary g is reported in potential
// units t = log|Psi*| = 2 g_{P_lambda} and the quartic-scale value is kept in
// g_quartic. Along a ray at potential t this gives g(at z=0) = t and
// g(at c_1) = t/2.
GreenResult green(Family family, Complex c, Complex z, double r_work = 1e6, int n_max = 2000);

// potential of the parameter itself: g at the critical value (Mandelbrot),
// potential-unit g at the critical point 0 (tricorn); equals t along a ray
double parameter_potential(Family family, Complex c, double r_work = 1e6, int n_max = 2000);

}  // namespace extray
