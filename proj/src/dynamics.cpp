#include "extray/dynamics.hpp"

#include <cmath>

namespace extray {

const char* to_string(Family f) { return f == Family::Mandelbrot ? "mandelbrot" : "tricorn"; }

OrbitResult<CJet> quad_orbit(Complex c, OrbitStart start, int n) {
    OrbitResult<CJet> r;
    r.jet.z = start == OrbitStart::CriticalPoint ? Complex(0, 0) : c;
    r.jet.dc = start == OrbitStart::CriticalPoint ? Complex(0, 0) : Complex(1, 0);
    for (int i = 0; i < n; ++i) {
        r.modulus = std::abs(r.jet.z);
        if (r.modulus > kOverflowGuard) {
            r.escaped = true;
            return r;
        }
        r.jet.dc = 2.0 * r.jet.z * r.jet.dc + 1.0;
        r.jet.z = r.jet.z * r.jet.z + c;
        r.steps = i + 1;
    }
    r.modulus = std::abs(r.jet.z);
    return r;
}

OrbitResult<WJet> anti_orbit(Complex c, OrbitStart start, int n) {
    OrbitResult<WJet> r;
    r.jet.z = start == OrbitStart::CriticalPoint ? Complex(0, 0) : c;
    r.jet.dc = start == OrbitStart::CriticalPoint ? Complex(0, 0) : Complex(1, 0);
    r.jet.dcbar = Complex(0, 0);
    for (int i = 0; i < n; ++i) {
        r.modulus = std::abs(r.jet.z);
        if (r.modulus > kOverflowGuard) {
            r.escaped = true;
            return r;
        }
        Complex zb = std::conj(r.jet.z);
        Complex du = 2.0 * zb * std::conj(r.jet.dcbar) + 1.0;
        Complex dv = 2.0 * zb * std::conj(r.jet.dc);
        r.jet.dc = du;
        r.jet.dcbar = dv;
        r.jet.z = zb * zb + c;
        r.steps = i + 1;
    }
    r.modulus = std::abs(r.jet.z);
    return r;
}

Complex quartic_eval(const TricornParam& lambda, Complex z) {
    Complex wp(lambda.a, lambda.b);    // a+ib
    Complex wm(lambda.a, -lambda.b);   // a-ib
    Complex wm2 = wm * wm;
    Complex z2 = z * z;
    return z2 * z2 + 2.0 * wm2 * z2 + wp * wp + wm2 * wm2;
}

std::array<Complex, 3> quartic_crit(const TricornParam& lambda) {
    Complex c1(lambda.b, lambda.a);  // ia + b
    return {Complex(0, 0), c1, -c1};
}

GreenResult green(Family family, Complex c, Complex z, double r_work, int n_max) {
    GreenResult out;
    const bool tric = family == Family::Tricorn;
    const int max_steps = tric ? 2 * n_max : n_max;
    // |z| > r_work alone does not certify escape: preimages of small values
    // (the quartic critical points at modulus sqrt|c|) sit far out yet map
    // back inside, so the radius must dominate the parameter scale
    const double r_stop = std::max(r_work, 4.0 * (1.0 + std::sqrt(std::abs(c))));
    int m = 0;
    double az = std::abs(z);
    while (az <= r_stop && m < max_steps) {
        if (az > kOverflowGuard) break;
        if (tric) {
            Complex zb = std::conj(z);
            z = zb * zb + c;
        } else {
            z = z * z + c;
        }
        az = std::abs(z);
        ++m;
    }
    out.steps = m;
    if (az > r_stop) {
        out.escaped = true;
        // halving-per-step scale: 2^-m log|z_m|; this is g_{p_c} for the
        // quadratic and g_{P_lambda} for the tricorn (D = 4 per double-step)
        double base = std::ldexp(std::log(az), -m);
        double tail = std::ldexp(std::log1p(std::abs(c) / r_stop), -m);
        if (tric) {
            out.g_quartic = base;
            out.g = 2.0 * base;
            out.bound = 2.0 * tail;
        } else {
            out.g = base;
            out.bound = tail;
        }
    } else {
        out.g = 0;
        out.g_quartic = 0;
        out.bound = std::ldexp(std::log(r_stop), -m);
        if (tric) out.bound *= 2.0;
    }
    return out;
}

double parameter_potential(Family family, Complex c, double r_work, int n_max) {
    if (family == Family::Mandelbrot) return green(family, c, c, r_work, n_max).g;
    return green(family, c, Complex(0, 0), r_work, n_max).g;
}

}  // namespace extray
