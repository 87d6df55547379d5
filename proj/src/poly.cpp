#include "extray/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace extray {

Complex Poly::eval(Complex z) const {
    Complex v(0, 0);
    for (size_t i = coef.size(); i-- > 0;) v = v * z + coef[i];
    return v;
}

Complex Poly::eval_with_deriv(Complex z, Complex* deriv) const {
    Complex v(0, 0), d(0, 0);
    for (size_t i = coef.size(); i-- > 0;) {
        d = d * z + v;
        v = v * z + coef[i];
    }
    *deriv = d;
    return v;
}

Poly Poly::derivative() const {
    Poly d;
    for (size_t i = 1; i < coef.size(); ++i) d.coef.push_back(coef[i] * double(i));
    return d;
}

std::vector<Complex> aberth_roots_fn(int degree, double radius,
                                     const std::function<Complex(Complex, Complex*)>& eval,
                                     double tol, int max_iters) {
    if (degree < 1) throw std::invalid_argument("aberth_roots: degree >= 1 required");
    std::vector<Complex> z(degree);
    for (int k = 0; k < degree; ++k) {
        double ang = 2.0 * M_PI * k / degree + 0.4;
        z[k] = 0.7 * radius * Complex(std::cos(ang), std::sin(ang));
    }
    for (int iter = 0; iter < max_iters; ++iter) {
        double worst = 0;
        for (int k = 0; k < degree; ++k) {
            Complex deriv;
            Complex val = eval(z[k], &deriv);
            if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) {
                z[k] *= 0.5;  // overflowed; pull toward the origin
                worst = 1;
                continue;
            }
            if (val == Complex(0, 0)) continue;
            if (deriv == Complex(0, 0)) {
                z[k] += Complex(1e-8, 1e-8);
                worst = 1;
                continue;
            }
            Complex w = val / deriv;
            Complex s(0, 0);
            for (int j = 0; j < degree; ++j)
                if (j != k) s += 1.0 / (z[k] - z[j]);
            Complex corr = w / (1.0 - w * s);
            z[k] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[k])));
        }
        if (worst <= tol) break;
    }
    return z;
}

std::vector<Complex> aberth_roots(const Poly& p, double tol, int max_iters) {
    Poly q = p;
    while (!q.coef.empty() && std::abs(q.coef.back()) == 0.0) q.coef.pop_back();
    const int d = q.degree();
    if (d < 1) throw std::invalid_argument("aberth_roots: degree >= 1 required");
    for (auto& c : q.coef) c /= q.coef.back();

    // Fujiwara bound for the root radius
    double r = 0;
    for (int i = 0; i < d; ++i) {
        double a = std::abs(q.coef[i]);
        if (a > 0) r = std::max(r, std::pow(a, 1.0 / (d - i)));
    }
    r = 2.0 * std::max(r, 1e-6);
    return aberth_roots_fn(
        d, r, [&q](Complex z, Complex* deriv) { return q.eval_with_deriv(z, deriv); }, tol,
        max_iters);
}

std::vector<Complex> critical_orbit_roots(int n) {
    if (n < 1) throw std::invalid_argument("critical_orbit_roots: n >= 1 required");
    if (n == 1) return {Complex(0, 0)};
    auto eval = [n](Complex c, Complex* deriv) {
        auto r = quad_orbit(c, OrbitStart::CriticalPoint, n);
        *deriv = r.jet.dc;
        return r.jet.z;
    };
    return aberth_roots_fn(1 << (n - 1), 2.0, eval);
}

std::vector<Complex> periodic_point_roots(Complex c, int q) {
    if (q < 1 || q > 10) throw std::invalid_argument("periodic_point_roots: 1 <= q <= 10");
    auto eval = [c, q](Complex z, Complex* deriv) {
        Complex w = z, d(1, 0);
        for (int i = 0; i < q; ++i) {
            d *= 2.0 * w;
            w = w * w + c;
        }
        *deriv = d - 1.0;
        return w - z;
    };
    return aberth_roots_fn(1 << q, 2.0 + std::sqrt(std::abs(c)), eval);
}

void IntPoly::trim() {
    while (!coef.empty() && coef.back().is_zero()) coef.pop_back();
}

bool IntPoly::operator==(const IntPoly& o) const {
    IntPoly a = *this, b = o;
    a.trim();
    b.trim();
    return a.coef == b.coef;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    IntPoly r;
    if (coef.empty() || o.coef.empty()) return r;
    r.coef.assign(coef.size() + o.coef.size() - 1, BigInt(0));
    for (size_t i = 0; i < coef.size(); ++i) {
        if (coef[i].is_zero()) continue;
        for (size_t j = 0; j < o.coef.size(); ++j)
            r.coef[i + j] += coef[i] * o.coef[j];
    }
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r = *this;
    if (r.coef.size() < o.coef.size()) r.coef.resize(o.coef.size(), BigInt(0));
    for (size_t i = 0; i < o.coef.size(); ++i) r.coef[i] -= o.coef[i];
    r.trim();
    return r;
}

Poly IntPoly::to_complex() const {
    Poly p;
    p.coef.reserve(coef.size());
    for (const BigInt& b : coef) p.coef.emplace_back(b.to_double(), 0.0);
    return p;
}

IntPoly critical_orbit_poly(int n) {
    if (n < 1) throw std::invalid_argument("critical_orbit_poly: n >= 1 required");
    IntPoly p;
    p.coef = {BigInt(0), BigInt(1)};  // p_c^1(0) = c
    for (int m = 1; m < n; ++m) {
        p = p * p;
        if (p.coef.size() < 2) p.coef.resize(2, BigInt(0));
        p.coef[1] += BigInt(1);  // square then add c
    }
    return p;
}


}  // namespace extray
