#include "extray/landing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "extray/poly.hpp"

namespace extray {

const char* to_string(LandingKind k) {
    switch (k) {
        case LandingKind::Misiurewicz: return "misiurewicz";
        case LandingKind::Parabolic: return "parabolic";
        default: return "unrefined";
    }
}

namespace {

constexpr double kStrictness = 1e-3;
constexpr double kCycleTol = 1e-9;

// refinement Newton runs in extended precision: the orbit equations amplify
// rounding by the orbit derivative, and the extra bits keep the residual
// floor under the 1e-12 contract through the desk-scale (n,k)
using LComplex = std::complex<long double>;

LComplex widen(Complex z) { return {z.real(), z.imag()}; }
Complex narrow(LComplex z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

double residual_scale(Complex c) { return std::max(1.0, std::abs(c)); }

// orbit of the critical point with values retained
std::vector<Complex> orbit_points(Family family, Complex c, int steps) {
    std::vector<Complex> zs(steps + 1);
    zs[0] = Complex(0, 0);
    for (int i = 0; i < steps; ++i) {
        if (std::abs(zs[i]) > kOverflowGuard) {
            zs.resize(i + 1);
            break;
        }
        zs[i + 1] = family == Family::Mandelbrot ? zs[i] * zs[i] + c
                                                 : std::conj(zs[i]) * std::conj(zs[i]) + c;
    }
    return zs;
}

int detect_cycle_period(Family family, Complex c, int n, int k) {
    auto zs = orbit_points(family, c, n);
    if (static_cast<int>(zs.size()) <= n) return 0;
    for (int p = 1; p <= n - k; ++p)
        if (std::abs(zs[k + p] - zs[k]) <= kCycleTol) return p;
    return 0;
}

LandingRecord refine_misiurewicz_quadratic(Complex seed, int n, int k) {
    LandingRecord rec;
    rec.family = Family::Mandelbrot;
    rec.c_ray = seed;
    rec.n = n;
    rec.k = k;

    const long double eps = std::numeric_limits<long double>::epsilon();
    LComplex c = widen(seed);
    long double res = 1e300L;
    for (int it = 0; it < 80; ++it) {
        LComplex zk{}, uk{}, zn{}, un{};
        {
            LComplex z{0, 0}, u{0, 0};
            bool bad = false;
            for (int i = 0; i < n; ++i) {
                if (std::abs(z) > 1e100L) {
                    bad = true;
                    break;
                }
                u = 2.0L * z * u + 1.0L;
                z = z * z + c;
                if (i + 1 == k) {
                    zk = z;
                    uk = u;
                }
                if (i + 1 == n) {
                    zn = z;
                    un = u;
                }
            }
            if (bad) throw NewtonDiverged("refine_misiurewicz: orbit escaped");
        }
        LComplex f = zn - zk;
        LComplex df = un - uk;
        res = std::abs(f);
        if (res <= 1e-16L * residual_scale(narrow(c))) break;
        if (df == LComplex(0, 0))
            throw NewtonDiverged("refine_misiurewicz: singular derivative");
        LComplex step = -f / df;
        // position saturated at the extended-precision lattice
        if (std::abs(step) <= 64.0L * eps * (1.0L + std::abs(c))) break;
        if (std::abs(step) > 1.0L) step /= std::abs(step);  // clamp wild first steps
        c += step;
    }
    rec.c_refined = narrow(c);
    rec.residual = static_cast<double>(res);
    if (rec.residual > 1e-6 * residual_scale(rec.c_refined))
        throw NewtonDiverged("refine_misiurewicz: no convergence");

    auto zs = orbit_points(Family::Mandelbrot, rec.c_refined, n - k);
    rec.strictness = std::abs(zs.back());
    if (rec.strictness <= kStrictness) {
        rec.kind = LandingKind::Unrefined;  // center locus, Per* exclusion fires
        return rec;
    }
    rec.kind = LandingKind::Misiurewicz;
    rec.cycle_period = detect_cycle_period(Family::Mandelbrot, rec.c_refined, n, k);
    return rec;
}

LandingRecord refine_misiurewicz_tricorn(Complex seed, int n, int k) {
    LandingRecord rec;
    rec.family = Family::Tricorn;
    rec.c_ray = seed;
    rec.n = n;
    rec.k = k;
    const int nn = 2 * n, kk = 2 * k;  // solved exponents

    const long double eps = std::numeric_limits<long double>::epsilon();
    LComplex c = widen(seed);
    long double res = 1e300L;
    for (int it = 0; it < 80; ++it) {
        LComplex zk{}, uk{}, vk{}, zn{}, un{}, vn{};
        {
            LComplex z{0, 0}, u{0, 0}, v{0, 0};
            bool bad = false;
            for (int i = 0; i < nn; ++i) {
                if (std::abs(z) > 1e100L) {
                    bad = true;
                    break;
                }
                LComplex zb = std::conj(z);
                LComplex du = 2.0L * zb * std::conj(v) + 1.0L;
                LComplex dv = 2.0L * zb * std::conj(u);
                u = du;
                v = dv;
                z = zb * zb + c;
                if (i + 1 == kk) {
                    zk = z;
                    uk = u;
                    vk = v;
                }
                if (i + 1 == nn) {
                    zn = z;
                    un = u;
                    vn = v;
                }
            }
            if (bad) throw NewtonDiverged("refine_misiurewicz: orbit escaped");
        }
        LComplex f = zn - zk;
        res = std::abs(f);
        if (res <= 1e-16L * residual_scale(narrow(c))) break;
        LComplex u = un - uk;
        LComplex v = vn - vk;
        // real 2x2 solve of u dc + v conj(dc) = -f
        LComplex fx = u + v;
        LComplex fy = LComplex(0, 1) * (u - v);
        long double det = fx.real() * fy.imag() - fy.real() * fx.imag();
        if (det == 0) throw NewtonDiverged("refine_misiurewicz: singular Jacobian");
        long double dx = (-f.real() * fy.imag() + fy.real() * f.imag()) / det;
        long double dy = (-fx.real() * f.imag() + f.real() * fx.imag()) / det;
        LComplex step(dx, dy);
        if (std::abs(step) <= 64.0L * eps * (1.0L + std::abs(c))) break;
        if (std::abs(step) > 1.0L) step /= std::abs(step);
        c += step;
    }
    rec.c_refined = narrow(c);
    rec.residual = static_cast<double>(res);
    if (rec.residual > 1e-6 * residual_scale(rec.c_refined))
        throw NewtonDiverged("refine_misiurewicz: no convergence");

    auto zs = orbit_points(Family::Tricorn, rec.c_refined, nn - kk);
    rec.strictness = std::abs(zs.back());
    if (rec.strictness <= kStrictness) {
        rec.kind = LandingKind::Unrefined;
        return rec;
    }
    rec.kind = LandingKind::Misiurewicz;
    rec.cycle_period = detect_cycle_period(Family::Tricorn, rec.c_refined, nn, kk);
    return rec;
}

}  // namespace

LandingRecord refine_misiurewicz(Family family, Complex seed, int n, int k) {
    if (family == Family::Mandelbrot) {
        if (!(n > k && k >= 2))
            throw std::domain_error("refine_misiurewicz: n > k >= 2 required");
        return refine_misiurewicz_quadratic(seed, n, k);
    }
    if (!(n > k && k > 1)) throw std::domain_error("refine_misiurewicz: n > k > 1 required");
    return refine_misiurewicz_tricorn(seed, n, k);
}

namespace {

// multiplier of the q-orbit of z0 under p_c
Complex orbit_multiplier(Complex c, Complex z0, int q) {
    Complex m(1, 0), z = z0;
    for (int i = 0; i < q; ++i) {
        m *= 2.0 * z;
        z = z * z + c;
    }
    return m;
}

struct ParabolicSolve {
    bool ok = false;
    LComplex c, z;
    long double res = 1e300L;
};

// damped Newton on (p_c^q(z) - z, (p_c^q)'(z) - 1) from (c0, z0)
ParabolicSolve newton_parabolic(LComplex c, LComplex z, int q) {
    const long double eps = std::numeric_limits<long double>::epsilon();
    ParabolicSolve out;
    long double res = 1e300L;
    for (int it = 0; it < 200; ++it) {
        // jets along the orbit: A = dz_q/dz0, B = dz_q/dc, C = dA/dz0, D = dA/dc
        LComplex zq = z, A(1, 0), B(0, 0), C(0, 0), D(0, 0);
        for (int i = 0; i < q; ++i) {
            LComplex nC = 2.0L * (A * A + zq * C);
            LComplex nD = 2.0L * (B * A + zq * D);
            LComplex nA = 2.0L * zq * A;
            LComplex nB = 2.0L * zq * B + 1.0L;
            C = nC;
            D = nD;
            A = nA;
            B = nB;
            zq = zq * zq + c;
            if (std::abs(zq) > 1e6L) return out;
        }
        LComplex f1 = zq - z;
        LComplex f2 = A - 1.0L;
        res = std::max(std::abs(f1), std::abs(f2));
        if (res <= 1e-16L * (1.0L + std::abs(c))) break;
        LComplex j11 = A - 1.0L, j12 = B, j21 = C, j22 = D;
        LComplex det = j11 * j22 - j12 * j21;
        if (det == LComplex(0, 0)) return out;
        LComplex dz = (-f1 * j22 + f2 * j12) / det;
        LComplex dcs = (-j11 * f2 + j21 * f1) / det;
        long double norm = std::max(std::abs(dz), std::abs(dcs));
        if (norm <= 64.0L * eps * (1.0L + std::abs(c))) break;  // saturated
        if (norm > 0.1L) {
            dz *= 0.1L / norm;
            dcs *= 0.1L / norm;
        }
        z += dz;
        c += dcs;
    }
    out.ok = static_cast<double>(res) <= 1e-12 * (1.0 + std::abs(narrow(c)));
    out.c = c;
    out.z = z;
    out.res = res;
    return out;
}

// The critical orbit of a near-parabolic parameter lingers near the parabolic
// cycle before escaping; its deepest crawl point seeds z on the correct germ.
std::vector<Complex> crawl_seeds(Complex c, int q) {
    std::vector<Complex> orbit;
    Complex z(0, 0);
    for (int m = 0; m < 2000; ++m) {
        z = z * z + c;
        if (std::abs(z) > 4.0) break;
        orbit.push_back(z);
    }
    std::vector<std::pair<double, Complex>> ranked;
    for (size_t m = 0; m + q < orbit.size(); ++m)
        ranked.emplace_back(std::abs(orbit[m + q] - orbit[m]), orbit[m + q]);
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Complex> out;
    for (size_t i = 0; i < ranked.size() && out.size() < 3; ++i) out.push_back(ranked[i].second);
    return out;
}

}  // namespace

LandingRecord refine_parabolic_quadratic(Complex seed, int q) {
    if (q < 1) throw std::domain_error("refine_parabolic_quadratic: q >= 1 required");
    LandingRecord rec;
    rec.family = Family::Mandelbrot;
    rec.c_ray = seed;
    rec.q = q;

    ParabolicSolve solve;
    for (Complex z0 : crawl_seeds(seed, q)) {
        solve = newton_parabolic(widen(seed), widen(z0), q);
        if (solve.ok) break;
    }
    if (!solve.ok) {
        // fall back to the periodic points of p_(c_seed) nearest multiplier 1
        std::vector<Complex> roots = periodic_point_roots(seed, q);
        std::vector<std::pair<double, Complex>> ranked;
        for (Complex z : roots)
            ranked.emplace_back(std::abs(orbit_multiplier(seed, z, q) - 1.0), z);
        std::sort(ranked.begin(), ranked.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (ranked.empty()) throw NewtonDiverged("refine_parabolic: no candidates");
        // a multiplier tie between far-apart cycles leaves the seed ambiguous;
        // ties within one cycle or with its merging partner are expected
        std::vector<Complex> best_cycle(1, ranked[0].second);
        for (int i = 1; i < q; ++i)
            best_cycle.push_back(best_cycle.back() * best_cycle.back() + seed);
        for (size_t i = 1; i < ranked.size(); ++i) {
            if (ranked[i].first - ranked[0].first > 1e-9) break;
            double dist = 1e300;
            for (Complex w : best_cycle) dist = std::min(dist, std::abs(ranked[i].second - w));
            if (dist > 0.5)
                throw AmbiguousSeed("refine_parabolic: distinct cycles tie at multiplier 1");
        }
        for (size_t i = 0; i < ranked.size() && i < 3 && !solve.ok; ++i)
            solve = newton_parabolic(widen(seed), widen(ranked[i].second), q);
    }
    if (!solve.ok) throw NewtonDiverged("refine_parabolic: no convergence");

    rec.c_refined = narrow(solve.c);
    rec.residual = static_cast<double>(solve.res);
    rec.kind = LandingKind::Parabolic;
    rec.strictness = 0;
    // Exact period of the parabolic cycle: the least divisor p < q carrying a
    // p-cycle whose multiplier is a primitive (q/p)-th root of unity; at such
    // satellite contacts the p-cycle is a simple root of p^p(z) - z, so the
    // multiplier is computed reliably. When no proper divisor matches, the
    // parabolic cycle is the q-cycle itself (primitive root, multiplier 1).
    for (int p = 1; p < q && rec.cycle_period == 0; ++p) {
        if (q % p) continue;
        for (Complex w : periodic_point_roots(rec.c_refined, p)) {
            Complex m(1, 0), v = w;
            for (int i = 0; i < p; ++i) {
                m *= 2.0 * v;
                v = v * v + rec.c_refined;
            }
            if (std::abs(v - w) > 1e-8 * (1.0 + std::abs(w))) continue;
            Complex mq(1, 0);
            for (int i = 0; i < q / p; ++i) mq *= m;
            if (std::abs(mq - 1.0) <= 1e-6 && std::abs(m - 1.0) > 1e-3) {
                rec.cycle_period = p;
                break;
            }
        }
    }
    if (rec.cycle_period == 0) rec.cycle_period = q;
    return rec;
}

ClusterSet cluster(const std::vector<LandingRecord>& records, double epsilon) {
    for (const LandingRecord& r : records)
        if (r.kind == LandingKind::Unrefined)
            throw std::invalid_argument("cluster: all records must be refined");

    std::vector<size_t> order(records.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&records](size_t a, size_t b) {
        return records[a].theta < records[b].theta;
    });

    // single-linkage union-find
    std::vector<size_t> parent(records.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j) {
            if (std::abs(records[order[i]].c_refined - records[order[j]].c_refined) <= epsilon)
                parent[find(order[i])] = find(order[j]);
        }

    std::vector<std::vector<size_t>> groups;
    std::vector<long> group_of(records.size(), -1);
    for (size_t idx : order) {
        size_t root = find(idx);
        if (group_of[root] < 0) {
            group_of[root] = static_cast<long>(groups.size());
            groups.emplace_back();
        }
        groups[group_of[root]].push_back(idx);
    }

    ClusterSet cs;
    cs.epsilon = epsilon;
    for (const auto& g : groups) {
        double diam = 0;
        for (size_t i = 0; i < g.size(); ++i)
            for (size_t j = i + 1; j < g.size(); ++j)
                diam = std::max(diam,
                                std::abs(records[g[i]].c_refined - records[g[j]].c_refined));
        if (diam > 10.0 * epsilon)
            throw ChainingDetected("cluster: diameter " + std::to_string(diam) +
                                   " exceeds 10*epsilon");
        Cluster cl;
        cl.representative = records[g.front()].c_refined;
        for (size_t idx : g) cl.members.push_back(records[idx].theta);
        cl.multiplicity = static_cast<int>(g.size());
        cs.clusters.push_back(std::move(cl));
    }
    return cs;
}

}  // namespace extray
