// Acceptance suite: run as `acceptance <criterion>` with criterion in 1..8.
// Each criterion prints one [PASS]/[FAIL] line per clause and the process
// exits nonzero if any clause of the requested criterion failed.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "extray/enumerate.hpp"
#include "extray/io.hpp"
#include "extray/measures.hpp"
#include "extray/poly.hpp"
#include "extray/util.hpp"
#include "support/laurent.hpp"

using namespace extray;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& label) {
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", label.c_str());
    if (!ok) ++g_failures;
}

std::int64_t pow2(int e) { return std::int64_t(1) << e; }

Complex anti_iterate(Complex c, int steps) {
    Complex z(0, 0);
    for (int i = 0; i < steps; ++i) z = std::conj(z) * std::conj(z) + c;
    return z;
}

// ---------------------------------------------------------------- criterion 1

void criterion_1() {
    bool mis_ok = true, par_ok = true, tri_ok = true, pair_ok = true;
    for (int n = 3; n <= 16; ++n)
        for (int k = 2; k < n; ++k) {
            std::int64_t want = pow2(n - 1) - pow2(k - 1) - pow2(n - k) + 1;
            if (static_cast<std::int64_t>(misiurewicz_angles_quadratic(n, k).size()) != want)
                mis_ok = false;
            std::int64_t want_t = (n - k) % 2 == 0
                                      ? want
                                      : pow2(n - 1) + pow2(k - 1) - pow2(n - k) - 1;
            if (static_cast<std::int64_t>(misiurewicz_angles_tricorn(n, k).size()) != want_t)
                tri_ok = false;
        }
    for (int n = 1; n <= 20; ++n)
        if (static_cast<std::int64_t>(parabolic_angles_quadratic(n).size()) != pow2(n) - 1)
            par_ok = false;
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; n < m; ++n) {
            std::int64_t span = 0;
            {
                std::int64_t pm = 1, pn = 1;
                for (int i = 0; i < m; ++i) pm *= 4;
                for (int i = 0; i < n; ++i) pn *= 4;
                span = pm - pn;
            }
            auto card = static_cast<std::int64_t>(pair_set_d4(m, n).size());
            if (!(span <= card && card <= 2 * span)) pair_ok = false;
        }
    check(mis_ok, "1a: Card C(n,k) = 2^(n-1)-2^(k-1)-2^(n-k)+1 for all 1<k<n<=16");
    check(par_ok, "1b: Card P(n) = 2^n-1 for n <= 20");
    check(tri_ok, "1c: Card C*(n,k) matches the parity formulas for all 1<k<n<=16");
    check(pair_ok, "1d: 4^m-4^n <= Card S(m,n) <= 2(4^m-4^n) for d=4, m <= 6");
}

// ---------------------------------------------------------------- criterion 2

void criterion_2() {
    // exact algebra first: p^n(0) - p(0) = (p^(n-1)(0))^2 as integer
    // polynomials, so the two root sets coincide
    bool identity_ok = true;
    for (int n = 2; n <= 8; ++n) {
        IntPoly lhs = critical_orbit_poly(n);
        lhs.coef[1] -= BigInt(1);
        IntPoly prev = critical_orbit_poly(n - 1);
        if (!(lhs == prev * prev)) identity_ok = false;
    }
    check(identity_ok, "2a: p^n(0) - p(0) = (p^(n-1)(0))^2 exactly for n <= 8");

    bool roots_ok = true;
    double worst = 0;
    for (int n = 2; n <= 8; ++n) {
        for (Complex root : critical_orbit_roots(n - 1)) {
            Complex z(0, 0);
            for (int i = 0; i < n - 1; ++i) z = z * z + root;
            worst = std::max(worst, std::abs(z));
            if (std::abs(z) >= 1e-8) roots_ok = false;
        }
    }
    check(roots_ok, "2b: every root of p^n(0) - p(0) has |p^(n-1)(0)| < 1e-8 (worst " +
                        io::format_double(worst) + ")");
}

// ---------------------------------------------------------------- criterion 3

void criterion_3() {
    RaySchedule sched;
    const int workers = default_workers();
    for (int n = 1; n <= 7; ++n) {
        auto set = parabolic_angles_quadratic(n);
        LandedSet landed = land_angle_set(Family::Mandelbrot, set, n, 0, true, sched, workers);
        bool all_landed = landed.records.size() == set.size();
        check(all_landed, "3." + std::to_string(n) + "a: all " + std::to_string(set.size()) +
                              " rays of P(" + std::to_string(n) + ") landed and refined");
        if (!all_landed) continue;

        bool residuals_ok = true;
        for (const LandingRecord& r : landed.records)
            if (r.residual > 1e-12) residuals_ok = false;
        check(residuals_ok, "3." + std::to_string(n) + "b: refined residuals <= 1e-12");

        ClusterSet cs = cluster(landed.records);
        check(static_cast<std::int64_t>(cs.clusters.size()) == pow2(n - 1),
              "3." + std::to_string(n) + "c: exactly 2^(n-1) = " + std::to_string(pow2(n - 1)) +
                  " clusters");

        bool singleton_ok = false, pairs_ok = true;
        for (const Cluster& cl : cs.clusters) {
            bool has_zero = false;
            for (const Angle& a : cl.members)
                if (a == Angle()) has_zero = true;
            if (has_zero)
                singleton_ok = cl.multiplicity == 1 &&
                               std::abs(cl.representative - Complex(0.25, 0)) <= 1e-8;
            else if (cl.multiplicity != 2)
                pairs_ok = false;
        }
        check(singleton_ok,
              "3." + std::to_string(n) + "d: theta=0 is the unique singleton at 0.25 +- 1e-8");
        check(pairs_ok, "3." + std::to_string(n) + "e: every other cluster has size exactly 2");
    }
}

// ---------------------------------------------------------------- criterion 4

void criterion_4() {
    RaySchedule sched;
    const int workers = default_workers();
    {
        auto set = misiurewicz_angles_quadratic(3, 2);
        LandedSet landed = land_angle_set(Family::Mandelbrot, set, 3, 2, false, sched, workers);
        bool ok = landed.records.size() == 1 &&
                  std::abs(landed.records[0].c_refined - Complex(-2, 0)) <= 1e-10;
        check(ok, "4a: C(3,2) lands and refines to -2 within 1e-10");
    }
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {4, 3}, {5, 3}}) {
        auto set = misiurewicz_angles_quadratic(n, k);
        LandedSet landed = land_angle_set(Family::Mandelbrot, set, n, k, false, sched, workers);
        std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
        check(landed.records.size() == set.size(),
              "4b" + tag + ": all " + std::to_string(set.size()) + " rays landed and refined");
        bool res_ok = true, strict_ok = true, div_ok = true;
        for (const LandingRecord& r : landed.records) {
            if (r.residual > 1e-12) res_ok = false;
            if (!(r.strictness > 1e-3)) strict_ok = false;
            OrbitSignature sig = orbit_signature(r.theta, 2);
            if (r.cycle_period <= 0 || sig.period % r.cycle_period != 0) div_ok = false;
        }
        check(res_ok, "4c" + tag + ": residuals <= 1e-12");
        check(strict_ok, "4d" + tag + ": strictness > 1e-3");
        check(div_ok, "4e" + tag + ": angle period divisible by cycle period");
    }
}

// ---------------------------------------------------------------- criterion 5

void criterion_5() {
    RaySchedule sched;
    const int workers = default_workers();
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 3}}) {
        auto set = misiurewicz_angles_tricorn(n, k);
        LandedSet landed = land_angle_set(Family::Tricorn, set, n, k, false, sched, workers);
        std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
        check(landed.records.size() == set.size(),
              "5a" + tag + ": all " + std::to_string(set.size()) + " rays landed and refined");
        bool doubled_ok = true, even_ok = true;
        for (const LandingRecord& r : landed.records) {
            Complex c = r.c_refined;
            if (std::abs(anti_iterate(c, 2 * n) - anti_iterate(c, 2 * k)) > 1e-8)
                doubled_ok = false;
            if ((n - k) % 2 == 0 &&
                std::abs(anti_iterate(c, n) - anti_iterate(c, k)) > 1e-8)
                even_ok = false;
        }
        check(doubled_ok, "5b" + tag + ": |f^(2n)(0) - f^(2k)(0)| <= 1e-8 at every landing");
        if ((n - k) % 2 == 0)
            check(even_ok, "5c" + tag + ": n-k even: |f^n(0) - f^k(0)| <= 1e-8 additionally");
    }
    RayTrace tr = trace_ray(Family::Tricorn, Angle(1, 2), sched);
    bool ok = tr.status == RayStatus::Reached &&
              std::abs(landing_estimate(tr).c - Complex(-2, 0)) <= 1e-5;
    check(ok, "5d: tricorn ray 1/2 lands at -2 within 1e-5");
}

// ---------------------------------------------------------------- criterion 6

void criterion_6() {
    SplitMix64 rng(2026);
    auto uniform = [&rng](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng.bits(48)) / (1ull << 48));
    };

    double worst_embed = 0;
    for (int i = 0; i < 10000; ++i) {
        TricornParam lambda{uniform(-2, 2), uniform(-2, 2)};
        Complex z(uniform(-2, 2), uniform(-2, 2));
        Complex c = lambda.c();
        Complex f1 = std::conj(z) * std::conj(z) + c;
        Complex f2 = std::conj(f1) * std::conj(f1) + c;
        Complex p = quartic_eval(lambda, z);
        worst_embed = std::max(worst_embed, std::abs(p - f2) / std::max(1.0, std::abs(f2)));
    }
    check(worst_embed <= 1e-10, "6a: sup rel error of P_lambda vs f(f(.)) over 10^4 samples = " +
                                    io::format_double(worst_embed) + " <= 1e-10");

    double worst_crit = 0;
    for (int i = 0; i < 1000; ++i) {
        TricornParam lambda{uniform(-2, 2), uniform(-2, 2)};
        auto crit = quartic_crit(lambda);
        Complex c = lambda.c();
        for (int j : {1, 2}) {
            Complex fz = std::conj(crit[j]) * std::conj(crit[j]) + c;
            worst_crit = std::max(worst_crit, std::abs(fz - crit[0]));
        }
    }
    check(worst_crit <= 1e-12, "6b: f_lambda(c1) = f_lambda(c2) = c0 to 1e-12 over 10^3 real "
                               "lambda (worst " +
                                   io::format_double(worst_crit) + ")");

    // ten tricorn rays at Misiurewicz angles
    std::vector<Angle> rays = misiurewicz_angles_tricorn(5, 3);
    rays.push_back(misiurewicz_angles_tricorn(3, 2).front());
    RaySchedule sched;
    bool pot_ok = true;
    double worst_pot = 0;
    int levels_checked = 0;
    for (const Angle& theta : rays) {
        RayTrace tr = trace_ray(Family::Tricorn, theta, sched);
        if (tr.status != RayStatus::Reached) {
            pot_ok = false;
            continue;
        }
        for (const RayLevel& lv : tr.levels) {
            double g0 = green(Family::Tricorn, lv.c, Complex(0, 0)).g;
            Complex w = std::sqrt(lv.c);
            Complex c1(w.imag(), w.real());  // ia + b for lambda = (a, b)
            double g1 = green(Family::Tricorn, lv.c, c1).g;
            double err = std::max(std::abs(g0 - lv.t), std::abs(2 * g1 - lv.t));
            worst_pot = std::max(worst_pot, err);
            if (err > 1e-6) pot_ok = false;
            ++levels_checked;
        }
    }
    check(pot_ok && levels_checked > 1000,
          "6c: t = g(at critical point) = 2 g(at c1) within 1e-6 over " +
              std::to_string(levels_checked) + " accepted levels of 10 rays (worst " +
              io::format_double(worst_pot) + ")");
}

// ---------------------------------------------------------------- criterion 7

void criterion_7() {
    RaySchedule sched;
    const int workers = default_workers();
    bool printed_ok = true, balanced_ok = true;
    for (int n = 1; n <= 7; ++n) {
        auto set = parabolic_angles_quadratic(n);
        LandedSet landed = land_angle_set(Family::Mandelbrot, set, n, 0, true, sched, workers);
        if (landed.records.size() != set.size()) {
            check(false, "7: stage-3 landing incomplete for n=" + std::to_string(n));
            return;
        }
        ClusterSet cs = cluster(landed.records);
        const std::int64_t P = pow2(n) - 1;   // Card P(n)
        const std::int64_t X = pow2(n - 1);   // Card X_n
        if (static_cast<std::int64_t>(cs.clusters.size()) != X) {
            check(false, "7: cluster count off for n=" + std::to_string(n));
            return;
        }
        // exact rational identity per atom, common denominator P*X:
        //   LHS_c = mult_c/P - 1/X
        //   stated RHS_c = (1/P)(1/X) - [c = 1/4]/X
        //   balanced RHS_c = (1/P)(1/X) - [c = 1/4]/P
        for (const Cluster& cl : cs.clusters) {
            bool is_quarter = std::abs(cl.representative - Complex(0.25, 0)) <= 1e-8;
            std::int64_t lhs = cl.multiplicity * X - P;
            std::int64_t rhs_stated = 1 - (is_quarter ? P : 0);
            std::int64_t rhs_balanced = 1 - (is_quarter ? X : 0);
            if (lhs != rhs_stated) printed_ok = false;
            if (lhs != rhs_balanced) balanced_ok = false;
        }
    }
    check(printed_ok,
          "7a: l_*(rho_n) - mu_n = (1/(2^n-1)) mu_n - (1/2^(n-1)) delta_{1/4} exactly, n <= 7");
    if (!printed_ok) {
        std::printf(
            "      note: the stated point-mass coefficient 1/2^(n-1) cannot balance: the\n"
            "      left side has total mass 0 while the right side totals\n"
            "      1/(2^n-1) - 1/2^(n-1) != 0 for n >= 2. The mass-balanced coefficient\n"
            "      is 1/(2^n-1); that identity is checked below from the same clusters.\n");
    }
    check(balanced_ok,
          "7b: l_*(rho_n) - mu_n = (1/(2^n-1)) mu_n - (1/(2^n-1)) delta_{1/4} exactly, n <= 7 "
          "(mass-balanced form)");
}

// ---------------------------------------------------------------- criterion 8

void criterion_8() {
    // independent series oracle first: the exact mean of the landing
    // pushforward of uniform angle measure
    laurent::Rat oracle = laurent::harmonic_mean_oracle();
    check(oracle == laurent::Rat(-1, 2), "8a: series oracle mean = " + oracle.num.to_string() +
                                             "/" + oracle.den.to_string() + " (exactly -1/2)");

    RaySchedule sched;
    const int workers = default_workers();
    // fixed seed for the artifact; the reference's own Monte-Carlo noise in
    // the 4th moment is ~0.03-0.12 across seeds, which clause 8d inherits
    const std::uint64_t kSeed = 7;
    ReferenceSample ref = reference_sample(Family::Mandelbrot, 4096, kSeed, sched, workers);
    Complex mean(0, 0);
    for (const auto& atom : ref.measure.atoms) mean += atom.weight * atom.position;
    check(ref.landed == 4096 && std::abs(mean - Complex(-0.5, 0)) <= 0.05,
          "8b: reference sample (4096 rays, seed 7) mean " + io::format_double(mean.real()) +
              " + " + io::format_double(mean.imag()) + "i within 0.05 of -0.5");

    std::vector<std::pair<int, int>> nk;
    for (int n = 8; n <= 14; ++n) nk.emplace_back(n, n / 2 + 1);
    ConvergenceReport rep = convergence_report(Family::Mandelbrot, nk, ref, sched, workers, 4);

    bool landed_ok = true, monotone_disc = true, moment_ok = true, step_ok = true;
    double prev_disc = 2.0, prev_md = -1.0;
    for (const ConvergenceRow& row : rep.rows) {
        std::printf("      n=%2d k=%d card=%" PRId64 " landed=%d disc=%.3e md=%.4f %s\n", row.n,
                    row.k, row.cardinality, row.landed, row.discrepancy, row.moment_distance,
                    row.annotation.c_str());
        if (row.landed != row.cardinality) landed_ok = false;
        if (row.discrepancy >= prev_disc) monotone_disc = false;
        prev_disc = row.discrepancy;
        if (prev_md >= 0 && row.moment_distance > 1.2 * prev_md) step_ok = false;
        prev_md = row.moment_distance;
    }
    if (!rep.rows.empty() && rep.rows.back().moment_distance > 0.08) moment_ok = false;
    check(landed_ok, "8c: every C(n, n/2+1) ray landed and refined, n = 8..14");
    check(moment_ok, "8d: moment distance (K=4) to the reference <= 0.08 at n = 14");
    check(step_ok, "8e: moment distance never increases by more than 20% per step");
    check(monotone_disc, "8f: star discrepancy of the angle sets decreases monotonically");

    // stronger check than the sampled reference: the exact moments of the
    // landing pushforward of uniform angle measure, from the series oracle
    // (m_1..m_4 = -1/2, 1/2, -5/4, 5/2)
    {
        auto set = misiurewicz_angles_quadratic(14, 8);
        LandedSet landed = land_angle_set(Family::Mandelbrot, set, 14, 8, false, sched, workers);
        ClusterSet cs = cluster(landed.records);
        EmpiricalMeasure mu = measure_from_clusters(cs, set.size());
        double worst = 1e300;
        if (mu.normalized()) {
            auto ms = moments(mu, 4);
            worst = 0;
            for (int j = 1; j <= 4; ++j) {
                double exact = laurent::harmonic_moment_oracle(j).to_double();
                worst = std::max(worst, std::abs(ms[j - 1] - Complex(exact, 0)));
            }
        }
        check(worst <= 5e-3, "8g: landed C(14,8) moments match the exact series moments to " +
                                 io::format_double(worst) + " <= 5e-3");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..8>\n");
        return 2;
    }
    int which = std::atoi(argv[1]);
    switch (which) {
        case 1: criterion_1(); break;
        case 2: criterion_2(); break;
        case 3: criterion_3(); break;
        case 4: criterion_4(); break;
        case 5: criterion_5(); break;
        case 6: criterion_6(); break;
        case 7: criterion_7(); break;
        case 8: criterion_8(); break;
        default:
            std::fprintf(stderr, "usage: acceptance <criterion 1..8>\n");
            return 2;
    }
    if (g_failures) std::printf("criterion %d: %d clause(s) failed\n", which, g_failures);
    return g_failures == 0 ? 0 : 1;
}
