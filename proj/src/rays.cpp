#include "extray/rays.hpp"

#include <cmath>
#include <limits>

namespace extray {

void RaySchedule::validate() const {
    if (!(t_start > t_end) || !(t_end > 0))
        throw InvalidSchedule("schedule: t_start > t_end > 0 required");
    if (substeps_per_halving < 1) throw InvalidSchedule("schedule: substeps >= 1 required");
    if (!(newton_tol > 0)) throw InvalidSchedule("schedule: newton_tol > 0 required");
    if (newton_max_iters < 1) throw InvalidSchedule("schedule: newton_max_iters >= 1 required");
    if (!(depth_tau > 1)) throw InvalidSchedule("schedule: depth_tau > 1 required");
}

namespace {

struct LevelTarget {
    int depth;
    Complex w;
};

// smallest N with D^N t >= tau, and the matching Boettcher-side target
LevelTarget level_target(Family family, const Angle& theta, double t, double tau) {
    const double d_pot = family == Family::Mandelbrot ? 2.0 : 4.0;
    const std::int64_t d_ang = family == Family::Mandelbrot ? 2 : 4;
    int depth = 0;
    double pot = t;
    while (pot < tau) {
        pot *= d_pot;
        ++depth;
    }
    double phase = 2.0 * M_PI * theta.times_pow(d_ang, depth).to_double();
    Complex w = std::exp(pot) * Complex(std::cos(phase), std::sin(phase));
    return {depth, w};
}

struct SolveResult {
    bool ok = false;
    Complex c{0, 0};
    double residual = 0;
    double t_err = 0;
    int iters = 0;
};


struct LevelJet {
    Complex z;
    Complex log_residual;    // Log(z/w), principal branch
    Complex newton_step;     // log-space Newton step in c
    bool escaped = false;
    bool singular = false;
};

Complex log_ratio(Complex z, Complex w) {
    Complex q = z / w;
    return {std::log(std::abs(q)), std::arg(q)};
}

LevelJet level_jet(Family family, Complex c, int depth, Complex w) {
    LevelJet out;
    if (family == Family::Mandelbrot) {
        auto r = quad_orbit(c, OrbitStart::CriticalValue, depth);
        out.escaped = r.escaped;
        if (out.escaped) return out;
        if (r.jet.z == Complex(0, 0) || r.jet.dc == Complex(0, 0)) {
            out.singular = true;
            return out;
        }
        out.z = r.jet.z;
        out.log_residual = log_ratio(r.jet.z, w);
        out.newton_step = -out.log_residual * r.jet.z / r.jet.dc;  // d Log(z)/dc = dc/z
        return out;
    }
    auto r = anti_orbit(c, OrbitStart::CriticalValue, 2 * depth);
    out.escaped = r.escaped;
    if (out.escaped) return out;
    if (r.jet.z == Complex(0, 0)) {
        out.singular = true;
        return out;
    }
    out.z = r.jet.z;
    out.log_residual = log_ratio(r.jet.z, w);
    // Wirtinger pair of c -> Log(z); the step solves the real 2x2 system
    // u dc + v conj(dc) = -g with dF/dx = u+v, dF/dy = i(u-v)
    Complex g = out.log_residual;
    Complex u = r.jet.dc / r.jet.z, v = r.jet.dcbar / r.jet.z;
    Complex fx = u + v;
    Complex fy = Complex(0, 1) * (u - v);
    double det = fx.real() * fy.imag() - fy.real() * fx.imag();
    if (det == 0) {
        out.singular = true;
        return out;
    }
    double dx = (-g.real() * fy.imag() + fy.real() * g.imag()) / det;
    double dy = (-fx.real() * g.imag() + g.real() * fx.imag()) / det;
    out.newton_step = Complex(dx, dy);
    return out;
}

// One damped Newton solve of orbit(c, depth) = w, performed on
// Log(orbit/target): the plain iteration creeps when the orbit value
// overshoots the target exponentially, while log-Newton crosses that regime
// in a few steps and coincides with it near the solution. A solve is also
// accepted when the Newton step falls below the ulp scale of c: near
// quadratic-rate landing points the double lattice cannot express deeper ray
// points (the potential of c +/- ulp already exceeds the requested t), and
// the recorded residual then measures that quantization, not solver failure.
SolveResult newton_solve(Family family, Complex c, int depth, Complex w,
                         const RaySchedule& sched) {
    SolveResult out;
    const double eps = std::numeric_limits<double>::epsilon();
    const double tol = sched.newton_tol;  // on |Log(z/w)| ~ |z-w|/|w|
    // potential halvings back to t-scale: |z| = exp(2^h t) with h = depth
    // doublings (Mandelbrot) or 2*depth (tricorn, 4^depth in Psi* units)
    const int pot_h = family == Family::Mandelbrot ? depth : 2 * depth;
    double res = 1e300;
    for (int it = 0; it < sched.newton_max_iters; ++it) {
        LevelJet jet = level_jet(family, c, depth, w);
        if (jet.escaped || jet.singular) return out;
        res = std::abs(jet.log_residual);
        out.iters = it;
        if (res <= tol) {
            out.ok = true;
            out.c = c;
            out.residual = std::abs(jet.z - w);
            out.t_err = std::ldexp(std::abs(jet.log_residual.real()), -pot_h);
            return out;
        }
        if (std::abs(jet.newton_step) <= 32.0 * eps * (1.0 + std::abs(c))) {
            out.ok = true;  // position saturated at the double lattice
            out.c = c;
            out.residual = std::abs(jet.z - w);
            out.t_err = std::ldexp(std::abs(jet.log_residual.real()), -pot_h);
            out.iters = it + 1;
            return out;
        }
        Complex step = jet.newton_step;
        // trust region: the log-space linearization is only good for moves
        // small against |c|; unclamped shallow-depth steps can cross zero
        double cap = 0.5 * std::max(std::abs(c), 1e-8);
        if (std::abs(step) > cap) step *= cap / std::abs(step);
        bool accepted = false;
        for (int h = 0; h < 8; ++h) {
            LevelJet trial = level_jet(family, c + step, depth, w);
            if (!trial.escaped && !trial.singular &&
                (std::abs(trial.log_residual) < res || std::abs(trial.log_residual) <= tol)) {
                accepted = true;
                c += step;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) return out;
    }
    LevelJet jet = level_jet(family, c, depth, w);
    if (!jet.escaped && !jet.singular && std::abs(jet.log_residual) <= tol) {
        out.ok = true;
        out.c = c;
        out.residual = std::abs(jet.z - w);
        out.t_err = std::ldexp(std::abs(jet.log_residual.real()), -pot_h);
        out.iters = sched.newton_max_iters;
    }
    return out;
}

// walk from potential t_from (parameter c) down to t_to in `pieces` geometric
// micro-steps; only the endpoint is reported
bool walk_segment(Family family, const Angle& theta, const RaySchedule& sched, double t_from,
                  double t_to, int pieces, Complex& c, SolveResult& last) {
    double ratio = std::pow(t_to / t_from, 1.0 / pieces);
    double t = t_from;
    for (int i = 0; i < pieces; ++i) {
        t = (i + 1 == pieces) ? t_to : t * ratio;
        LevelTarget lt = level_target(family, theta, t, sched.depth_tau);
        SolveResult sr = newton_solve(family, c, lt.depth, lt.w, sched);
        if (!sr.ok) return false;
        c = sr.c;
        last = sr;
        last.c = c;
    }
    return true;
}

}  // namespace

RayTrace trace_ray(Family family, const Angle& theta, const RaySchedule& schedule) {
    schedule.validate();
    RayTrace trace;
    trace.family = family;
    trace.theta = theta;
    trace.schedule = schedule;

    const double halving = std::pow(2.0, -1.0 / schedule.substeps_per_halving);
    double t = schedule.t_start;
    double phase = 2.0 * M_PI * theta.to_double();
    Complex c = std::exp(t) * Complex(std::cos(phase), std::sin(phase));

    {
        LevelTarget lt = level_target(family, theta, t, schedule.depth_tau);
        SolveResult sr = newton_solve(family, c, lt.depth, lt.w, schedule);
        if (!sr.ok) {
            trace.status = RayStatus::Stalled;
            trace.t_best = 0;
            return trace;
        }
        c = sr.c;
        trace.levels.push_back({t, lt.depth, lt.w, c, sr.residual, sr.t_err, sr.iters});
    }

    double prev_jump = 0;
    while (t > schedule.t_end) {
        double t_next = t * halving;
        if (t_next < schedule.t_end) t_next = schedule.t_end;
        LevelTarget lt = level_target(family, theta, t_next, schedule.depth_tau);

        Complex c_prev = c;
        bool ok = false;
        Complex c_new{0, 0};
        SolveResult last;
        for (int refine = 1; refine <= 64; refine *= 2) {
            Complex probe = c_prev;
            SolveResult sr;
            if (walk_segment(family, theta, schedule, t, t_next, refine, probe, sr)) {
                // branch-jump guard against hopping to a neighboring ray
                double jump = std::abs(probe - c_prev);
                if (prev_jump > 0 && jump > 10.0 * prev_jump + 1e-12) continue;
                ok = true;
                c_new = probe;
                last = sr;
                break;
            }
        }
        if (!ok) {
            trace.status = RayStatus::Stalled;
            trace.t_best = t;
            return trace;
        }
        prev_jump = std::abs(c_new - c_prev);
        c = c_new;
        t = t_next;
        trace.levels.push_back({t, lt.depth, lt.w, c, last.residual, last.t_err, last.iters});
    }

    trace.status = RayStatus::Reached;
    trace.t_best = t;
    return trace;
}

LandingEstimate landing_estimate(const RayTrace& trace) {
    if (trace.status != RayStatus::Reached || trace.levels.empty())
        throw NotReached("landing_estimate: ray stalled at t=" + std::to_string(trace.t_best));
    LandingEstimate est;
    est.c = trace.levels.back().c;
    const double t_ref = 2.0 * trace.schedule.t_end;
    double best = 1e300;
    Complex c_ref = est.c;
    for (const RayLevel& lv : trace.levels) {
        double d = std::abs(std::log(lv.t / t_ref));
        if (d < best) {
            best = d;
            c_ref = lv.c;
        }
    }
    est.quality = std::abs(est.c - c_ref);
    return est;
}

}  // namespace extray
