#pragma once

#include <stdexcept>
#include <vector>

#include "extray/angle.hpp"
#include "extray/dynamics.hpp"

namespace extray {

struct InvalidSchedule : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RaySchedule {
    double t_start = 32.0;
    double t_end = 1e-8;
    int substeps_per_halving = 4;
    double newton_tol = 1e-13;
    int newton_max_iters = 30;
    double depth_tau = 16.0;  // depth N chosen so D^N t lands in [tau, D*tau)

    void validate() const;  // throws InvalidSchedule
};

struct RayLevel {
    double t = 0;
    int depth = 0;  // doublings (Mandelbrot) or quartic double-steps (tricorn)
    Complex target{0, 0};
    Complex c{0, 0};
    // |orbit(c, depth) - target| at acceptance. This meets newton_tol*|target|
    // wherever double precision can express it; at deep levels the orbit value
    // amplifies one ulp of c by the orbit derivative, so the solve stops at
    // the position-space floor (Newton step below the ulp scale of c) and the
    // residual records the conditioning of the level, not a solver failure.
    double residual = 0;
    // |true potential of c - t| as reported by the solve itself
    // (2^-depth |Re Log(orbit/target)|); nonzero at the quantization floor
    // near quadratic-rate landing points, where the double lattice has no
    // parameter at potential t
    double t_err = 0;
    int iters = 0;
};

enum class RayStatus { Reached, Stalled };

struct RayTrace {
    Family family = Family::Mandelbrot;
    Angle theta;
    RaySchedule schedule;
    std::vector<RayLevel> levels;  // strictly decreasing in t
    RayStatus status = RayStatus::Stalled;
    double t_best = 0;  // deepest accepted potential
};

// Newton continuation of the parameter ray of angle theta along the geometric
// potential grid t_j+1 = t_j 2^(-1/substeps). At each level the equation
// orbit-from-critical-value(c, depth) = exp(D^N t + 2 pi i frac(mult^N theta))
// is solved by damped Newton (complex for the Mandelbrot set, real 2x2 via
// Wirtinger jets for the tricorn). Failures trigger local grid refinement up
// to 64x; a persistent failure returns a Stalled trace with the deepest
// accepted level. Stalls are data, not errors: tricorn rays at periodic
// angles may accumulate on parabolic arcs without landing.
RayTrace trace_ray(Family family, const Angle& theta, const RaySchedule& schedule = {});

struct NotReached : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LandingEstimate {
    Complex c{0, 0};
    double quality = 0;  // |c(t_end) - c(2 t_end)|, a landing stability indicator
};

// deepest-level parameter of a Reached trace; throws NotReached on stalls
LandingEstimate landing_estimate(const RayTrace& trace);

}  // namespace extray
