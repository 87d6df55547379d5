#pragma once

#include <stdexcept>
#include <vector>

#include "extray/angle.hpp"
#include "extray/dynamics.hpp"

namespace extray {

enum class LandingKind { Misiurewicz, Parabolic, Unrefined };
const char* to_string(LandingKind k);

struct LandingRecord {
    Angle theta;
    Family family = Family::Mandelbrot;
    Complex c_ray{0, 0};      // ray endpoint used as the Newton seed
    Complex c_refined{0, 0};
    LandingKind kind = LandingKind::Unrefined;
    int n = 0, k = 0;         // Misiurewicz indices as requested (see below)
    int q = 0;                // parabolic period
    double residual = 0;
    double strictness = 0;    // distance witnessing the Per* exclusion
    int cycle_period = 0;     // 0 = absent
};

struct NewtonDiverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AmbiguousSeed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ChainingDetected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Newton refinement onto the Misiurewicz locus.
//
// Mandelbrot (n > k >= 2): complex Newton on p_c^n(0) - p_c^k(0); strictness
// is |p_c^(n-k)(0)| and the record is demoted to Unrefined when it falls at
// or below 1e-3 (the seed landed on a center locus).
//
// Tricorn (n > k > 1, angle-combinatorics indices): the landing point of a
// C*(n,k) ray is only guaranteed to satisfy the doubled equation
// f_c^(2n)(0) = f_c^(2k)(0), so the real 2x2 Wirtinger Newton solves that;
// strictness is |f_c^(2(n-k))(0)|. When n-k is even the refined point also
// satisfies f^n(0) = f^k(0), which callers verify separately.
//
// cycle_period is the least p <= N-K with |f^(K+p)(0) - f^K(0)| <= 1e-9 where
// (N,K) are the solved exponents ((n,k) or (2n,2k)).
LandingRecord refine_misiurewicz(Family family, Complex seed, int n, int k);

// Parabolic refinement: solves (p_c^q(z) - z, (p_c^q)'(z) - 1) = 0 by Newton
// in (c, z). z is seeded from the roots of p_(c_seed)^q(z) = z nearest to
// multiplier 1; a multiplier tie between genuinely distinct cycles raises
// AmbiguousSeed (ties within one cycle, or between a merging pair, are fine).
LandingRecord refine_parabolic_quadratic(Complex seed, int q);

struct Cluster {
    Complex representative{0, 0};  // refined c of the smallest-angle member
    std::vector<Angle> members;
    int multiplicity = 0;
};

struct ClusterSet {
    std::vector<Cluster> clusters;
    double epsilon = 1e-6;
};

// Single-linkage clustering of refined records at threshold epsilon,
// deterministic: records are ordered by angle, clusters by smallest member
// angle. A cluster of diameter > 10*epsilon raises ChainingDetected.
ClusterSet cluster(const std::vector<LandingRecord>& records, double epsilon = 1e-6);

}  // namespace extray
