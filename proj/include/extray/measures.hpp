#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "extray/landing.hpp"
#include "extray/rays.hpp"

namespace extray {

struct EmpiricalMeasure {
    struct Atom {
        Complex position{0, 0};
        double weight = 0;
    };
    std::vector<Atom> atoms;
    double total = 0;  // sum of weights

    bool normalized(double tol = 1e-9) const { return std::abs(total - 1.0) <= tol; }
};

// atom at each cluster representative, weight multiplicity/normalizer;
// normalizer is the cardinality of the source angle set
EmpiricalMeasure measure_from_clusters(const ClusterSet& clusters, std::int64_t normalizer);

struct InsufficientLandings : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReferenceSample {
    EmpiricalMeasure measure;  // atoms weighted 1/landed
    int requested = 0;
    int landed = 0;
    std::vector<Angle> dropped;  // stalled rays, reported rather than imputed
};

// count uniform dyadic angles of depth 40 from a seeded deterministic
// generator, traced and recorded; throws InsufficientLandings when fewer than
// 90% of the rays reach t_end
ReferenceSample reference_sample(Family family, int count, std::uint64_t rng_seed,
                                 const RaySchedule& schedule = {}, int workers = 1);

// m_j = sum w c^j for j = 1..K; requires a normalized measure
std::vector<Complex> moments(const EmpiricalMeasure& mu, int K = 8);
double moment_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b, int K = 8);

struct ConvergenceRow {
    int n = 0, k = 0;
    std::int64_t cardinality = 0;
    int landed = 0;
    double landed_fraction = 0;
    double discrepancy = 0;      // star discrepancy of the angle set
    double moment_distance = 0;  // to the reference sample, K = 4
    std::int64_t cluster_count = 0;
    std::string annotation;  // per-row failure notes; empty when clean
};

struct ConvergenceReport {
    Family family = Family::Mandelbrot;
    std::vector<ConvergenceRow> rows;
    bool moment_distance_monotone = true;  // allowing 20% slack per step
};

// trace + refine + cluster each (n, k(n)) angle set and diff its measure
// against the reference sample; tracing errors annotate rows, never abort
ConvergenceReport convergence_report(Family family, const std::vector<std::pair<int, int>>& nk,
                                     const ReferenceSample& reference,
                                     const RaySchedule& schedule = {}, int workers = 1,
                                     int moment_order = 4);

// Pipeline helper shared by the report, the CLI and the acceptance suite:
// trace every angle of `set` as (family, n, k or parabolic q), refine, and
// return the records together with the stalled/diverged angles.
struct LandedSet {
    std::vector<LandingRecord> records;  // refined only, sorted by angle
    std::vector<Angle> failed;           // stalled or diverged
    std::vector<Angle> excluded;         // refined but strictness-filtered
    std::vector<RayTrace> traces;        // one per input angle, input order
};
LandedSet land_angle_set(Family family, const std::vector<Angle>& set, int n, int k,
                         bool parabolic, const RaySchedule& schedule, int workers);

}  // namespace extray
