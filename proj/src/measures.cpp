#include "extray/measures.hpp"

#include <algorithm>
#include <cmath>

#include "extray/enumerate.hpp"
#include "extray/util.hpp"

namespace extray {

EmpiricalMeasure measure_from_clusters(const ClusterSet& clusters, std::int64_t normalizer) {
    if (normalizer <= 0) throw std::invalid_argument("measure_from_clusters: normalizer > 0");
    EmpiricalMeasure mu;
    for (const Cluster& cl : clusters.clusters) {
        double w = static_cast<double>(cl.multiplicity) / static_cast<double>(normalizer);
        mu.atoms.push_back({cl.representative, w});
        mu.total += w;
    }
    return mu;
}

std::vector<Complex> moments(const EmpiricalMeasure& mu, int K) {
    if (!mu.normalized()) throw std::invalid_argument("moments: measure must be normalized");
    std::vector<Complex> out(K, Complex(0, 0));
    for (const auto& atom : mu.atoms) {
        Complex p(1, 0);
        for (int j = 0; j < K; ++j) {
            p *= atom.position;
            out[j] += atom.weight * p;
        }
    }
    return out;
}

double moment_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b, int K) {
    auto ma = moments(a, K), mb = moments(b, K);
    double d = 0;
    for (int j = 0; j < K; ++j) d = std::max(d, std::abs(ma[j] - mb[j]));
    return d;
}

namespace {

struct AngleOutcome {
    bool landed = false;
    bool excluded = false;
    LandingRecord record;
};

AngleOutcome process_angle(Family family, const RayTrace& trace, const Angle& theta, int n,
                           int k, bool parabolic) {
    AngleOutcome out;
    if (trace.status != RayStatus::Reached) return out;
    LandingEstimate est = landing_estimate(trace);
    try {
        LandingRecord rec;
        if (parabolic) {
            OrbitSignature sig = orbit_signature(theta, 2);
            rec = refine_parabolic_quadratic(est.c, static_cast<int>(sig.period));
        } else {
            rec = refine_misiurewicz(family, est.c, n, k);
        }
        rec.theta = theta;
        rec.family = family;
        rec.c_ray = est.c;
        if (rec.kind == LandingKind::Unrefined) {
            out.excluded = true;
            out.record = rec;
            return out;
        }
        out.landed = true;
        out.record = rec;
    } catch (const std::exception&) {
        // per-angle failures are reported, never propagated out of the batch
    }
    return out;
}

}  // namespace

LandedSet land_angle_set(Family family, const std::vector<Angle>& set, int n, int k,
                         bool parabolic, const RaySchedule& schedule, int workers) {
    LandedSet out;
    std::vector<AngleOutcome> results(set.size());
    std::vector<RayTrace> traces(set.size());
    parallel_for(set.size(), workers, [&](std::size_t i) {
        traces[i] = trace_ray(family, set[i], schedule);
        results[i] = process_angle(family, traces[i], set[i], n, k, parabolic);
    });
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (results[i].landed)
            out.records.push_back(results[i].record);
        else if (results[i].excluded)
            out.excluded.push_back(set[i]);
        else
            out.failed.push_back(set[i]);
    }
    out.traces = std::move(traces);
    std::sort(out.records.begin(), out.records.end(),
              [](const LandingRecord& a, const LandingRecord& b) { return a.theta < b.theta; });
    return out;
}

ReferenceSample reference_sample(Family family, int count, std::uint64_t rng_seed,
                                 const RaySchedule& schedule, int workers) {
    if (count < 1) throw std::invalid_argument("reference_sample: count >= 1 required");
    ReferenceSample out;
    out.requested = count;

    SplitMix64 rng(rng_seed);
    std::vector<Angle> angles;
    angles.reserve(count);
    const std::int64_t den = std::int64_t(1) << 40;
    for (int i = 0; i < count; ++i)
        angles.emplace_back(static_cast<std::int64_t>(rng.bits(40)), den);

    std::vector<int> status(count, 0);
    std::vector<Complex> endpoints(count);
    parallel_for(angles.size(), workers, [&](std::size_t i) {
        RayTrace tr = trace_ray(family, angles[i], schedule);
        if (tr.status == RayStatus::Reached) {
            endpoints[i] = tr.levels.back().c;
            status[i] = 1;
        }
    });

    std::vector<std::pair<Angle, Complex>> landed;
    for (int i = 0; i < count; ++i) {
        if (status[i])
            landed.emplace_back(angles[i], endpoints[i]);
        else
            out.dropped.push_back(angles[i]);
    }
    out.landed = static_cast<int>(landed.size());
    if (out.landed < static_cast<int>(std::ceil(0.9 * count)))
        throw InsufficientLandings("reference_sample: only " + std::to_string(out.landed) +
                                   " of " + std::to_string(count) + " rays reached t_end");
    std::sort(landed.begin(), landed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    const double w = 1.0 / out.landed;
    for (const auto& [theta, c] : landed) {
        out.measure.atoms.push_back({c, w});
        out.measure.total += w;
    }
    return out;
}

ConvergenceReport convergence_report(Family family, const std::vector<std::pair<int, int>>& nk,
                                     const ReferenceSample& reference,
                                     const RaySchedule& schedule, int workers,
                                     int moment_order) {
    ConvergenceReport report;
    report.family = family;
    double prev_distance = -1;
    for (const auto& [n, k] : nk) {
        ConvergenceRow row;
        row.n = n;
        row.k = k;
        try {
            const bool parabolic = (k == 0);
            if (parabolic && family != Family::Mandelbrot)
                throw std::domain_error("parabolic rows are quadratic-family only");
            std::vector<Angle> set;
            if (parabolic)
                set = parabolic_angles_quadratic(n);
            else if (family == Family::Mandelbrot)
                set = misiurewicz_angles_quadratic(n, k);
            else
                set = misiurewicz_angles_tricorn(n, k);
            row.cardinality = static_cast<std::int64_t>(set.size());
            row.discrepancy = star_discrepancy(set);

            LandedSet landed = land_angle_set(family, set, n, k, parabolic, schedule, workers);
            row.landed = static_cast<int>(landed.records.size());
            row.landed_fraction = static_cast<double>(row.landed) / row.cardinality;
            if (!landed.failed.empty())
                row.annotation = std::to_string(landed.failed.size()) + " rays stalled/diverged";
            if (!landed.excluded.empty()) {
                if (!row.annotation.empty()) row.annotation += "; ";
                row.annotation += std::to_string(landed.excluded.size()) + " strictness-excluded";
            }
            if (row.landed == 0) {
                if (!row.annotation.empty()) row.annotation += "; ";
                row.annotation += "no landings";
                report.rows.push_back(row);
                continue;
            }

            ClusterSet cs = cluster(landed.records);
            row.cluster_count = static_cast<std::int64_t>(cs.clusters.size());

            EmpiricalMeasure mu = measure_from_clusters(cs, row.cardinality);
            if (!mu.normalized()) {
                // dropped rays leave total < 1; renormalize for the moment
                // diff, the landed fraction records the deficit exactly
                for (auto& atom : mu.atoms) atom.weight /= mu.total;
                mu.total = 1.0;
            }
            row.moment_distance = moment_distance(mu, reference.measure, moment_order);
            if (prev_distance >= 0 && row.moment_distance > 1.2 * prev_distance)
                report.moment_distance_monotone = false;
            prev_distance = row.moment_distance;
        } catch (const std::exception& e) {
            row.annotation = e.what();
        }
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace extray
