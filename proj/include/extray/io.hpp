#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "extray/landing.hpp"
#include "extray/measures.hpp"
#include "extray/rays.hpp"

namespace extray::io {

// shortest-roundtrip decimal; identical across reruns of the same binary
std::string format_double(double v);

// "p_q" stem for per-angle file names
std::string angle_stem(const Angle& theta);

// Angle list: "# base=<m> n=<n> k=<k> count=<N>" (k=0 for parabolic sets),
// optional "# config ..." comment, then one "p/q" per line, sorted ascending.
void write_angle_list(std::ostream& os, const std::vector<Angle>& angles, std::int64_t base,
                      int n, int k, const std::string& config);
struct AngleList {
    std::vector<Angle> angles;
    std::int64_t base = 2;
    int n = 0, k = 0;
    std::int64_t count = 0;
};
AngleList read_angle_list(std::istream& is);

// Trace CSV: header comments record family, schedule and angle; columns
// t,depth,re_c,im_c,residual,iters.
void write_trace_csv(std::ostream& os, const RayTrace& trace, const std::string& config);

struct LandingRow {
    LandingRecord record;
    long cluster_id = -1;
    int multiplicity = 0;
};

// Landing table CSV: columns theta,family,n,k,re_c,im_c,kind,residual,
// strictness,cycle_period,cluster_id,multiplicity.
void write_landing_csv(std::ostream& os, const std::vector<LandingRecord>& records,
                       const ClusterSet& clusters, const std::string& config);
void write_landing_json(std::ostream& os, const std::vector<LandingRecord>& records,
                        const ClusterSet& clusters, const std::string& config);
std::vector<LandingRow> read_landing_csv(std::istream& is);

void write_report_csv(std::ostream& os, const ConvergenceReport& report,
                      const std::string& config);
void write_report_json(std::ostream& os, const ConvergenceReport& report,
                       const std::string& config);

// atom scatter, circle area proportional to weight; presentation only
void write_svg(std::ostream& os, const EmpiricalMeasure& mu, const std::string& config);

}  // namespace extray::io
