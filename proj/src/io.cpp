#include "extray/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace extray::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string angle_stem(const Angle& theta) {
    std::string s = theta.to_string();
    for (char& ch : s)
        if (ch == '/') ch = '_';
    return s;
}

void write_angle_list(std::ostream& os, const std::vector<Angle>& angles, std::int64_t base,
                      int n, int k, const std::string& config) {
    os << "# base=" << base << " n=" << n << " k=" << k << " count=" << angles.size() << "\n";
    if (!config.empty()) os << "# config " << config << "\n";
    for (const Angle& a : angles) os << a.to_string() << "\n";
}

AngleList read_angle_list(std::istream& is) {
    AngleList out;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!header_seen && line.rfind("# base=", 0) == 0) {
                std::istringstream ss(line.substr(2));
                std::string tok;
                while (ss >> tok) {
                    auto eq = tok.find('=');
                    if (eq == std::string::npos) continue;
                    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                    if (key == "base") out.base = std::stoll(val);
                    if (key == "n") out.n = std::stoi(val);
                    if (key == "k") out.k = std::stoi(val);
                    if (key == "count") out.count = std::stoll(val);
                }
                header_seen = true;
            }
            continue;
        }
        out.angles.push_back(Angle::parse(line));
    }
    return out;
}

void write_trace_csv(std::ostream& os, const RayTrace& trace, const std::string& config) {
    const RaySchedule& s = trace.schedule;
    os << "# family=" << to_string(trace.family) << " theta=" << trace.theta.to_string()
       << " status=" << (trace.status == RayStatus::Reached ? "reached" : "stalled")
       << " t_best=" << format_double(trace.t_best) << "\n";
    os << "# schedule t_start=" << format_double(s.t_start) << " t_end=" << format_double(s.t_end)
       << " substeps=" << s.substeps_per_halving << " newton_tol=" << format_double(s.newton_tol)
       << " newton_max_iters=" << s.newton_max_iters << " tau=" << format_double(s.depth_tau)
       << "\n";
    if (!config.empty()) os << "# config " << config << "\n";
    os << "t,depth,re_c,im_c,residual,iters\n";
    for (const RayLevel& lv : trace.levels) {
        os << format_double(lv.t) << "," << lv.depth << "," << format_double(lv.c.real()) << ","
           << format_double(lv.c.imag()) << "," << format_double(lv.residual) << "," << lv.iters
           << "\n";
    }
}

void write_landing_csv(std::ostream& os, const std::vector<LandingRecord>& records,
                       const ClusterSet& clusters, const std::string& config) {
    if (!config.empty()) os << "# config " << config << "\n";
    os << "theta,family,n,k,re_c,im_c,kind,residual,strictness,cycle_period,cluster_id,"
          "multiplicity\n";
    auto find_cluster = [&clusters](const Angle& theta) -> std::pair<long, int> {
        for (size_t i = 0; i < clusters.clusters.size(); ++i)
            for (const Angle& m : clusters.clusters[i].members)
                if (m == theta)
                    return {static_cast<long>(i), clusters.clusters[i].multiplicity};
        return {-1, 0};
    };
    for (const LandingRecord& r : records) {
        auto [cid, mult] = find_cluster(r.theta);
        os << r.theta.to_string() << "," << to_string(r.family) << "," << r.n << "," << r.k << ","
           << format_double(r.c_refined.real()) << "," << format_double(r.c_refined.imag()) << ","
           << to_string(r.kind) << "," << format_double(r.residual) << ","
           << format_double(r.strictness) << "," << r.cycle_period << "," << cid << "," << mult
           << "\n";
    }
}

void write_landing_json(std::ostream& os, const std::vector<LandingRecord>& records,
                        const ClusterSet& clusters, const std::string& config) {
    nlohmann::json j;
    j["config"] = config;
    j["epsilon"] = clusters.epsilon;
    j["records"] = nlohmann::json::array();
    auto find_cluster = [&clusters](const Angle& theta) -> std::pair<long, int> {
        for (size_t i = 0; i < clusters.clusters.size(); ++i)
            for (const Angle& m : clusters.clusters[i].members)
                if (m == theta)
                    return {static_cast<long>(i), clusters.clusters[i].multiplicity};
        return {-1, 0};
    };
    for (const LandingRecord& r : records) {
        auto [cid, mult] = find_cluster(r.theta);
        j["records"].push_back({{"theta", r.theta.to_string()},
                                {"family", to_string(r.family)},
                                {"n", r.n},
                                {"k", r.k},
                                {"re_c", r.c_refined.real()},
                                {"im_c", r.c_refined.imag()},
                                {"kind", to_string(r.kind)},
                                {"residual", r.residual},
                                {"strictness", r.strictness},
                                {"cycle_period", r.cycle_period},
                                {"cluster_id", cid},
                                {"multiplicity", mult}});
    }
    os << j.dump(2) << "\n";
}

std::vector<LandingRow> read_landing_csv(std::istream& is) {
    std::vector<LandingRow> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("theta,", 0) == 0) continue;
        std::vector<std::string> cols;
        std::istringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) cols.push_back(tok);
        if (cols.size() != 12) continue;
        LandingRow row;
        row.record.theta = Angle::parse(cols[0]);
        row.record.family = cols[1] == "tricorn" ? Family::Tricorn : Family::Mandelbrot;
        row.record.n = std::stoi(cols[2]);
        row.record.k = std::stoi(cols[3]);
        row.record.c_refined = Complex(std::stod(cols[4]), std::stod(cols[5]));
        row.record.kind = cols[6] == "misiurewicz" ? LandingKind::Misiurewicz
                          : cols[6] == "parabolic" ? LandingKind::Parabolic
                                                   : LandingKind::Unrefined;
        row.record.residual = std::stod(cols[7]);
        row.record.strictness = std::stod(cols[8]);
        row.record.cycle_period = std::stoi(cols[9]);
        row.cluster_id = std::stol(cols[10]);
        row.multiplicity = std::stoi(cols[11]);
        out.push_back(std::move(row));
    }
    return out;
}

void write_report_csv(std::ostream& os, const ConvergenceReport& report,
                      const std::string& config) {
    if (!config.empty()) os << "# config " << config << "\n";
    os << "# family=" << to_string(report.family)
       << " moment_distance_monotone=" << (report.moment_distance_monotone ? 1 : 0) << "\n";
    os << "n,k,cardinality,landed,landed_fraction,discrepancy,moment_distance,cluster_count,"
          "annotation\n";
    for (const ConvergenceRow& r : report.rows) {
        os << r.n << "," << r.k << "," << r.cardinality << "," << r.landed << ","
           << format_double(r.landed_fraction) << "," << format_double(r.discrepancy) << ","
           << format_double(r.moment_distance) << "," << r.cluster_count << "," << r.annotation
           << "\n";
    }
}

void write_report_json(std::ostream& os, const ConvergenceReport& report,
                       const std::string& config) {
    nlohmann::json j;
    j["family"] = to_string(report.family);
    j["config"] = config;
    j["moment_distance_monotone"] = report.moment_distance_monotone;
    j["rows"] = nlohmann::json::array();
    for (const ConvergenceRow& r : report.rows) {
        j["rows"].push_back({{"n", r.n},
                             {"k", r.k},
                             {"cardinality", r.cardinality},
                             {"landed", r.landed},
                             {"landed_fraction", r.landed_fraction},
                             {"discrepancy", r.discrepancy},
                             {"moment_distance", r.moment_distance},
                             {"cluster_count", r.cluster_count},
                             {"annotation", r.annotation}});
    }
    os << j.dump(2) << "\n";
}

void write_svg(std::ostream& os, const EmpiricalMeasure& mu, const std::string& config) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300, wmax = 0;
    for (const auto& a : mu.atoms) {
        xmin = std::min(xmin, a.position.real());
        xmax = std::max(xmax, a.position.real());
        ymin = std::min(ymin, a.position.imag());
        ymax = std::max(ymax, a.position.imag());
        wmax = std::max(wmax, a.weight);
    }
    if (mu.atoms.empty()) {
        xmin = ymin = -1;
        xmax = ymax = 1;
        wmax = 1;
    }
    double span = std::max(xmax - xmin, ymax - ymin);
    if (span <= 0) span = 1;
    const double pad = 0.05 * span, size = 800.0;
    double scale = size / (span + 2 * pad);
    auto sx = [&](double x) { return (x - xmin + pad) * scale; };
    auto sy = [&](double y) { return size - (y - ymin + pad) * scale; };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 "
          "800 800\">\n";
    if (!config.empty()) os << "<!-- config " << config << " -->\n";
    for (const auto& a : mu.atoms) {
        double r = 12.0 * std::sqrt(a.weight / wmax);  // area proportional to weight
        os << "<circle cx=\"" << format_double(sx(a.position.real())) << "\" cy=\""
           << format_double(sy(a.position.imag())) << "\" r=\"" << format_double(r)
           << "\" fill=\"#27557a\" fill-opacity=\"0.55\"/>\n";
    }
    os << "</svg>\n";
}

}  // namespace extray::io
