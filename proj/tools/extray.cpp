#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "extray/enumerate.hpp"
#include "extray/io.hpp"
#include "extray/measures.hpp"
#include "extray/util.hpp"

namespace fs = std::filesystem;
using namespace extray;

namespace {

struct CommonOpts {
    std::string family = "mandelbrot";
    int n = 0;
    int k = 0;
    bool parabolic = false;
    double potential = 1e-8;  // t_end
    double tol = 1e-13;
    double epsilon = 1e-6;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out;
    std::string emit = "csv";
};

Family parse_family(const std::string& s) {
    if (s == "mandelbrot") return Family::Mandelbrot;
    if (s == "tricorn") return Family::Tricorn;
    throw CLI::ValidationError("--family must be mandelbrot or tricorn");
}

RaySchedule make_schedule(const CommonOpts& o) {
    RaySchedule s;
    s.t_end = o.potential;
    s.newton_tol = o.tol;
    s.validate();
    return s;
}

std::string config_line(const std::string& cmd, const CommonOpts& o) {
    std::ostringstream ss;
    ss << "cmd=" << cmd << " family=" << o.family << " n=" << o.n << " k=" << o.k
       << " parabolic=" << (o.parabolic ? 1 : 0) << " potential=" << io::format_double(o.potential)
       << " tol=" << io::format_double(o.tol) << " epsilon=" << io::format_double(o.epsilon)
       << " seed=" << o.seed << " workers=" << o.workers << " emit=" << o.emit;
    return ss.str();
}

std::vector<Angle> angle_set_for(const CommonOpts& o) {
    if (o.parabolic) return parabolic_angles_quadratic(o.n);
    if (parse_family(o.family) == Family::Mandelbrot)
        return misiurewicz_angles_quadratic(o.n, o.k);
    return misiurewicz_angles_tricorn(o.n, o.k);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    return os;
}

int cmd_enumerate(const CommonOpts& o) {
    std::vector<Angle> set = angle_set_for(o);
    std::int64_t base = o.parabolic || parse_family(o.family) == Family::Mandelbrot ? 2 : -2;
    int k = o.parabolic ? 0 : o.k;
    if (o.out.empty()) {
        io::write_angle_list(std::cout, set, base, o.n, k, config_line("enumerate", o));
    } else {
        auto os = open_out(o.out);
        io::write_angle_list(os, set, base, o.n, k, config_line("enumerate", o));
    }
    return 0;
}

int cmd_trace(const CommonOpts& o, const std::string& theta_str) {
    RaySchedule sched = make_schedule(o);
    Family fam = parse_family(o.family);
    std::vector<Angle> set;
    if (!theta_str.empty())
        set.push_back(Angle::parse(theta_str));
    else
        set = angle_set_for(o);
    fs::path dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
    fs::create_directories(dir);
    std::vector<RayTrace> traces(set.size());
    parallel_for(set.size(), o.workers,
                 [&](std::size_t i) { traces[i] = trace_ray(fam, set[i], sched); });
    int stalled = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto os = open_out((dir / ("trace_" + io::angle_stem(set[i]) + ".csv")).string());
        io::write_trace_csv(os, traces[i], config_line("trace", o));
        if (traces[i].status != RayStatus::Reached) {
            ++stalled;
            std::cerr << "stalled: theta=" << set[i].to_string()
                      << " t_best=" << io::format_double(traces[i].t_best) << "\n";
        }
    }
    std::cout << "traced " << set.size() << " rays, " << stalled << " stalled, wrote "
              << dir.string() << "\n";
    return 0;
}

int cmd_land(const CommonOpts& o) {
    RaySchedule sched = make_schedule(o);
    Family fam = parse_family(o.family);
    if (o.parabolic && fam == Family::Tricorn)
        throw std::domain_error(
            "parabolic landing is defined for the quadratic family only; tricorn rays at "
            "periodic angles may accumulate on parabolic arcs without landing");
    std::vector<Angle> set = angle_set_for(o);
    LandedSet landed = land_angle_set(fam, set, o.n, o.k, o.parabolic, sched, o.workers);
    for (const Angle& a : landed.failed)
        std::cerr << "no landing: theta=" << a.to_string() << "\n";
    ClusterSet cs = cluster(landed.records, o.epsilon);
    std::string cfg = config_line("land", o);
    if (o.out.empty()) {
        io::write_landing_csv(std::cout, landed.records, cs, cfg);
    } else {
        auto os = open_out(o.out);
        io::write_landing_csv(os, landed.records, cs, cfg);
        if (o.emit == "svg") {
            EmpiricalMeasure mu = measure_from_clusters(cs, set.size());
            auto svg = open_out(o.out + ".svg");
            io::write_svg(svg, mu, cfg);
        } else if (o.emit == "json") {
            auto js = open_out(o.out + ".json");
            io::write_landing_json(js, landed.records, cs, cfg);
        }
    }
    std::cout << "landed " << landed.records.size() << "/" << set.size() << " rays in "
              << cs.clusters.size() << " clusters\n";
    return landed.failed.empty() && landed.excluded.empty() ? 0 : 1;
}

int cmd_cluster(const CommonOpts& o, const std::string& in_path) {
    std::ifstream is(in_path);
    if (!is) throw std::runtime_error("cannot open input file: " + in_path);
    std::vector<io::LandingRow> rows = io::read_landing_csv(is);
    std::vector<LandingRecord> records;
    for (const auto& r : rows)
        if (r.record.kind != LandingKind::Unrefined) records.push_back(r.record);
    ClusterSet cs = cluster(records, o.epsilon);
    std::string cfg = config_line("cluster", o);
    if (o.out.empty()) {
        io::write_landing_csv(std::cout, records, cs, cfg);
    } else {
        auto os = open_out(o.out);
        io::write_landing_csv(os, records, cs, cfg);
    }
    std::cout << "reclustered " << records.size() << " records into " << cs.clusters.size()
              << " clusters at epsilon=" << io::format_double(o.epsilon) << "\n";
    return 0;
}

int cmd_compare(const CommonOpts& o, int n_from, int n_to, int ref_count) {
    RaySchedule sched = make_schedule(o);
    Family fam = parse_family(o.family);
    std::vector<std::pair<int, int>> nk;
    if (n_from > 0 && n_to >= n_from) {
        for (int n = n_from; n <= n_to; ++n) nk.emplace_back(n, n / 2 + 1);
    } else {
        nk.emplace_back(o.n, o.parabolic ? 0 : o.k);
    }
    ReferenceSample ref = reference_sample(fam, ref_count, o.seed, sched, o.workers);
    ConvergenceReport report = convergence_report(fam, nk, ref, sched, o.workers);
    std::string cfg = config_line("compare", o) + " ref_count=" + std::to_string(ref_count);
    if (o.out.empty()) {
        io::write_report_csv(std::cout, report, cfg);
    } else {
        auto os = open_out(o.out + ".csv");
        io::write_report_csv(os, report, cfg);
        auto js = open_out(o.out + ".json");
        io::write_report_json(js, report, cfg);
    }
    for (const auto& row : report.rows)
        if (!row.annotation.empty())
            std::cerr << "row n=" << row.n << " k=" << row.k << ": " << row.annotation << "\n";
    return 0;
}

int cmd_verify_counts(int max_n) {
    long violations = 0;
    auto check = [&violations](bool ok, const std::string& what) {
        if (!ok) {
            ++violations;
            std::cerr << "violation: " << what << "\n";
        }
    };
    for (int n = 3; n <= max_n; ++n)
        for (int k = 2; k < n; ++k) {
            std::int64_t want = (std::int64_t(1) << (n - 1)) - (std::int64_t(1) << (k - 1)) -
                                (std::int64_t(1) << (n - k)) + 1;
            check(static_cast<std::int64_t>(misiurewicz_angles_quadratic(n, k).size()) == want,
                  "Card C(" + std::to_string(n) + "," + std::to_string(k) + ")");
            std::int64_t want_t =
                (n - k) % 2 == 0
                    ? want
                    : (std::int64_t(1) << (n - 1)) + (std::int64_t(1) << (k - 1)) -
                          (std::int64_t(1) << (n - k)) - 1;
            check(static_cast<std::int64_t>(misiurewicz_angles_tricorn(n, k).size()) == want_t,
                  "Card C*(" + std::to_string(n) + "," + std::to_string(k) + ")");
            if (n <= 12)
                check(tricorn_X_angles(n, k) == misiurewicz_angles_tricorn(n, k),
                      "X(" + std::to_string(n) + "," + std::to_string(k) + ") = C*(n,k)");
        }
    for (int n = 1; n <= std::min(max_n + 4, 20); ++n)
        check(static_cast<std::int64_t>(parabolic_angles_quadratic(n).size()) ==
                  (std::int64_t(1) << n) - 1,
              "Card P(" + std::to_string(n) + ")");
    if (violations == 0) std::cout << "OK: 3 formula families, 0 violations\n";

    long bound_violations = 0;
    for (int m = 2; m <= 6; ++m)
        for (int nn = 1; nn < m; ++nn) {
            std::int64_t lo = 1, hi = 1;
            for (int i = 0; i < m; ++i) lo *= 4;
            for (int i = 0; i < nn; ++i) hi *= 4;
            std::int64_t span = lo - hi;  // 4^m - 4^n
            auto pairs = pair_set_d4(m, nn);
            std::int64_t card = static_cast<std::int64_t>(pairs.size());
            if (!(span <= card && card <= 2 * span)) {
                ++bound_violations;
                std::cerr << "violation: pair-class bound S(" << m << "," << nn << ")\n";
            }
        }
    if (bound_violations == 0) std::cout << "OK: pair-class bounds (d=4), 0 violations\n";
    return violations + bound_violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"external-ray landing toolkit for the quadratic and antiholomorphic families"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string theta_str, in_path;
    int n_from = 0, n_to = 0, ref_count = 4096, max_n = 16;

    auto add_common = [&o](CLI::App* cmd, bool with_nk = true) {
        cmd->add_option("--family", o.family, "mandelbrot or tricorn");
        if (with_nk) {
            cmd->add_option("--n", o.n, "orbit equality exponent n");
            cmd->add_option("--k", o.k, "orbit equality exponent k");
            cmd->add_flag("--parabolic", o.parabolic, "use the parabolic set P(n)");
        }
        cmd->add_option("--potential", o.potential, "target potential t_end");
        cmd->add_option("--tol", o.tol, "Newton tolerance");
        cmd->add_option("--epsilon", o.epsilon, "clustering threshold");
        cmd->add_option("--seed", o.seed, "RNG seed");
        cmd->add_option("--workers", o.workers, "angle-level parallelism");
        cmd->add_option("--out", o.out, "output path");
        cmd->add_option("--emit", o.emit, "csv|json|svg");
    };

    auto* enumerate = app.add_subcommand("enumerate", "write an angle set");
    add_common(enumerate);
    auto* trace = app.add_subcommand("trace", "trace parameter rays to t_end");
    add_common(trace);
    trace->add_option("--theta", theta_str, "single angle p/q");
    auto* land = app.add_subcommand("land", "trace, refine and cluster an angle set");
    add_common(land);
    auto* cluster_cmd = app.add_subcommand("cluster", "re-cluster an existing landing table");
    add_common(cluster_cmd, false);
    cluster_cmd->add_option("--in", in_path, "landing table CSV")->required();
    auto* compare = app.add_subcommand("compare", "convergence report against a reference sample");
    add_common(compare);
    compare->add_option("--n-from", n_from, "first n of a range (k(n)=floor(n/2)+1)");
    compare->add_option("--n-to", n_to, "last n of a range");
    compare->add_option("--ref-count", ref_count, "reference sample size");
    auto* verify = app.add_subcommand("verify-counts", "check the cardinality identities");
    verify->add_option("--max-n", max_n, "largest n checked");

    try {
        app.parse(argc, argv);
        if (enumerate->parsed()) return cmd_enumerate(o);
        if (trace->parsed()) return cmd_trace(o, theta_str);
        if (land->parsed()) return cmd_land(o);
        if (cluster_cmd->parsed()) return cmd_cluster(o, in_path);
        if (compare->parsed()) return cmd_compare(o, n_from, n_to, ref_count);
        if (verify->parsed()) return cmd_verify_counts(max_n);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
