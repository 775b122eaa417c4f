#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "detm/json_io.hpp"

using namespace detm;

namespace {

Rat parse_rat(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

ProjPoint parse_point(const std::string& s) {
    return point_from_json(json::parse(s));
}

BoundInputs make_inputs(const Hypersurface& X, double B, const Rat& eps, double hX, double I) {
    BoundInputs bi;
    bi.n = X.n;
    bi.d = X.d();
    bi.delta = X.delta;
    bi.epsilon = eps;
    bi.B = B;
    bi.h_X = hX;
    bi.I_value = I;
    return bi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact determinant-method experiments on hypersurfaces over Q"};
    app.require_subcommand(1);

    // heights
    std::string heights_file;
    auto* cmd_heights = app.add_subcommand("heights", "Height reports for a list of points");
    cmd_heights->add_option("points", heights_file, "JSON file: array of integer coordinate arrays")
        ->required();

    // points enumerate / classes
    auto* cmd_points = app.add_subcommand("points", "Rational points of bounded height");
    cmd_points->require_subcommand(1);
    std::string pe_variety, pc_variety;
    std::string pe_bound = "10", pc_bound = "10";
    long pc_prime = 2;
    auto* cmd_pe = cmd_points->add_subcommand("enumerate", "List S(X;B)");
    cmd_pe->add_option("--variety", pe_variety, "variety JSON file")->required();
    cmd_pe->add_option("--bound", pe_bound, "height bound B (rational)")->required();
    auto* cmd_pc = cmd_points->add_subcommand("classes", "Partition S(X;B) by reduction mod p");
    cmd_pc->add_option("--variety", pc_variety)->required();
    cmd_pc->add_option("--bound", pc_bound)->required();
    cmd_pc->add_option("--prime", pc_prime)->required();

    // jets profile
    auto* cmd_jets = app.add_subcommand("jets", "Jet filtration profiles");
    cmd_jets->require_subcommand(1);
    std::string jp_variety, jp_point;
    int jp_degree = 1;
    auto* cmd_jp = cmd_jets->add_subcommand("profile", "Filtration dims and R at a point");
    cmd_jp->add_option("--variety", jp_variety)->required();
    cmd_jp->add_option("--point", jp_point, "point as JSON array, e.g. [1,1,1]")->required();
    cmd_jp->add_option("--degree", jp_degree)->required();

    // slope
    std::string sl_variety;
    int sl_degree = 1;
    auto* cmd_slope = app.add_subcommand("slope", "Slope interval of F_D");
    cmd_slope->add_option("--variety", sl_variety)->required();
    cmd_slope->add_option("--degree", sl_degree)->required();

    // bounds
    std::string bd_variety, bd_eps = "1";
    double bd_B = 10, bd_hX = -1, bd_I = -1;
    auto* cmd_bounds = app.add_subcommand("bounds", "All explicit constants");
    cmd_bounds->add_option("--variety", bd_variety)->required();
    cmd_bounds->add_option("--B", bd_B)->required();
    cmd_bounds->add_option("--epsilon", bd_eps)->required();
    cmd_bounds->add_option("--hX", bd_hX, "override for the height of the variety");
    cmd_bounds->add_option("--I", bd_I, "override for the I invariant");

    // detmethod run / check-det
    auto* cmd_dm = app.add_subcommand("detmethod", "Determinant-method pipeline");
    cmd_dm->require_subcommand(1);
    std::string dr_variety, dr_eps = "1", dr_out, dr_csv;
    double dr_B = 10, dr_hX = -1, dr_I = -1;
    int dr_maxdeg = 8, dr_jobs = 1;
    auto* cmd_dr = cmd_dm->add_subcommand("run", "Full covering experiment");
    cmd_dr->add_option("--variety", dr_variety)->required();
    cmd_dr->add_option("--bound", dr_B)->required();
    cmd_dr->add_option("--epsilon", dr_eps)->required();
    cmd_dr->add_option("--hX", dr_hX);
    cmd_dr->add_option("--I", dr_I);
    cmd_dr->add_option("--max-degree", dr_maxdeg);
    cmd_dr->add_option("--jobs", dr_jobs);
    cmd_dr->add_option("--out", dr_out, "report JSON output path")->required();
    cmd_dr->add_option("--csv", dr_csv, "optional CSV of (class, D, form) rows");

    std::string cd_variety, cd_points;
    long cd_prime = 2;
    int cd_degree = 1;
    auto* cmd_cd = cmd_dm->add_subcommand("check-det", "p-adic determinant valuation check");
    cmd_cd->add_option("--variety", cd_variety)->required();
    cmd_cd->add_option("--points", cd_points)->required();
    cmd_cd->add_option("--prime", cd_prime)->required();
    cmd_cd->add_option("--degree", cd_degree)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_heights) {
            json out = json::array();
            for (const auto& P : points_from_json(load_json_file(heights_file)))
                out.push_back(height_report_to_json(P, height_comparison(P)));
            std::cout << out.dump(2) << "\n";
        } else if (*cmd_pe) {
            Hypersurface X = load_variety(pe_variety);
            std::cout << points_to_json(enumerate_points(X, parse_rat(pe_bound))).dump(2) << "\n";
        } else if (*cmd_pc) {
            Hypersurface X = load_variety(pc_variety);
            auto pts = enumerate_points(X, parse_rat(pc_bound));
            json out = json::array();
            for (const auto& c : partition_into_classes(X, pts, pc_prime))
                out.push_back(residue_class_to_json(c));
            std::cout << out.dump(2) << "\n";
        } else if (*cmd_jp) {
            Hypersurface X = load_variety(jp_variety);
            auto fp = filtration_profile(X, jp_degree, parse_point(jp_point));
            std::cout << filtration_profile_to_json(fp).dump(2) << "\n";
        } else if (*cmd_slope) {
            Hypersurface X = load_variety(sl_variety);
            std::cout << slope_to_json(slope_F_D(X, sl_degree)).dump(2) << "\n";
        } else if (*cmd_bounds) {
            Hypersurface X = load_variety(bd_variety);
            double hX = bd_hX >= 0 ? bd_hX : naive_form_height(X.f);
            double I = bd_I > 0 ? bd_I : I_lower_bound(X.d(), X.delta);
            BoundInputs bi = make_inputs(X, bd_B, parse_rat(bd_eps), hX, I);
            BoundReport rep = constants_C123(bi);
            CountBound cb = count_bound(bi);
            rep.add("A_1", cb.A1, "(n-d)(delta-1) + (2d+2)^(d+1)/d! * (n-d)delta");
            rep.add("A_2", cb.A2,
                    "[K:Q](C_3 + (2d+2)^(d+1)/d! * delta(log(n+1) + (1/2)log(d+1) + 2^d))");
            rep.add("A_3", cb.A3, "(I/delta)(A_1 + A_2/epsilon) + 1");
            rep.add("C''_4", cb.C4pp,
                    "delta(d+1) alpha^d(alpha^(A_3 d)-1)/(alpha^d-1) * "
                    "((d+1)(n+1))^((1/2)(1+eps)[K:Q](d+1)delta^(-1/d))");
            rep.add("C_4", cb.C4, "C''_4 + 1");
            rep.add("count_exponent", cb.exponent, "(1+eps) d delta / I");
            rep.add("count_bound", cb.bound, "C_4 * B^((1+eps) d delta / I)");
            rep.add("large_height_threshold", large_height_threshold(bi),
                    "(2d+2)^(d+1)/d! * delta * (log B/[K:Q] + (3/2)log(n+1) + 2^d)");
            PrimePlan plan = prime_plan(bi);
            rep.add("log_N0", plan.log_N0,
                    "(1+eps)(log B + (1/2)[K:Q]log((n+1)(d+1))) delta / I");
            rep.add("r", static_cast<double>(plan.r),
                    "floor(((n-d)(delta-1)log B + ((n-d)h_X + C_3)[K:Q]) / log N_0 + 1)");
            json out = bound_report_to_json(rep);
            json primes = json::array();
            for (const auto& p : plan.primes) primes.push_back(p.get_str());
            out["primes"] = primes;
            out["h_X"] = hX;
            out["I_value"] = I;
            std::cout << out.dump(2) << "\n";
        } else if (*cmd_dr) {
            Hypersurface X = load_variety(dr_variety);
            ExperimentConfig cfg;
            cfg.max_degree = dr_maxdeg;
            cfg.jobs = dr_jobs;
            if (dr_hX >= 0) cfg.h_X = dr_hX;
            if (dr_I > 0) cfg.I_value = dr_I;
            ExperimentReport rep = run_experiment(X, dr_B, parse_rat(dr_eps), cfg);
            save_json_file(dr_out, experiment_report_to_json(rep));
            if (!dr_csv.empty()) {
                std::ofstream cs(dr_csv);
                cs << experiment_report_to_csv(rep);
            }
            std::cout << (rep.all_covered ? "covered" : "NOT covered") << ": " << rep.total_forms
                      << " forms, bound " << rep.count_bound_value << "\n";
            if (!rep.all_covered) return 1;
        } else if (*cmd_cd) {
            Hypersurface X = load_variety(cd_variety);
            auto pts = points_from_json(load_json_file(cd_points));
            DetCheck dc = determinant_valuation_check(X, pts, cd_degree, cd_prime);
            json out{{"det", dc.det.get_str()},
                     {"valuation", dc.valuation ? json(*dc.valuation) : json("infinite")},
                     {"R", dc.R},
                     {"holds", dc.holds}};
            std::cout << out.dump(2) << "\n";
            if (!dc.holds) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
