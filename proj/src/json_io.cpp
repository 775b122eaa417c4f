#include "detm/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace detm {

json form_to_json(const Form& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json exps = json::array();
        for (int e : m.exp) exps.push_back(e);
        terms.push_back(json::array({exps, c.get_num().get_str(), c.get_den().get_str()}));
    }
    return json{{"n", f.n()}, {"degree", f.degree()}, {"terms", terms}};
}

namespace {

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long>());
    throw std::invalid_argument("expected an integer or integer string");
}

}  // namespace

Form form_from_json(const json& j) {
    int n = j.at("n").get<int>();
    int degree = j.at("degree").get<int>();
    Form f(n, degree);
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& e : t.at(0)) m.exp.push_back(e.get<int>());
        if (static_cast<int>(m.exp.size()) != n + 1)
            throw std::invalid_argument("form term has wrong number of exponents");
        int deg = 0;
        for (int e : m.exp) deg += e;
        if (deg != degree) throw std::invalid_argument("form term degree mismatch");
        Int num = int_from_json(t.at(1));
        Int den = t.size() > 2 ? int_from_json(t.at(2)) : Int(1);
        if (den == 0) throw std::invalid_argument("form term has zero denominator");
        Rat c(num, den);
        c.canonicalize();
        f.set_coeff(m, c);
    }
    return f;
}

json point_to_json(const ProjPoint& P) {
    json a = json::array();
    for (const auto& x : P.coords) a.push_back(x.get_str());
    return a;
}

ProjPoint point_from_json(const json& j) {
    std::vector<Int> c;
    for (const auto& x : j) c.push_back(int_from_json(x));
    return make_point(std::move(c));
}

json points_to_json(const std::vector<ProjPoint>& pts) {
    json a = json::array();
    for (const auto& P : pts) a.push_back(point_to_json(P));
    return a;
}

std::vector<ProjPoint> points_from_json(const json& j) {
    std::vector<ProjPoint> out;
    for (const auto& p : j) out.push_back(point_from_json(p));
    return out;
}

json height_report_to_json(const ProjPoint& P, const HeightReport& r) {
    return json{{"point", point_to_json(P)},
                {"classic_log_height", r.classic_log_height},
                {"arakelov_log_height", r.arakelov_log_height},
                {"arakelov_radicand", r.arakelov.radicand().get_str()},
                {"bound_gap", r.bound_gap}};
}

json residue_class_to_json(const ResidueClass& c) {
    json coords = json::array();
    for (long x : c.point_mod_p.coords) coords.push_back(x);
    return json{{"p", c.p},
                {"point_mod_p", coords},
                {"regular", c.regular},
                {"members", points_to_json(c.members)}};
}

json filtration_profile_to_json(const FiltrationProfile& fp) {
    return json{{"D", fp.D}, {"center", point_to_json(fp.center)}, {"dims", fp.dims}, {"R", fp.R}};
}

json slope_to_json(const SlopeInterval& s) {
    return json{{"r1", s.r1},
                {"mu_sym_radicand", s.degree.radicand().get_str()},
                {"mu_sym", s.mu_sym},
                {"lower", s.lower},
                {"upper", s.upper}};
}

json bound_report_to_json(const BoundReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(json{{"name", e.name}, {"value", e.value}, {"formula", e.formula}});
    return json{{"constants", entries}};
}

json experiment_report_to_json(const ExperimentReport& r) {
    json primes = json::array();
    for (const auto& p : r.primes) primes.push_back(p.get_str());
    json outcomes = json::array();
    for (const auto& oc : r.outcomes) {
        json coords = json::array();
        for (long x : oc.class_point.coords) coords.push_back(x);
        outcomes.push_back(json{{"p", oc.p},
                                {"class_point", coords},
                                {"regular", oc.regular},
                                {"members", points_to_json(oc.members)},
                                {"success", oc.success},
                                {"D", oc.D_used},
                                {"form", oc.success ? form_to_json(oc.form) : json()}});
    }
    json forms = json::array();
    for (const auto& g : r.forms) forms.push_back(form_to_json(g));
    json out{{"variety", r.variety},
             {"B", r.B},
             {"epsilon", r.epsilon.get_str()},
             {"h_X", r.h_X},
             {"I_value", r.I_value},
             {"part1", r.part1},
             {"primes", primes},
             {"outcomes", outcomes},
             {"forms", forms},
             {"points", points_to_json(r.points)},
             {"uncovered", points_to_json(r.uncovered)},
             {"total_forms", r.total_forms},
             {"count_bound", r.count_bound_value},
             {"wall_seconds", r.wall_seconds},
             {"all_covered", r.all_covered}};
    out["singular_cover"] = r.singular ? form_to_json(r.singular->form) : json();
    return out;
}

std::string experiment_report_to_csv(const ExperimentReport& r) {
    std::ostringstream os;
    os << "p,class,D,form\n";
    for (const auto& oc : r.outcomes) {
        os << oc.p << ",\"[";
        for (std::size_t i = 0; i < oc.class_point.coords.size(); ++i) {
            if (i) os << ":";
            os << oc.class_point.coords[i];
        }
        os << "]\"," << oc.D_used << ",\"" << (oc.success ? oc.form.to_string() : "") << "\"\n";
    }
    return os.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

Hypersurface load_variety(const std::string& path) {
    return make_hypersurface(form_from_json(load_json_file(path)));
}

}  // namespace detm
