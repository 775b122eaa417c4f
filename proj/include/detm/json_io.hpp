#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "detm/bounds.hpp"
#include "detm/heights.hpp"
#include "detm/jets_hilbert.hpp"
#include "detm/pipeline.hpp"
#include "detm/slopes.hpp"
#include "detm/variety.hpp"

namespace detm {

using json = nlohmann::json;

// Canonical interchange format:
// {"n": int, "degree": int, "terms": [[[e0,...,en], num, den], ...]} grlex-sorted
json form_to_json(const Form& f);
Form form_from_json(const json& j);

json point_to_json(const ProjPoint& P);
ProjPoint point_from_json(const json& j);
json points_to_json(const std::vector<ProjPoint>& pts);
std::vector<ProjPoint> points_from_json(const json& j);

json height_report_to_json(const ProjPoint& P, const HeightReport& r);
json residue_class_to_json(const ResidueClass& c);
json filtration_profile_to_json(const FiltrationProfile& fp);
json slope_to_json(const SlopeInterval& s);
json bound_report_to_json(const BoundReport& r);
json experiment_report_to_json(const ExperimentReport& r);

// (class, D, form) rows for tables
std::string experiment_report_to_csv(const ExperimentReport& r);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

Hypersurface load_variety(const std::string& path);

}  // namespace detm
