#pragma once

#include <nlohmann/json.hpp>

#include "steiner/chow.hpp"
#include "steiner/jumping.hpp"
#include "steiner/schwarzenberger.hpp"

namespace steiner {

using json = nlohmann::json;

json scalar_to_json(const Scalar& s);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const FieldSpec& f);

json steiner_map_to_json(const SteinerMap& sm);
SteinerMap steiner_map_from_json(const json& j);

json chow_class_to_json(const chow::ChowClass& c);
chow::ChowClass chow_class_from_json(const json& j, const chow::Grassmannian& g);

json subspace_to_json(const Subspace& s);
json point_to_json(const Subspace& line); // normalized coordinate row

json check_result_to_json(const CheckResult& r);
json bounds_to_json(const DimBounds& b);
json trivial_range_to_json(const TrivialRangeReport& r);
json prime_jumping_report_to_json(const PrimeJumpingReport& r);
json maximality_report_to_json(const MaximalityReport& r);
json family_report_to_json(const schw::FamilyReport& r);

/// Parses a file or inline string as JSON; throws ParseError with context.
json parse_json_text(const std::string& text, const std::string& what);

} // namespace steiner
