#pragma once

#include <string>

#include <json.hpp>

#include "frobchi/catalog.hpp"
#include "frobchi/chow.hpp"
#include "frobchi/diffop.hpp"
#include "frobchi/frobpush.hpp"
#include "frobchi/variety.hpp"

// JSON boundary. Rationals are always "num/den" strings; graded elements
// carry explicit generator lists; variety spec files follow the schema
//   {name, dim, generators: [{name, degree}],
//    intersections: {"c1^2": "3/1", ...},
//    family?: {kind: "del_pezzo"|"fano3"|"pn", params: {...}}}
// with monomial keys in the canonical sorted-factor form.

namespace frobchi {

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json generators_to_json(const GeneratorSet& gens);
GeneratorSetPtr generators_from_json(const nlohmann::json& j);

nlohmann::json graded_to_json(const GradedElement& a);
GradedElement graded_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const IntersectionTable& t);
IntersectionTable table_from_json(const nlohmann::json& j);

nlohmann::json variety_to_json(const VarietySpec& v);
VarietySpec variety_from_json(const nlohmann::json& j);
VarietySpec variety_from_file(const std::string& path);

nlohmann::json qpoly_to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const TiltingVerdict& v);

nlohmann::json operator_to_json(const OperatorMatrix& m);
nlohmann::json diffop_report_to_json(const DiffopReport& r);

} // namespace frobchi
