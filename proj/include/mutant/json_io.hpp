#pragma once

#include "mutant/engine.hpp"
#include "mutant/identities.hpp"
#include "mutant/models.hpp"

#include <json.hpp>

#include <string>

namespace mutant {

using nlohmann::json;

json matrix_to_json(const ExchangeMatrix& b);
ExchangeMatrix matrix_from_json(const json& j);

json diagram_to_json(const Diagram& g);
Diagram diagram_from_json(const json& j);

json seed_to_json(const Seed& s);
/// Reads {"matrix":..., "semifield":[...], "coeff_pairs":[[[..],[..]],...]};
/// the cluster is the initial one. semifield/coeff_pairs may be omitted for
/// trivial coefficients.
Seed seed_from_json(const json& j);

json root_to_json(const RootVec& v);
json clusters_to_json(const RootSystem& rs, const std::vector<std::vector<int>>& cls);
json complex_graph_to_json(const RootSystem& rs, const ComplexGraph& g);
json engine_graph_to_json(const EngineGraph& g);
json mutation_class_to_json(const MutationClassResult& r);
json triangulation_to_json(const PolygonModel& pm, const Triangulation& t);
json identity_reports_to_json(const std::vector<IdentityReport>& reports);

std::string diagram_dot(const Diagram& g, const std::string& name = "diagram");
std::string mutation_class_dot(const MutationClassResult& r);
std::string complex_graph_dot(const RootSystem& rs, const ComplexGraph& g);
std::string engine_graph_dot(const EngineGraph& g);

} // namespace mutant
