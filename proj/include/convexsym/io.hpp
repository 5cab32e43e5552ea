#pragma once

// JSON forms of bodies, operators, estimates and reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "convexsym/body.hpp"
#include "convexsym/harness.hpp"
#include "convexsym/measures.hpp"
#include "convexsym/symmetrizer.hpp"

namespace csym {

using Json = nlohmann::ordered_json;

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

// {"dim": n, "basis": [[...], ...]}; "dim" may be omitted for a nonzero basis.
Json subspace_to_json(const Subspace& h);
Subspace subspace_from_json(const Json& j);

Json body_to_json(const Body& k);
Body body_from_json(const Json& j);

Json symmetrizer_to_json(const Symmetrizer& op);
Symmetrizer symmetrizer_from_json(const Json& j);

Json estimate_to_json(const MeasureEstimate& e);

Json report_to_json(const PropertyReport& r);
PropertyReport report_from_json(const Json& j);
Json reports_to_json(const std::vector<PropertyReport>& reports);
std::vector<PropertyReport> reports_from_json(const Json& j);

// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

Json read_json_file(const std::string& path);  // IoError, InvalidInput on bad syntax
void write_text_file(const std::string& path, const std::string& text);  // IoError

}  // namespace csym
