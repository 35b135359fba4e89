#pragma once

// JSON and CSV forms of polynomials, diagrams and degree reports.

#include <json.hpp>
#include <string>

#include "cjp/degree.hpp"
#include "cjp/qring.hpp"
#include "cjp/skein.hpp"

namespace cjp::io {

using nlohmann::json;

/// {"text": "...", "terms": [{"exp": "3/2", "half_exp": 3, "coeff": "-1"}, ...]}
json to_json(const HalfLaurent& p);
HalfLaurent laurent_from_json(const json& j);

json to_json(const RatFunc& f);  // {"num": ..., "den": ...}
RatFunc ratfunc_from_json(const json& j);

/// Nodes in sweep order; edges are rebuilt by the sweep when reading back.
json to_json(const skein::PlanarDiagram& d);
skein::PlanarDiagram diagram_from_json(const json& j);

json to_json(const degree::DegreeReport& r);
degree::DegreeReport report_from_json(const json& j);
/// One row per color: N, residue, exact, predicted, match. The remaining report fields
/// go into leading "# key=value" lines so that report_from_csv restores everything.
std::string to_csv(const degree::DegreeReport& r);
degree::DegreeReport report_from_csv(const std::string& text);
/// Field-by-field, via the JSON form.
bool same_report(const degree::DegreeReport& a, const degree::DegreeReport& b);

}  // namespace cjp::io
