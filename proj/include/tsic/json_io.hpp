#pragma once

#include <string>

#include "json.hpp"
#include "tsic/codes.hpp"
#include "tsic/coloring.hpp"
#include "tsic/model.hpp"
#include "tsic/rates.hpp"

namespace tsic {

using Json = nlohmann::json;

// Canonical instance schema:
// {"m":5,"t":1,"side_information":{"1":[2,5],...},"partition":{"P1":[1,2],"P2":[3,4],"P3":[5]}}
TuicpInstance instance_from_json(const Json& j);
Json instance_to_json(const TuicpInstance& inst);

// Reads and parses an instance file; parse errors carry the file name.
TuicpInstance load_instance(const std::string& path);

Json coloring_to_json(const TwoSenderColoring& c);
TwoSenderColoring coloring_from_json(const Json& j);

Json code_to_json(const TwoSenderCode& code);

// Exact rational with a decimal echo: {"bits":3,"t":1,"decimal":3.0}.
Json rational_json(const Rational& r);
// "3/1 (= 3.000)"
std::string rational_display(const Rational& r);

Json report_to_json(const RateReport& report);
std::string report_markdown(const RateReport& report);

}  // namespace tsic
