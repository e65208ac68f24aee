#pragma once

/**
 * @file omega_json.hpp
 * @brief JSON serialization of the library's value types, and the report
 *        envelope every CLI command emits in machine mode. Key order is
 *        always sorted, so byte output is deterministic for fixed inputs.
 */

#include <string>

#include <json.hpp>

#include "omega/cyclo.hpp"
#include "omega/distinguished.hpp"
#include "omega/orbits.hpp"
#include "omega/series.hpp"

namespace omega_cli {

using json = nlohmann::json;

json to_json(const omega::Factorization& f);
json to_json(const omega::PairContext& ctx);
json to_json(const omega::DistinguishedVerdict& v);
json to_json(const omega::OrderGrowthProfile& profile);
json to_json(const omega::MultiplesChart& chart);
json to_json(const omega::TenFourteenReport& report);
json to_json(const omega::DescentReport& report);
json to_json(const omega::OrbitSet& set);
json to_json(const omega::CycloElement& e);
json to_json(const omega::ExponentMultiset& ms);
json to_json(const omega::PeriodicRationalFn& f);
json to_json(const omega::FixedPointReport& report);
json to_json(const omega::Decomposition& d);
json to_json(const omega::BasisMatrix& m);
json to_json(const omega::MPrimeReport& report);

/// {"command", "params", "result", "counterexamples", "version"}
json envelope(const std::string& command, json params, json result,
              json counterexamples = json::array());

std::string dump(const json& j);

}  // namespace omega_cli
