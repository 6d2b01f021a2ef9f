#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "specbound/check_outcome.hpp"
#include "specbound/invariants.hpp"
#include "specbound/spectral.hpp"

namespace specbound {

// Rounds to 15 significant digits so serialized numbers never carry more.
// Non-finite values pass through and serialize as null.
double round15(double x);
std::string format15(double x);

nlohmann::json to_json(const CheckOutcome& o);
nlohmann::json to_json(const InvariantProfile& p);
nlohmann::json to_json(const Spectrum<double>& s);
nlohmann::json to_json(const PerronData<double>& p);

// RFC 4180 quoting when needed.
std::string csv_field(const std::string& s);

}  // namespace specbound
