#pragma once

#include <string>

#include <json.hpp>

#include "tap/spectral_function.hpp"

namespace tap {

/// JSON form: {"d":..,"K":..,"real":..,"coeffs":[[[k...],re,im],...]} with
/// nonzero coefficients only.  Round-trips exactly (shortest-round-trip
/// double serialization).
nlohmann::json to_json(const SpectralFunction& f);
SpectralFunction spectral_function_from_json(const nlohmann::json& j);

void save_spectral_function(const std::string& path, const SpectralFunction& f);
SpectralFunction load_spectral_function(const std::string& path);

}  // namespace tap
