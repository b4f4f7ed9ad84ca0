#pragma once

#include "modrep/module.hpp"
#include "modrep/second.hpp"
#include "modrep/structure.hpp"

#include <json.hpp>

namespace modrep {

/// {"spec": "Z2 + Z4", "invariant_factors": [2, 4]}
nlohmann::json toJson(const FinModule& m);
/// {"order", "generators" (canonical basis rows), "annihilator"}
nlohmann::json toJson(const Submodule& n);
nlohmann::json toJson(const std::vector<PrimeIdeal>& primes);
nlohmann::json toJson(const Representation& r);
nlohmann::json toJson(const AttReport& r);
nlohmann::json toJson(const StructureProfile& p);

/// Inverse of toJson(Submodule) for a known parent.
Submodule submoduleFromJson(const FinModule& parent, const nlohmann::json& j);
Representation representationFromJson(const FinModule& parent, const nlohmann::json& j);

}  // namespace modrep
