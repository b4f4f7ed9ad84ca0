#include "modrep/serialize.hpp"

#include "modrep/errors.hpp"

namespace modrep {

using nlohmann::json;

json toJson(const FinModule& m) {
  return {{"spec", m.toString()}, {"invariant_factors", m.invariantFactors()}};
}

json toJson(const Submodule& n) {
  return {{"order", n.order()},
          {"generators", n.generators()},
          {"annihilator", annihilatorOf(n).generator}};
}

json toJson(const std::vector<PrimeIdeal>& primes) {
  json out = json::array();
  for (const auto& p : primes) out.push_back(p.p());
  return out;
}

json toJson(const Representation& r) {
  json summands = json::array();
  for (std::size_t i = 0; i < r.summands.size(); ++i) {
    auto s = toJson(r.summands[i]);
    s["prime"] = r.attached[i].p();
    summands.push_back(std::move(s));
  }
  return {{"kind", toString(r.kind)},
          {"summands", std::move(summands)},
          {"attached", toJson(r.attached)},
          {"is_minimal", r.is_minimal},
          {"is_direct", r.is_direct}};
}

json toJson(const AttReport& r) {
  return {{"att_all", toJson(r.att_all)},   {"att_main", toJson(r.att_main)},
          {"min_all", toJson(r.min_all)},   {"max_all", toJson(r.max_all)},
          {"min_main", toJson(r.min_main)}, {"max_main", toJson(r.max_main)}};
}

json toJson(const StructureProfile& p) {
  return {{"is_semisimple", p.is_semisimple},
          {"is_hollow", p.is_hollow},
          {"is_uniform", p.is_uniform},
          {"is_supplemented", p.is_supplemented},
          {"is_amply_supplemented", p.is_amply_supplemented},
          {"is_lifting", p.is_lifting},
          {"is_s_lifting", p.is_s_lifting},
          {"is_multiplication", p.is_multiplication},
          {"is_atomic", p.is_atomic},
          {"is_coatomic", p.is_coatomic},
          {"hollow_dim", p.hollow_dim},
          {"uniform_dim", p.uniform_dim}};
}

Submodule submoduleFromJson(const FinModule& parent, const json& j) {
  return submoduleFromGenerators(parent, j.at("generators").get<std::vector<std::vector<Int>>>());
}

Representation representationFromJson(const FinModule& parent, const json& j) {
  Representation r;
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "second" && kind != "secondary") throw ValidationError("unknown representation kind " + kind);
  r.kind = kind == "second" ? RepKind::Second : RepKind::Secondary;
  for (const auto& s : j.at("summands")) {
    r.summands.push_back(submoduleFromJson(parent, s));
    r.attached.emplace_back(s.at("prime").get<Int>());
  }
  r.is_minimal = j.at("is_minimal").get<bool>();
  r.is_direct = j.at("is_direct").get<bool>();
  return r;
}

}  // namespace modrep
