#pragma once

#include <string>

#include <json.hpp>

#include "sdim/strong_resolving.hpp"

namespace sdim {

inline nlohmann::ordered_json result_to_json(const SdimResult& r, const std::string& group, std::size_t order) {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["order"] = order;
  j["sdim"] = r.value;
  j["omega_reduced"] = r.omega_reduced ? nlohmann::ordered_json(*r.omega_reduced) : nlohmann::ordered_json(nullptr);
  j["method"] = std::string(to_string(r.method));
  j["closed_form"] = r.closed_form ? nlohmann::ordered_json(std::string(to_string(*r.closed_form)))
                                   : nlohmann::ordered_json(nullptr);
  j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
  j["verified"] = r.verified;
  if (r.note) j["note"] = *r.note;
  return j;
}

}  // namespace sdim
