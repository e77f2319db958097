#pragma once

#include <json.hpp>

#include "nomc/unify.hpp"

namespace nomc {

nlohmann::json to_json(const Perm& p);
nlohmann::json to_json(const Context& ctx);
nlohmann::json to_json(const Solution& sol);
nlohmann::json to_json(const std::vector<Solution>& sols);
nlohmann::json to_json(const ProofTree& proof);

}  // namespace nomc
