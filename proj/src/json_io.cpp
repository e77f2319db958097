#include "nomc/json_io.hpp"

namespace nomc {

using nlohmann::json;

json to_json(const Perm& p) {
  json cycles = json::array();
  for (const Perm::Cycle& cyc : p.cycles()) {
    json atoms = json::array();
    for (const Atom& a : cyc) atoms.push_back(a.str());
    cycles.push_back(std::move(atoms));
  }
  return cycles;
}

json to_json(const Context& ctx) {
  json constraints = json::array();
  for (const FixConstraint& c : ctx.constraints())
    constraints.push_back({{"perm", to_json(c.perm)}, {"var", c.var.name}});
  return constraints;
}

json to_json(const Solution& sol) {
  json names = json::array();
  for (const Atom& a : sol.ctx.nu_names()) names.push_back(a.str());
  json subst = json::object();
  for (const auto& [v, t] : sol.subst.mapping())
    subst[v.name] = to_string(t);
  return {{"new", std::move(names)},
          {"context", to_json(sol.ctx)},
          {"subst", std::move(subst)}};
}

json to_json(const std::vector<Solution>& sols) {
  json out = json::array();
  for (const Solution& s : sols) out.push_back(to_json(s));
  return out;
}

json to_json(const ProofTree& proof) {
  json premises = json::array();
  for (const ProofTree& p : proof.premises) premises.push_back(to_json(p));
  json node = {{"rule", rule_name(proof.rule)},
               {"conclusion", to_string(proof.conclusion)},
               {"premises", std::move(premises)}};
  if (proof.fresh) node["fresh"] = proof.fresh->str();
  return node;
}

}  // namespace nomc
