#include "nomc/context.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nomc {

namespace {

bool pure_quantified(const Perm& p, const AtomSet& nu) {
  return split(p, nu).unquantified.is_identity();
}

bool pure_unquantified(const Perm& p, const AtomSet& nu) {
  return split(p, nu).quantified.is_identity();
}

bool in_normal_form(const AtomSet& nu,
                    const std::vector<FixConstraint>& constraints) {
  std::map<Variable, AtomSet> fresh_atoms, fix_atoms;
  for (const FixConstraint& c : constraints) {
    CycleSplit parts = split(c.perm, nu);
    if (!parts.quantified.is_identity() && !parts.unquantified.is_identity())
      return false;  // (R1) applies
    AtomSet dom = c.perm.domain();
    auto& bucket = parts.unquantified.is_identity() ? fresh_atoms[c.var]
                                                    : fix_atoms[c.var];
    bucket.insert(dom.begin(), dom.end());
  }
  for (const auto& [var, fresh] : fresh_atoms) {
    auto it = fix_atoms.find(var);
    if (it == fix_atoms.end()) continue;
    for (const Atom& a : it->second)
      if (fresh.count(a)) return false;  // (R2) applies
  }
  return true;
}

}  // namespace

Context::Context(AtomSet nu_names, std::vector<FixConstraint> constraints)
    : nu_names_(std::move(nu_names)) {
  for (FixConstraint& c : constraints)
    if (!c.perm.is_identity()) constraints_.push_back(std::move(c));
  std::sort(constraints_.begin(), constraints_.end());
  constraints_.erase(std::unique(constraints_.begin(), constraints_.end()),
                     constraints_.end());
  normalized_ = in_normal_form(nu_names_, constraints_);
}

Context Context::with_nu_name(const Atom& a) const {
  AtomSet names = nu_names_;
  names.insert(a);
  return Context(std::move(names), constraints_);
}

Context Context::with_constraint(const FixConstraint& c) const {
  std::vector<FixConstraint> cs = constraints_;
  cs.push_back(c);
  return Context(nu_names_, std::move(cs));
}

Context restrict(const Context& ctx, const Variable& x) {
  std::vector<FixConstraint> cs;
  for (const FixConstraint& c : ctx.constraints())
    if (c.var == x) cs.push_back(c);
  return Context(ctx.nu_names(), std::move(cs));
}

Context normalize(const Context& ctx) {
  if (ctx.normalized()) return ctx;
  const AtomSet& nu = ctx.nu_names();

  std::map<Variable, std::set<Perm>> per_var;
  for (const FixConstraint& c : ctx.constraints())
    per_var[c.var].insert(c.perm);

  for (auto& [var, perms] : per_var) {
    for (bool merged = true; merged;) {
      // (R1): split every permutation along the nu-names.
      std::set<Perm> next;
      for (const Perm& p : perms) {
        CycleSplit parts = split(p, nu);
        if (!parts.quantified.is_identity()) next.insert(parts.quantified);
        if (!parts.unquantified.is_identity()) next.insert(parts.unquantified);
      }
      perms = std::move(next);

      // (R2): a fix-part cycle meeting a fresh-part permutation of the
      // same variable is absorbed into the fresh side. A fresh-part
      // constraint means exactly that the non-quantified atoms of its
      // domain are fresh, so the merge result is the canonical cycle over
      // the union of the atoms. (Composing the permutations instead can
      // cancel atoms, e.g. (c1 d e) o (d e) = (c1 d), silently losing
      // the freshness of e.) Canonical ordering of the set makes the scan
      // deterministic; every merge strictly shrinks the total number of
      // atom occurrences, so the loop terminates.
      merged = false;
      for (const Perm& f : perms) {
        if (!pure_quantified(f, nu) || f.is_identity()) continue;
        AtomSet fdom = f.domain();
        for (const Perm& g : perms) {
          if (!pure_unquantified(g, nu) || g.is_identity()) continue;
          for (const Perm::Cycle& rho : g.cycles()) {
            bool meets = std::any_of(rho.begin(), rho.end(), [&](const Atom& a) {
              return fdom.count(a) != 0;
            });
            if (!meets) continue;
            AtomSet merged_atoms = fdom;
            merged_atoms.insert(rho.begin(), rho.end());
            Perm merged_perm = Perm::cycle(
                {merged_atoms.begin(), merged_atoms.end()});
            std::vector<Perm::Cycle> remaining;
            for (const Perm::Cycle& cyc : g.cycles())
              if (cyc != rho) remaining.push_back(cyc);
            Perm rest = Perm::from_cycles(remaining);

            perms.erase(f);
            perms.erase(g);
            perms.insert(merged_perm);
            if (!rest.is_identity()) perms.insert(rest);
            merged = true;
            break;
          }
          if (merged) break;
        }
        if (merged) break;
      }
    }
  }

  std::vector<FixConstraint> out;
  for (const auto& [var, perms] : per_var)
    for (const Perm& p : perms) out.push_back(FixConstraint{p, var});
  return Context(nu, std::move(out));
}

FreshFixSplit fresh_fix_split(const Context& ctx, const Variable& x) {
  if (!ctx.normalized())
    throw NotNormalizedError("fresh_fix_split requires a normalized context");
  FreshFixSplit out;
  for (const FixConstraint& c : ctx.constraints()) {
    if (c.var != x) continue;
    if (pure_quantified(c.perm, ctx.nu_names()))
      out.fresh.push_back(c);
    else
      out.fix.push_back(c);
  }
  return out;
}

GroupSpec membership_group(const Context& ctx, const Variable& x) {
  FreshFixSplit parts = fresh_fix_split(ctx, x);
  GroupSpec spec;
  // Any swapping of nu-names is entailed, so all of them join the fresh
  // side even when vacuous in X's constraints.
  spec.fresh_atoms = ctx.nu_names();
  for (const FixConstraint& c : parts.fresh) {
    AtomSet dom = c.perm.domain();
    spec.fresh_atoms.insert(dom.begin(), dom.end());
  }
  for (const FixConstraint& c : parts.fix) spec.fix_generators.push_back(c.perm);
  return spec;
}

AtomSet atoms_of(const Context& ctx) {
  AtomSet out = ctx.nu_names();
  for (const FixConstraint& c : ctx.constraints()) {
    AtomSet dom = c.perm.domain();
    out.insert(dom.begin(), dom.end());
  }
  return out;
}

VarSet vars_of(const Context& ctx) {
  VarSet out;
  for (const FixConstraint& c : ctx.constraints()) out.insert(c.var);
  return out;
}

std::string to_string(const Context& ctx) {
  std::string out;
  if (!ctx.nu_names().empty()) {
    out += "new";
    for (const Atom& a : ctx.nu_names()) out += " " + a.str();
    out += " . ";
  }
  out += "{";
  bool first = true;
  for (const FixConstraint& c : ctx.constraints()) {
    if (!first) out += ", ";
    first = false;
    out += c.perm.str() + " fix " + c.var.name;
  }
  return out + "}";
}

}  // namespace nomc
