#include "nomc/groups.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace nomc {

CycleSplit split(const Perm& p, const AtomSet& quantified) {
  std::vector<Perm::Cycle> in, out;
  for (const Perm::Cycle& cyc : p.cycles()) {
    bool mentions = std::any_of(cyc.begin(), cyc.end(), [&](const Atom& a) {
      return quantified.count(a) != 0;
    });
    (mentions ? in : out).push_back(cyc);
  }
  // Cycles stay disjoint, so the parts are already canonical.
  return CycleSplit{Perm::from_cycles(in), Perm::from_cycles(out)};
}

namespace {

using Closure = std::set<Perm>;

std::vector<Perm> closure_key(const std::vector<Perm>& gens) {
  std::vector<Perm> key;
  for (const Perm& g : gens)
    if (!g.is_identity()) key.push_back(g);
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  return key;
}

// In a finite group the sub-semigroup generated by a set equals the
// subgroup it generates, so right-multiplying by the generators starting
// from id enumerates all of <gens>.
std::shared_ptr<const Closure> compute_closure(const std::vector<Perm>& gens,
                                               std::size_t cap) {
  auto closure = std::make_shared<Closure>();
  closure->insert(Perm{});
  std::vector<Perm> frontier{Perm{}};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& elem : frontier) {
      for (const Perm& g : gens) {
        Perm prod = elem.compose(g);
        if (closure->insert(prod).second) {
          if (closure->size() > cap)
            throw CapExceededError("group closure exceeded cap of " +
                                   std::to_string(cap) + " elements");
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  return closure;
}

std::shared_ptr<const Closure> closure_of(const std::vector<Perm>& gens,
                                          std::size_t cap) {
  static std::mutex mu;
  static std::map<std::vector<Perm>, std::shared_ptr<const Closure>> memo;

  std::vector<Perm> key = closure_key(gens);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto closure = compute_closure(key, cap);
  {
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::move(key), closure);
  }
  return closure;
}

}  // namespace

bool subgroup_member(const Perm& p, const std::vector<Perm>& gens,
                     std::size_t cap) {
  if (p.is_identity()) return true;
  return closure_of(gens, cap)->count(p) != 0;
}

bool coset_product_member(const Perm& p, const GroupSpec& spec,
                          std::size_t cap) {
  for (const Perm& g : spec.fix_generators) {
    for (const Atom& a : g.domain()) {
      if (spec.fresh_atoms.count(a))
        throw GroupSpecError("fix generator domain meets fresh atoms: " +
                             a.str());
    }
  }
  // A product h o k with disjoint h, k has every cycle inside exactly one
  // factor, so p splits along fresh_atoms or is not in the product at all.
  std::vector<Perm::Cycle> outside;
  for (const Perm::Cycle& cyc : p.cycles()) {
    std::size_t inside = std::count_if(
        cyc.begin(), cyc.end(),
        [&](const Atom& a) { return spec.fresh_atoms.count(a) != 0; });
    if (inside == cyc.size()) continue;
    if (inside != 0) return false;  // cycle straddles the fresh atoms
    outside.push_back(cyc);
  }
  return subgroup_member(Perm::from_cycles(outside), spec.fix_generators, cap);
}

}  // namespace nomc
