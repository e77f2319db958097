#pragma once

#include <stdexcept>
#include <vector>

#include "nomc/perm.hpp"

namespace nomc {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// Raised when a generated-group closure grows past the configured element
/// budget; callers may retry with a larger cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroupSpecError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Disjoint-cycle classification of a permutation against a set of
/// nu-quantified atoms: `quantified` collects the cycles mentioning at
/// least one quantified atom, `unquantified` the rest. Their composition
/// (in either order) is the original permutation.
struct CycleSplit {
  Perm quantified;
  Perm unquantified;
};

CycleSplit split(const Perm& p, const AtomSet& quantified);

/// Factored membership domain Perm(fresh_atoms) o <fix_generators>. The
/// generators' domains must be disjoint from fresh_atoms (which context
/// normalisation guarantees).
struct GroupSpec {
  AtomSet fresh_atoms;
  std::vector<Perm> fix_generators;
};

/// true iff p lies in the subgroup generated by `gens`, decided by
/// breadth-first closure (memoised per generator set). Throws
/// CapExceededError when the closure exceeds `cap` elements.
bool subgroup_member(const Perm& p, const std::vector<Perm>& gens,
                     std::size_t cap = kDefaultGroupCap);

/// true iff p is in Perm(fresh_atoms) o <fix_generators>. Every cycle of p
/// must lie entirely inside or entirely outside fresh_atoms; the outside
/// part is then tested against the generated subgroup. Throws
/// GroupSpecError if the spec violates its disjointness invariant.
bool coset_product_member(const Perm& p, const GroupSpec& spec,
                          std::size_t cap = kDefaultGroupCap);

}  // namespace nomc
