#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nomc/groups.hpp"
#include "nomc/term.hpp"

namespace nomc {

class NotNormalizedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Primitive fixed-point constraint pi fix X. Ordered by variable first so
/// a context's constraint list groups per variable.
struct FixConstraint {
  Perm perm;
  Variable var;

  friend std::strong_ordering operator<=>(const FixConstraint& a,
                                          const FixConstraint& b) {
    if (auto c = a.var <=> b.var; c != 0) return c;
    return a.perm <=> b.perm;
  }
  friend bool operator==(const FixConstraint& a, const FixConstraint& b) {
    return (a <=> b) == 0;
  }
};

/// nu-quantified fixed-point context: a finite set of nu-quantified names
/// (vacuous ones retained) plus primitive fixed-point constraints.
/// Constraints are kept sorted and deduplicated; identity constraints are
/// dropped.
class Context {
 public:
  Context() = default;
  Context(AtomSet nu_names, std::vector<FixConstraint> constraints);

  const AtomSet& nu_names() const { return nu_names_; }
  const std::vector<FixConstraint>& constraints() const { return constraints_; }

  Context with_nu_name(const Atom& a) const;
  Context with_constraint(const FixConstraint& c) const;

  /// true once in (R1)/(R2) normal form.
  bool normalized() const { return normalized_; }

  bool operator==(const Context& other) const {
    return nu_names_ == other.nu_names_ && constraints_ == other.constraints_;
  }

 private:
  AtomSet nu_names_;
  std::vector<FixConstraint> constraints_;
  bool normalized_ = true;
};

/// Same names, only X's constraints.
Context restrict(const Context& ctx, const Variable& x);

/// Exhaustive (R1) splitting of every constraint along the nu-names,
/// followed by (R2) merges of fix-part cycles that meet a fresh-part
/// permutation of the same variable, iterated to the fixpoint.
Context normalize(const Context& ctx);

struct FreshFixSplit {
  std::vector<FixConstraint> fresh;  // permutations whose cycles all touch nu
  std::vector<FixConstraint> fix;    // permutations untouched by nu
};

/// Freshness / pure-fixed-point split of X's constraints. Requires a
/// normalized context.
FreshFixSplit fresh_fix_split(const Context& ctx, const Variable& x);

/// Membership domain for rule (var): Perm over the atoms of X's fresh part
/// plus every nu-name, composed with the group generated by X's fix part.
/// Requires a normalized context.
GroupSpec membership_group(const Context& ctx, const Variable& x);

/// The judgement ctx |- pi fix t, i.e. ctx |- pi.t = t. Defined in the
/// equivalence checker.
bool entails(const Context& ctx, const Perm& p, const Term& t,
             std::size_t group_cap = kDefaultGroupCap);

AtomSet atoms_of(const Context& ctx);
VarSet vars_of(const Context& ctx);
std::string to_string(const Context& ctx);

}  // namespace nomc
