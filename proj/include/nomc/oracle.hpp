#pragma once

#include <stdexcept>

#include "nomc/context.hpp"

namespace nomc {

class NonGroundError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Brute-force alpha-C equality of ground terms: structural recursion with
/// both pairings tried at commutative applications and one fresh-name swap
/// at unequal binders. Kept independent of the group and context machinery
/// so it can second-guess the main checker.
bool ground_alpha_c_equal(const Term& g1, const Term& g2);

/// Free names of a ground term: fn(a) = {a}, unions under applications,
/// fn([a]g) = fn(g) minus {a}.
AtomSet free_names(const Term& g);

/// Grounding substitution: each variable maps to a fresh term-former d_X
/// applied, in order, to the atoms of ctx and query that are neither
/// nu-quantified nor touched by X's fresh-part permutations. The d_X
/// symbols are declared into `scratch` when given. Requires a normalized
/// context.
Subst grounding_substitution(const Context& ctx, const VarSet& vars,
                             const AtomSet& query_atoms,
                             Signature* scratch = nullptr);

}  // namespace nomc
