#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nomc/equiv.hpp"

namespace nomc {

class NotReducedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct EqConstraint {
  Term lhs;
  Term rhs;

  friend std::strong_ordering operator<=>(const EqConstraint& a,
                                          const EqConstraint& b) {
    if (auto c = a.lhs <=> b.lhs; c != 0) return c;
    return a.rhs <=> b.rhs;
  }
  friend bool operator==(const EqConstraint& a, const EqConstraint& b) {
    return (a <=> b) == 0;
  }
};

struct Binding {
  Variable var;
  Term term;
};

/// One branch of a C-unification search: constraints under a nu-binder,
/// plus the instantiations accumulated so far (applied first-to-last).
/// Constraints form a worklist; simplification consumes the first
/// non-reduced entry and splices its successors back in its place.
/// `generated` records which nu-names were created by (ab) steps (as
/// opposed to written in the problem); instantiation keeps those names
/// stable by emitting freshness residues when they cross into another
/// variable's suspension.
struct UnifProblem {
  AtomSet nu_names;
  std::vector<EqConstraint> constraints;
  std::vector<Binding> pending;
  AtomSet generated;
};

/// Supplies generated names, strictly above every index seen so far; shared
/// across all branches of one search so sibling branches never reuse a name.
class FreshSource {
 public:
  explicit FreshSource(unsigned next_index = 1) : next_(next_index) {}
  static FreshSource covering(const UnifProblem& p);

  Atom next() { return Atom{kFreshFamily, next_++}; }

 private:
  unsigned next_;
};

/// Finite set of independent branches, as created by commutative
/// decomposition.
using ExtendedProblem = std::vector<UnifProblem>;

struct StepResult {
  bool normal = false;                // no rule applies anywhere
  const char* rule = nullptr;         // "del","f","fC","abs","ab","var","inst1","inst2"
  std::vector<UnifProblem> branches;  // one successor, or two for "fC"
};

/// Applies exactly one simplification rule to the first non-reduced
/// constraint, or reports the problem Normal.
StepResult step(const UnifProblem& p, FreshSource& fresh);
StepResult step(const UnifProblem& p);

bool is_reduced(const EqConstraint& c);

enum class ReducedKind {
  ConsistentFixedPoint,
  AtomClash,
  HeadClash,
  ConstructorClash,
  Occurs,
};

const char* reduced_kind_name(ReducedKind k);

/// Classification of a reduced constraint; throws NotReducedError when a
/// simplification rule still applies.
ReducedKind classify_reduced(const EqConstraint& c);

/// Termination measure: (number of distinct variables, multiset of sizes of
/// the constraints that are not fixed-point equations), compared
/// lexicographically with the multiset extension on the second component.
struct ProblemMeasure {
  std::size_t var_count = 0;
  std::vector<std::size_t> sizes;  // sorted descending
};

ProblemMeasure measure(const UnifProblem& p);
bool lex_greater(const ProblemMeasure& a, const ProblemMeasure& b);
std::string to_string(const ProblemMeasure& m);

/// A C-unifier: normalized fixed-point context plus nu-substitution.
struct Solution {
  Context ctx;
  Subst subst;
};

VarSet vars_of(const Solution& s);
std::string to_string(const Solution& s);

struct SolveOptions {
  /// Element budget for the group closures behind solution extraction.
  std::size_t group_cap = kDefaultGroupCap;
  /// Invoked on every simplification step with the predecessor, the rule
  /// tag and one successor (twice for a branching step).
  std::function<void(const UnifProblem&, const char*, const UnifProblem&)>
      on_step;
  /// Invoked once per normal-form branch discarded as inconsistent, with
  /// the classification of its first inconsistent constraint.
  std::function<void(const UnifProblem&, ReducedKind)> on_dead_branch;
};

/// Exhausts the simplification relation and extracts the solutions of every
/// consistent normal-form branch. The result is a complete set of
/// C-unifiers, deduplicated and ordered by canonical form; empty iff the
/// problem is unsolvable.
std::vector<Solution> solve(const UnifProblem& p, const SolveOptions& opts = {});

/// Instantiation order: true iff s2 extends s1's nu-names and delta maps
/// s1's context and substitution into consequences of s2's, i.e.
/// ctx2 |- ctx1 delta and ctx2 |- X subst2 = X subst1 delta for every
/// variable of either solution.
bool check_instance(const Solution& s1, const Solution& s2, const Subst& delta,
                    std::size_t group_cap = kDefaultGroupCap);

/// Bounded search for a delta witnessing check_instance(s1, s2, delta).
/// Candidate images are built from the atoms, variables and symbols of the
/// two solutions plus suspensions with permutations from their contexts, up
/// to the given term depth.
std::optional<Subst> find_instance_witness(const Solution& s1,
                                           const Solution& s2,
                                           std::size_t depth_bound = 2,
                                           std::size_t group_cap = kDefaultGroupCap);

std::string to_string(const EqConstraint& c);
std::string to_string(const UnifProblem& p);

}  // namespace nomc
