#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nomc/context.hpp"

namespace nomc {

/// One derivation rule per proof node.
enum class Rule {
  AtomRefl,
  Var,
  Fun,
  FunCAligned,
  FunCSwapped,
  AbsSame,
  AbsDiff,
};

const char* rule_name(Rule r);

struct Judgement {
  Context ctx;
  Term lhs;
  Term rhs;
};

std::string to_string(const Judgement& j);

struct ProofTree {
  Rule rule;
  Judgement conclusion;
  std::vector<ProofTree> premises;
  std::optional<Atom> fresh;  // AbsDiff: the generated name
};

struct CheckOptions {
  std::size_t group_cap = kDefaultGroupCap;
};

/// Decides ctx |- lhs = rhs modulo alpha and commutativity. The context is
/// re-normalized on entry. Throws SignatureError on applications of the
/// same symbol with mismatched arity or theory, CapExceededError from the
/// group layer.
bool check(const Context& ctx, const Term& lhs, const Term& rhs,
           const CheckOptions& opts = {});

/// As check, but returns the derivation when one exists.
std::optional<ProofTree> prove(const Context& ctx, const Term& lhs,
                               const Term& rhs, const CheckOptions& opts = {});

/// check(ctx, rho.lhs, rho.rhs); first-class form of the equivariance
/// property.
bool check_equivariant(const Context& ctx, const Perm& rho, const Term& lhs,
                       const Term& rhs, const CheckOptions& opts = {});

/// Indented one-node-per-line rendering of a derivation.
std::string to_text(const ProofTree& proof);

}  // namespace nomc
