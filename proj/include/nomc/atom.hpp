#pragma once

#include <compare>
#include <set>
#include <string>

namespace nomc {

/// Object-level name: a letter family plus a numeric index. "a" is
/// ("a", 0) and "c3" is ("c", 3). Index 0 prints as the bare family.
struct Atom {
  std::string family;
  unsigned index = 0;

  auto operator<=>(const Atom&) const = default;
  std::string str() const;
};

/// Meta-level unknown. Can be substituted but never abstracted.
struct Variable {
  std::string name;

  auto operator<=>(const Variable&) const = default;
};

using AtomSet = std::set<Atom>;
using VarSet = std::set<Variable>;

/// Family used for generated fresh names (c1, c2, ...).
inline constexpr const char* kFreshFamily = "c";

/// Least atom of the fresh family whose index lies strictly above every
/// index mentioned in `avoid`.
Atom fresh_atom(const AtomSet& avoid);

std::string to_string(const Atom& a);
std::string to_string(const Variable& v);

}  // namespace nomc
