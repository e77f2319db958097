#include "nomc/atom.hpp"

namespace nomc {

std::string Atom::str() const {
  if (index == 0) return family;
  return family + std::to_string(index);
}

Atom fresh_atom(const AtomSet& avoid) {
  unsigned top = 0;
  for (const Atom& a : avoid) top = std::max(top, a.index);
  return Atom{kFreshFamily, top + 1};
}

std::string to_string(const Atom& a) { return a.str(); }

std::string to_string(const Variable& v) { return v.name; }

}  // namespace nomc
