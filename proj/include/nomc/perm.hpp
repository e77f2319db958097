#pragma once

#include <map>
#include <string>
#include <vector>

#include "nomc/atom.hpp"

namespace nomc {

/// Finite permutation of atoms kept in canonical disjoint-cycle form:
/// cycles sorted by their least atom, each cycle rotated to start at its
/// least atom, fixed atoms absent. Two permutations equal as functions
/// therefore have identical representations, so equality and ordering are
/// representation-based.
class Perm {
 public:
  using Cycle = std::vector<Atom>;

  Perm() = default;  // identity

  static Perm swap(const Atom& a, const Atom& b);
  /// Single cycle a1 -> a2 -> ... -> an -> a1. Throws std::invalid_argument
  /// on repeated atoms.
  static Perm cycle(const Cycle& atoms);
  /// Canonicalises an explicit (finite, bijective) image map.
  static Perm from_map(const std::map<Atom, Atom>& images);
  /// Product of possibly overlapping cycles, rightmost applied first.
  static Perm from_cycles(const std::vector<Cycle>& cycles);

  bool is_identity() const { return cycles_.empty(); }
  Atom apply(const Atom& a) const;
  AtomSet domain() const;

  /// Function composition, `rhs` applied first.
  Perm compose(const Perm& rhs) const;
  Perm inverse() const;
  /// rho o *this o rho^-1: relabels every atom of the cycles through rho.
  Perm conjugate(const Perm& rho) const;

  const std::vector<Cycle>& cycles() const { return cycles_; }

  auto operator<=>(const Perm&) const = default;
  std::string str() const;

 private:
  std::vector<Cycle> cycles_;
};

AtomSet atoms_of(const Perm& p);
std::string to_string(const Perm& p);

}  // namespace nomc
