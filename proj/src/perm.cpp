#include "nomc/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace nomc {

namespace {

// Canonical cycle list from an image map: walk atoms in ascending order so
// every cycle is discovered at, and rotated to, its least atom.
std::vector<Perm::Cycle> canonical_cycles(const std::map<Atom, Atom>& images) {
  std::vector<Perm::Cycle> out;
  AtomSet seen;
  for (const auto& [start, _] : images) {
    if (seen.count(start)) continue;
    Perm::Cycle cyc;
    Atom cur = start;
    do {
      cyc.push_back(cur);
      seen.insert(cur);
      auto it = images.find(cur);
      cur = (it == images.end()) ? cur : it->second;
    } while (cur != start);
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

Perm Perm::swap(const Atom& a, const Atom& b) { return cycle({a, b}); }

Perm Perm::cycle(const Cycle& atoms) {
  if (atoms.size() < 2) return Perm{};
  std::map<Atom, Atom> images;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const Atom& from = atoms[i];
    const Atom& to = atoms[(i + 1) % atoms.size()];
    if (!images.emplace(from, to).second)
      throw std::invalid_argument("repeated atom in cycle: " + from.str());
  }
  return from_map(images);
}

Perm Perm::from_map(const std::map<Atom, Atom>& images) {
  std::map<Atom, Atom> moved;
  AtomSet range;
  for (const auto& [a, b] : images) {
    if (a != b) moved.emplace(a, b);
  }
  for (const auto& [a, b] : moved) {
    if (!range.insert(b).second)
      throw std::invalid_argument("image map is not injective");
    if (!moved.count(b))
      throw std::invalid_argument("image map is not a bijection on its domain");
  }
  Perm p;
  p.cycles_ = canonical_cycles(moved);
  return p;
}

Perm Perm::from_cycles(const std::vector<Cycle>& cycles) {
  Perm acc;
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
    acc = Perm::cycle(*it).compose(acc);
  return acc;
}

Atom Perm::apply(const Atom& a) const {
  for (const Cycle& cyc : cycles_) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] == a) return cyc[(i + 1) % cyc.size()];
    }
  }
  return a;
}

AtomSet Perm::domain() const {
  AtomSet out;
  for (const Cycle& cyc : cycles_) out.insert(cyc.begin(), cyc.end());
  return out;
}

Perm Perm::compose(const Perm& rhs) const {
  std::map<Atom, Atom> images;
  for (const Atom& a : domain()) images[a] = apply(rhs.apply(a));
  for (const Atom& a : rhs.domain())
    if (!images.count(a)) images[a] = apply(rhs.apply(a));
  return from_map(images);
}

Perm Perm::inverse() const {
  Perm p;
  p.cycles_.reserve(cycles_.size());
  for (const Cycle& cyc : cycles_) {
    // Reversing a cycle inverts it; the least atom stays in front.
    Cycle rev;
    rev.push_back(cyc.front());
    rev.insert(rev.end(), cyc.rbegin(), cyc.rend() - 1);
    p.cycles_.push_back(std::move(rev));
  }
  return p;
}

Perm Perm::conjugate(const Perm& rho) const {
  std::map<Atom, Atom> images;
  for (const Cycle& cyc : cycles_) {
    for (std::size_t i = 0; i < cyc.size(); ++i)
      images[rho.apply(cyc[i])] = rho.apply(cyc[(i + 1) % cyc.size()]);
  }
  return from_map(images);
}

std::string Perm::str() const {
  if (cycles_.empty()) return "id";
  std::string out;
  for (const Cycle& cyc : cycles_) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += cyc[i].str();
    }
    out += ')';
  }
  return out;
}

AtomSet atoms_of(const Perm& p) { return p.domain(); }

std::string to_string(const Perm& p) { return p.str(); }

}  // namespace nomc
