#pragma once

#include <compare>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nomc/perm.hpp"

namespace nomc {

enum class Theory { Empty, C };

struct SymbolInfo {
  std::size_t arity = 0;
  Theory theory = Theory::Empty;
};

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Declared term-formers with arity and equational theory. Commutative
/// symbols must be binary.
class Signature {
 public:
  void declare(const std::string& name, std::size_t arity, Theory theory);
  const SymbolInfo* find(const std::string& name) const;
  const std::map<std::string, SymbolInfo>& entries() const { return entries_; }

 private:
  std::map<std::string, SymbolInfo> entries_;
};

/// Immutable nominal term: atom, suspension pi.X, application or
/// abstraction. Suspensions carry their permutation in canonical form; an
/// identity suspension is the representation of a bare variable.
class Term {
 public:
  enum class Kind { Atom, Susp, App, Abs };

  static Term atom(Atom a);
  static Term var(Variable v);  // identity suspension
  static Term susp(Perm p, Variable v);
  static Term app(std::string symbol, Theory theory, std::vector<Term> args);
  static Term abs(Atom binder, Term body);

  Kind kind() const;

  const Atom& atom_value() const;
  const Perm& susp_perm() const;
  const Variable& susp_var() const;
  const std::string& app_symbol() const;
  Theory app_theory() const;
  const std::vector<Term>& app_args() const;
  const Atom& abs_binder() const;
  const Term& abs_body() const;

  bool operator==(const Term& other) const;
  std::strong_ordering operator<=>(const Term& other) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Finite variable-to-term map with the nu-quantified names of its image
/// attached. Identity bindings X -> X are dropped on insertion.
class Subst {
 public:
  Subst() = default;
  static Subst single(Variable v, Term t);

  void bind(Variable v, Term t);
  const Term* lookup(const Variable& v) const;
  bool is_identity() const { return map_.empty(); }
  const std::map<Variable, Term>& mapping() const { return map_; }

  const AtomSet& nu_names() const { return nu_names_; }
  void set_nu_names(AtomSet names) { nu_names_ = std::move(names); }

  /// Composition: apply *this first, then `next`.
  Subst then(const Subst& next) const;
  /// Restriction of the mapping to the given variables.
  Subst restricted(const VarSet& vars) const;

  bool operator==(const Subst& other) const { return map_ == other.map_; }

 private:
  std::map<Variable, Term> map_;
  AtomSet nu_names_;
};

Term perm_apply(const Perm& p, const Term& t);
Term subst_apply(const Subst& s, const Term& t);
std::size_t term_size(const Term& t);
bool is_ground(const Term& t);

AtomSet atoms_of(const Term& t);
VarSet vars_of(const Term& t);
AtomSet atoms_of(const Subst& s);
VarSet vars_of(const Subst& s);

std::string to_string(const Term& t);
std::string to_string(const Subst& s);

}  // namespace nomc
