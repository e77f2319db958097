#include "nomc/term.hpp"

#include <variant>

namespace nomc {

void Signature::declare(const std::string& name, std::size_t arity,
                        Theory theory) {
  if (theory == Theory::C && arity != 2)
    throw SignatureError("commutative symbol must be binary: " + name);
  auto [it, inserted] = entries_.emplace(name, SymbolInfo{arity, theory});
  if (!inserted &&
      (it->second.arity != arity || it->second.theory != theory))
    throw SignatureError("conflicting redeclaration of symbol: " + name);
}

const SymbolInfo* Signature::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

struct AtomNode {
  Atom atom;
};
struct SuspNode {
  Perm perm;
  Variable var;
};
struct AppNode {
  std::string symbol;
  Theory theory;
  std::vector<Term> args;
};
struct AbsNode {
  Atom binder;
  Term body;
};

}  // namespace

struct Term::Node {
  std::variant<AtomNode, SuspNode, AppNode, AbsNode> v;
};

Term Term::atom(Atom a) {
  return Term(std::make_shared<const Node>(Node{AtomNode{std::move(a)}}));
}

Term Term::var(Variable v) { return susp(Perm{}, std::move(v)); }

Term Term::susp(Perm p, Variable v) {
  return Term(std::make_shared<const Node>(
      Node{SuspNode{std::move(p), std::move(v)}}));
}

Term Term::app(std::string symbol, Theory theory, std::vector<Term> args) {
  if (theory == Theory::C && args.size() != 2)
    throw SignatureError("commutative application must be binary: " + symbol);
  return Term(std::make_shared<const Node>(
      Node{AppNode{std::move(symbol), theory, std::move(args)}}));
}

Term Term::abs(Atom binder, Term body) {
  return Term(std::make_shared<const Node>(
      Node{AbsNode{std::move(binder), std::move(body)}}));
}

Term::Kind Term::kind() const {
  switch (node_->v.index()) {
    case 0: return Kind::Atom;
    case 1: return Kind::Susp;
    case 2: return Kind::App;
    default: return Kind::Abs;
  }
}

const Atom& Term::atom_value() const { return std::get<AtomNode>(node_->v).atom; }
const Perm& Term::susp_perm() const { return std::get<SuspNode>(node_->v).perm; }
const Variable& Term::susp_var() const { return std::get<SuspNode>(node_->v).var; }
const std::string& Term::app_symbol() const { return std::get<AppNode>(node_->v).symbol; }
Theory Term::app_theory() const { return std::get<AppNode>(node_->v).theory; }
const std::vector<Term>& Term::app_args() const { return std::get<AppNode>(node_->v).args; }
const Atom& Term::abs_binder() const { return std::get<AbsNode>(node_->v).binder; }
const Term& Term::abs_body() const { return std::get<AbsNode>(node_->v).body; }

std::strong_ordering Term::operator<=>(const Term& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (auto c = kind() <=> other.kind(); c != 0) return c;
  switch (kind()) {
    case Kind::Atom:
      return atom_value() <=> other.atom_value();
    case Kind::Susp:
      if (auto c = susp_var() <=> other.susp_var(); c != 0) return c;
      return susp_perm() <=> other.susp_perm();
    case Kind::App: {
      if (auto c = app_symbol() <=> other.app_symbol(); c != 0) return c;
      const auto& xs = app_args();
      const auto& ys = other.app_args();
      if (auto c = xs.size() <=> ys.size(); c != 0) return c;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (auto c = xs[i] <=> ys[i]; c != 0) return c;
      return std::strong_ordering::equal;
    }
    case Kind::Abs:
      if (auto c = abs_binder() <=> other.abs_binder(); c != 0) return c;
      return abs_body() <=> other.abs_body();
  }
  return std::strong_ordering::equal;
}

bool Term::operator==(const Term& other) const {
  return (*this <=> other) == 0;
}

Subst Subst::single(Variable v, Term t) {
  Subst s;
  s.bind(std::move(v), std::move(t));
  return s;
}

void Subst::bind(Variable v, Term t) {
  if (t.kind() == Term::Kind::Susp && t.susp_perm().is_identity() &&
      t.susp_var() == v) {
    map_.erase(v);
    return;
  }
  map_.insert_or_assign(std::move(v), std::move(t));
}

const Term* Subst::lookup(const Variable& v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

Subst Subst::then(const Subst& next) const {
  Subst out;
  for (const auto& [v, t] : map_) out.bind(v, subst_apply(next, t));
  for (const auto& [v, t] : next.map_)
    if (!map_.count(v)) out.bind(v, t);
  AtomSet names = nu_names_;
  names.insert(next.nu_names_.begin(), next.nu_names_.end());
  out.set_nu_names(std::move(names));
  return out;
}

Subst Subst::restricted(const VarSet& vars) const {
  Subst out;
  for (const auto& [v, t] : map_)
    if (vars.count(v)) out.bind(v, t);
  out.set_nu_names(nu_names_);
  return out;
}

Term perm_apply(const Perm& p, const Term& t) {
  if (p.is_identity()) return t;
  switch (t.kind()) {
    case Term::Kind::Atom:
      return Term::atom(p.apply(t.atom_value()));
    case Term::Kind::Susp:
      return Term::susp(p.compose(t.susp_perm()), t.susp_var());
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.app_args().size());
      for (const Term& arg : t.app_args()) args.push_back(perm_apply(p, arg));
      return Term::app(t.app_symbol(), t.app_theory(), std::move(args));
    }
    case Term::Kind::Abs:
      return Term::abs(p.apply(t.abs_binder()), perm_apply(p, t.abs_body()));
  }
  return t;
}

Term subst_apply(const Subst& s, const Term& t) {
  if (s.is_identity()) return t;
  switch (t.kind()) {
    case Term::Kind::Atom:
      return t;
    case Term::Kind::Susp:
      if (const Term* image = s.lookup(t.susp_var()))
        return perm_apply(t.susp_perm(), *image);
      return t;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.app_args().size());
      for (const Term& arg : t.app_args()) args.push_back(subst_apply(s, arg));
      return Term::app(t.app_symbol(), t.app_theory(), std::move(args));
    }
    case Term::Kind::Abs:
      return Term::abs(t.abs_binder(), subst_apply(s, t.abs_body()));
  }
  return t;
}

std::size_t term_size(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Atom:
    case Term::Kind::Susp:
      return 1;
    case Term::Kind::App: {
      std::size_t n = 1;
      for (const Term& arg : t.app_args()) n += term_size(arg);
      return n;
    }
    case Term::Kind::Abs:
      return 1 + term_size(t.abs_body());
  }
  return 0;
}

bool is_ground(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      return true;
    case Term::Kind::Susp:
      return false;
    case Term::Kind::App:
      for (const Term& arg : t.app_args())
        if (!is_ground(arg)) return false;
      return true;
    case Term::Kind::Abs:
      return is_ground(t.abs_body());
  }
  return true;
}

namespace {

void collect_atoms(const Term& t, AtomSet& out) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      out.insert(t.atom_value());
      return;
    case Term::Kind::Susp: {
      AtomSet dom = t.susp_perm().domain();
      out.insert(dom.begin(), dom.end());
      return;
    }
    case Term::Kind::App:
      for (const Term& arg : t.app_args()) collect_atoms(arg, out);
      return;
    case Term::Kind::Abs:
      out.insert(t.abs_binder());
      collect_atoms(t.abs_body(), out);
      return;
  }
}

void collect_vars(const Term& t, VarSet& out) {
  switch (t.kind()) {
    case Term::Kind::Susp:
      out.insert(t.susp_var());
      return;
    case Term::Kind::App:
      for (const Term& arg : t.app_args()) collect_vars(arg, out);
      return;
    case Term::Kind::Abs:
      collect_vars(t.abs_body(), out);
      return;
    default:
      return;
  }
}

}  // namespace

AtomSet atoms_of(const Term& t) {
  AtomSet out;
  collect_atoms(t, out);
  return out;
}

VarSet vars_of(const Term& t) {
  VarSet out;
  collect_vars(t, out);
  return out;
}

AtomSet atoms_of(const Subst& s) {
  AtomSet out = s.nu_names();
  for (const auto& [_, t] : s.mapping()) collect_atoms(t, out);
  return out;
}

VarSet vars_of(const Subst& s) {
  VarSet out;
  for (const auto& [v, t] : s.mapping()) {
    out.insert(v);
    collect_vars(t, out);
  }
  return out;
}

std::string to_string(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      return t.atom_value().str();
    case Term::Kind::Susp:
      if (t.susp_perm().is_identity()) return t.susp_var().name;
      return t.susp_perm().str() + "." + t.susp_var().name;
    case Term::Kind::App: {
      std::string out = t.app_symbol() + "(";
      const auto& args = t.app_args();
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ", ";
        out += to_string(args[i]);
      }
      return out + ")";
    }
    case Term::Kind::Abs:
      return "[" + t.abs_binder().str() + "]" + to_string(t.abs_body());
  }
  return {};
}

std::string to_string(const Subst& s) {
  if (s.is_identity()) return "Id";
  std::string out = "[";
  bool first = true;
  for (const auto& [v, t] : s.mapping()) {
    if (!first) out += ", ";
    first = false;
    out += v.name + " -> " + to_string(t);
  }
  return out + "]";
}

}  // namespace nomc
