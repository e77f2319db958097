#include "nomc/unify.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace nomc {

namespace {

bool is_bare_var(const Term& t, const Variable& v) {
  return t.kind() == Term::Kind::Susp && t.susp_perm().is_identity() &&
         t.susp_var() == v;
}

// pi.X =? X with pi != id: the terminal consistent form.
bool is_fixed_point(const EqConstraint& c) {
  return c.lhs.kind() == Term::Kind::Susp && !c.lhs.susp_perm().is_identity() &&
         is_bare_var(c.rhs, c.lhs.susp_var());
}

bool occurs(const Variable& v, const Term& t) { return vars_of(t).count(v) != 0; }

}  // namespace

bool is_reduced(const EqConstraint& c) {
  if (c.lhs == c.rhs) return false;  // (del)
  const bool lsusp = c.lhs.kind() == Term::Kind::Susp;
  const bool rsusp = c.rhs.kind() == Term::Kind::Susp;
  if (lsusp && rsusp) {
    if (c.lhs.susp_var() == c.rhs.susp_var())
      return c.rhs.susp_perm().is_identity();  // else (var)
    return false;                              // (inst1)
  }
  if (lsusp) return occurs(c.lhs.susp_var(), c.rhs);  // else (inst1)
  if (rsusp) return occurs(c.rhs.susp_var(), c.lhs);  // else (inst2)
  if (c.lhs.kind() != c.rhs.kind()) return true;      // constructor clash
  switch (c.lhs.kind()) {
    case Term::Kind::Atom:
      return true;  // distinct atoms
    case Term::Kind::App:
      if (c.lhs.app_symbol() != c.rhs.app_symbol()) return true;
      return c.lhs.app_args().size() != c.rhs.app_args().size();
    case Term::Kind::Abs:
      return false;  // ([a]) or (ab)
    default:
      return true;
  }
}

const char* reduced_kind_name(ReducedKind k) {
  switch (k) {
    case ReducedKind::ConsistentFixedPoint: return "FixedPoint";
    case ReducedKind::AtomClash: return "AtomClash";
    case ReducedKind::HeadClash: return "HeadClash";
    case ReducedKind::ConstructorClash: return "ConstructorClash";
    case ReducedKind::Occurs: return "Occurs";
  }
  return "?";
}

ReducedKind classify_reduced(const EqConstraint& c) {
  if (!is_reduced(c))
    throw NotReducedError("constraint is not reduced: " + to_string(c));
  if (is_fixed_point(c)) return ReducedKind::ConsistentFixedPoint;
  const bool lsusp = c.lhs.kind() == Term::Kind::Susp;
  const bool rsusp = c.rhs.kind() == Term::Kind::Susp;
  if (lsusp || rsusp) return ReducedKind::Occurs;
  if (c.lhs.kind() != c.rhs.kind()) return ReducedKind::ConstructorClash;
  if (c.lhs.kind() == Term::Kind::Atom) return ReducedKind::AtomClash;
  return ReducedKind::HeadClash;
}

FreshSource FreshSource::covering(const UnifProblem& p) {
  AtomSet avoid = p.nu_names;
  for (const EqConstraint& c : p.constraints) {
    AtomSet more = atoms_of(c.lhs);
    avoid.insert(more.begin(), more.end());
    more = atoms_of(c.rhs);
    avoid.insert(more.begin(), more.end());
  }
  for (const Binding& b : p.pending) {
    AtomSet more = atoms_of(b.term);
    avoid.insert(more.begin(), more.end());
  }
  return FreshSource(fresh_atom(avoid).index);
}

namespace {

// Successors replace the consumed constraint in place; decomposition pairs
// are spliced last-argument-first so the worklist behaves like a stack.
UnifProblem splice(const UnifProblem& p, std::size_t at,
                   std::vector<EqConstraint> replacement) {
  UnifProblem out = p;
  out.constraints.erase(out.constraints.begin() + static_cast<long>(at));
  std::reverse(replacement.begin(), replacement.end());
  out.constraints.insert(out.constraints.begin() + static_cast<long>(at),
                         replacement.begin(), replacement.end());
  return out;
}

// Stability scan of a binding image: a generated name must stay freely
// renameable in every instance of the image. A suspension whose permutation
// maps a non-generated atom p onto a generated name needs p fresh for the
// suspended variable (recorded as a residue); a free bare occurrence of a
// generated name can never be renamed away and poisons the branch. Atoms
// bound by an abstraction on the path are exempt.
void stability_scan(const Term& u, const AtomSet& generated, AtomSet& bound,
                    std::set<std::pair<Atom, Variable>>& residues,
                    AtomSet& poisoned) {
  switch (u.kind()) {
    case Term::Kind::Atom: {
      const Atom& a = u.atom_value();
      if (generated.count(a) && !bound.count(a)) poisoned.insert(a);
      return;
    }
    case Term::Kind::Susp: {
      for (const Perm::Cycle& cyc : u.susp_perm().cycles()) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
          const Atom& p = cyc[i];
          const Atom& q = cyc[(i + 1) % cyc.size()];
          if (generated.count(q) && !bound.count(q) && !generated.count(p))
            residues.insert({p, u.susp_var()});
        }
      }
      return;
    }
    case Term::Kind::App:
      for (const Term& arg : u.app_args())
        stability_scan(arg, generated, bound, residues, poisoned);
      return;
    case Term::Kind::Abs: {
      bool added = bound.insert(u.abs_binder()).second;
      stability_scan(u.abs_body(), generated, bound, residues, poisoned);
      if (added) bound.erase(u.abs_binder());
      return;
    }
  }
}

UnifProblem instantiate(const UnifProblem& p, std::size_t at,
                        const Variable& var, const Term& image,
                        FreshSource& fresh) {
  UnifProblem out;
  out.nu_names = p.nu_names;
  out.generated = p.generated;
  out.pending = p.pending;
  out.pending.push_back(Binding{var, image});
  Subst theta = Subst::single(var, image);
  out.constraints.reserve(p.constraints.size() - 1);
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    if (i == at) continue;
    out.constraints.push_back(EqConstraint{
        subst_apply(theta, p.constraints[i].lhs),
        subst_apply(theta, p.constraints[i].rhs)});
  }

  std::set<std::pair<Atom, Variable>> residues;
  AtomSet poisoned, bound;
  stability_scan(image, p.generated, bound, residues, poisoned);
  if (!residues.empty() || !poisoned.empty()) {
    Atom guard = fresh.next();
    out.nu_names.insert(guard);
    out.generated.insert(guard);
    for (const auto& [atom, w] : residues)
      out.constraints.push_back(EqConstraint{
          Term::susp(Perm::swap(atom, guard), w), Term::var(w)});
    for (const Atom& a : poisoned)
      out.constraints.push_back(
          EqConstraint{Term::atom(guard), Term::atom(a)});
  }
  return out;
}

}  // namespace

StepResult step(const UnifProblem& p, FreshSource& fresh) {
  std::size_t at = 0;
  while (at < p.constraints.size() && is_reduced(p.constraints[at])) ++at;
  if (at == p.constraints.size()) return StepResult{true, nullptr, {}};

  const EqConstraint& c = p.constraints[at];
  const Term& l = c.lhs;
  const Term& r = c.rhs;

  if (l == r) return StepResult{false, "del", {splice(p, at, {})}};

  const bool lsusp = l.kind() == Term::Kind::Susp;
  const bool rsusp = r.kind() == Term::Kind::Susp;

  if (lsusp && rsusp && l.susp_var() == r.susp_var()) {
    // (var): pi.X =? pi'.X with pi' != id.
    Perm offset = r.susp_perm().inverse().compose(l.susp_perm());
    EqConstraint rewritten{Term::susp(offset, l.susp_var()),
                           Term::var(l.susp_var())};
    return StepResult{false, "var", {splice(p, at, {rewritten})}};
  }
  if (lsusp && !occurs(l.susp_var(), r)) {
    Term image = perm_apply(l.susp_perm().inverse(), r);
    return StepResult{
        false, "inst1", {instantiate(p, at, l.susp_var(), image, fresh)}};
  }
  if (rsusp && !occurs(r.susp_var(), l)) {
    Term image = perm_apply(r.susp_perm().inverse(), l);
    return StepResult{
        false, "inst2", {instantiate(p, at, r.susp_var(), image, fresh)}};
  }

  if (l.kind() == Term::Kind::App) {
    if (l.app_theory() == Theory::C) {
      std::vector<EqConstraint> aligned{{l.app_args()[0], r.app_args()[0]},
                                        {l.app_args()[1], r.app_args()[1]}};
      std::vector<EqConstraint> swapped{{l.app_args()[0], r.app_args()[1]},
                                        {l.app_args()[1], r.app_args()[0]}};
      return StepResult{false,
                        "fC",
                        {splice(p, at, std::move(aligned)),
                         splice(p, at, std::move(swapped))}};
    }
    std::vector<EqConstraint> pairs;
    pairs.reserve(l.app_args().size());
    for (std::size_t i = 0; i < l.app_args().size(); ++i)
      pairs.push_back(EqConstraint{l.app_args()[i], r.app_args()[i]});
    return StepResult{false, "f", {splice(p, at, std::move(pairs))}};
  }

  // Abstractions: same or different binder.
  const Atom& a = l.abs_binder();
  const Atom& b = r.abs_binder();
  if (a == b) {
    return StepResult{
        false, "abs",
        {splice(p, at, {EqConstraint{l.abs_body(), r.abs_body()}})}};
  }
  Atom c1 = fresh.next();
  UnifProblem out = splice(
      p, at,
      {EqConstraint{perm_apply(Perm::swap(a, c1), l.abs_body()),
                    perm_apply(Perm::swap(b, c1), r.abs_body())}});
  out.nu_names.insert(c1);
  out.generated.insert(c1);
  return StepResult{false, "ab", {std::move(out)}};
}

StepResult step(const UnifProblem& p) {
  FreshSource fresh = FreshSource::covering(p);
  return step(p, fresh);
}

ProblemMeasure measure(const UnifProblem& p) {
  ProblemMeasure m;
  VarSet vars;
  for (const EqConstraint& c : p.constraints) {
    VarSet more = vars_of(c.lhs);
    vars.insert(more.begin(), more.end());
    more = vars_of(c.rhs);
    vars.insert(more.begin(), more.end());
    if (!is_fixed_point(c))
      m.sizes.push_back(term_size(c.lhs) + term_size(c.rhs));
  }
  m.var_count = vars.size();
  std::sort(m.sizes.rbegin(), m.sizes.rend());
  return m;
}

bool lex_greater(const ProblemMeasure& a, const ProblemMeasure& b) {
  if (a.var_count != b.var_count) return a.var_count > b.var_count;
  // Multiset extension of > over naturals: lexicographic on the sorted
  // descending sequences, a strict prefix being smaller.
  std::size_t n = std::min(a.sizes.size(), b.sizes.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.sizes[i] != b.sizes[i]) return a.sizes[i] > b.sizes[i];
  return a.sizes.size() > b.sizes.size();
}

std::string to_string(const ProblemMeasure& m) {
  std::string out = "(" + std::to_string(m.var_count) + ", {";
  for (std::size_t i = 0; i < m.sizes.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(m.sizes[i]);
  }
  return out + "})";
}

VarSet vars_of(const Solution& s) {
  VarSet out = vars_of(s.ctx);
  VarSet more = vars_of(s.subst);
  out.insert(more.begin(), more.end());
  return out;
}

std::string to_string(const Solution& s) {
  return "<" + to_string(s.ctx) + ", " + to_string(s.subst) + ">";
}

namespace {

Solution extract_solution(const UnifProblem& branch, std::size_t group_cap) {
  std::vector<FixConstraint> fixes;
  for (const EqConstraint& c : branch.constraints) {
    assert(is_fixed_point(c));
    fixes.push_back(FixConstraint{c.lhs.susp_perm(), c.lhs.susp_var()});
  }
  Context ctx = normalize(Context(branch.nu_names, std::move(fixes)));

  // Drop constraints entailed by the rest (in canonical order). Entailed
  // constraints contribute nothing to any membership group, so every
  // derivable judgement stays derivable.
  std::vector<FixConstraint> kept = ctx.constraints();
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<FixConstraint> rest = kept;
    rest.erase(rest.begin() + static_cast<long>(i));
    Context rest_ctx(ctx.nu_names(), rest);
    if (entails(rest_ctx, kept[i].perm, Term::var(kept[i].var), group_cap))
      kept = std::move(rest);
    else
      ++i;
  }

  Subst composed;
  for (const Binding& b : branch.pending)
    composed = composed.then(Subst::single(b.var, b.term));

  // Generated names that survived into neither the context nor the
  // substitution image are vacuous and dropped; problem names stay.
  AtomSet used;
  for (const FixConstraint& c : kept) {
    AtomSet dom = c.perm.domain();
    used.insert(dom.begin(), dom.end());
  }
  for (const auto& [_, t] : composed.mapping()) {
    AtomSet in_image = atoms_of(t);
    used.insert(in_image.begin(), in_image.end());
  }
  AtomSet names;
  for (const Atom& a : branch.nu_names)
    if (!branch.generated.count(a) || used.count(a)) names.insert(a);

  Solution sol;
  sol.ctx = Context(std::move(names), std::move(kept));
  AtomSet image_names;
  for (const auto& [_, t] : composed.mapping()) {
    for (const Atom& a : atoms_of(t))
      if (sol.ctx.nu_names().count(a)) image_names.insert(a);
  }
  composed.set_nu_names(std::move(image_names));
  sol.subst = std::move(composed);
  return sol;
}

}  // namespace

std::vector<Solution> solve(const UnifProblem& p, const SolveOptions& opts) {
  VarSet orig_vars;
  for (const EqConstraint& c : p.constraints) {
    VarSet more = vars_of(c.lhs);
    orig_vars.insert(more.begin(), more.end());
    more = vars_of(c.rhs);
    orig_vars.insert(more.begin(), more.end());
  }

  FreshSource fresh = FreshSource::covering(p);
  ExtendedProblem work{p};
  std::map<std::string, Solution> found;  // canonical key -> solution

  while (!work.empty()) {
    UnifProblem q = std::move(work.back());
    work.pop_back();

    StepResult r = step(q, fresh);
    if (r.normal) {
      bool consistent = true;
      for (const EqConstraint& c : q.constraints) {
        ReducedKind kind = classify_reduced(c);
        if (kind != ReducedKind::ConsistentFixedPoint) {
          consistent = false;
          if (opts.on_dead_branch) opts.on_dead_branch(q, kind);
          break;
        }
      }
      if (!consistent) continue;
      Solution sol = extract_solution(q, opts.group_cap);
      std::string key = to_string(sol.ctx) + " | " +
                        to_string(sol.subst.restricted(orig_vars));
      found.emplace(std::move(key), std::move(sol));
      continue;
    }

    ProblemMeasure before = measure(q);
    for (const UnifProblem& succ : r.branches) {
      assert(lex_greater(before, measure(succ)) &&
             "simplification must shrink the termination measure");
      (void)before;
      if (opts.on_step) opts.on_step(q, r.rule, succ);
    }
    // Aligned branch on top of the stack so it is explored first.
    for (auto it = r.branches.rbegin(); it != r.branches.rend(); ++it)
      work.push_back(std::move(*it));
  }

  std::vector<Solution> out;
  out.reserve(found.size());
  for (auto& [_, sol] : found) out.push_back(std::move(sol));
  return out;
}

bool check_instance(const Solution& s1, const Solution& s2, const Subst& delta,
                    std::size_t group_cap) {
  const AtomSet& n1 = s1.ctx.nu_names();
  const AtomSet& n2 = s2.ctx.nu_names();
  if (!std::includes(n2.begin(), n2.end(), n1.begin(), n1.end())) return false;

  CheckOptions opts{group_cap};
  // ctx2 |- ctx1 delta
  for (const FixConstraint& c : s1.ctx.constraints()) {
    Term image = subst_apply(delta, Term::var(c.var));
    if (!check(s2.ctx, perm_apply(c.perm, image), image, opts)) return false;
  }
  // ctx2 |- X sigma2 = X sigma1 delta for the variables of either solution
  VarSet vars = vars_of(s1);
  VarSet more = vars_of(s2);
  vars.insert(more.begin(), more.end());
  for (const Variable& v : vars) {
    Term lhs = subst_apply(s2.subst, Term::var(v));
    Term rhs = subst_apply(delta, subst_apply(s1.subst, Term::var(v)));
    if (!check(s2.ctx, lhs, rhs, opts)) return false;
  }
  return true;
}

namespace {

struct SymbolUse {
  std::string name;
  Theory theory;
  std::size_t arity;
  auto operator<=>(const SymbolUse&) const = default;
};

}  // namespace

std::optional<Subst> find_instance_witness(const Solution& s1,
                                           const Solution& s2,
                                           std::size_t depth_bound,
                                           std::size_t group_cap) {
  if (check_instance(s1, s2, Subst{}, group_cap)) return Subst{};

  VarSet vars = vars_of(s1);
  VarSet more = vars_of(s2);
  vars.insert(more.begin(), more.end());

  AtomSet atoms = atoms_of(s1.ctx);
  for (const AtomSet& extra : {atoms_of(s2.ctx), atoms_of(s1.subst), atoms_of(s2.subst)})
    atoms.insert(extra.begin(), extra.end());

  std::set<Perm> perms{Perm{}};
  for (const Context* ctx : {&s1.ctx, &s2.ctx}) {
    for (const FixConstraint& c : ctx->constraints()) {
      perms.insert(c.perm);
      perms.insert(c.perm.inverse());
    }
  }

  std::set<SymbolUse> symbols;
  std::function<void(const Term&)> harvest = [&](const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Susp:
        perms.insert(t.susp_perm());
        perms.insert(t.susp_perm().inverse());
        return;
      case Term::Kind::App:
        symbols.insert(
            SymbolUse{t.app_symbol(), t.app_theory(), t.app_args().size()});
        for (const Term& arg : t.app_args()) harvest(arg);
        return;
      case Term::Kind::Abs:
        harvest(t.abs_body());
        return;
      default:
        return;
    }
  };
  for (const Subst* s : {&s1.subst, &s2.subst})
    for (const auto& [_, t] : s->mapping()) harvest(t);

  // Candidate images, by depth, smallest first.
  std::vector<Term> candidates;
  for (const Variable& v : vars)
    for (const Perm& p : perms) candidates.push_back(Term::susp(p, v));
  for (const Atom& a : atoms) candidates.push_back(Term::atom(a));
  std::size_t level_begin = 0;
  for (std::size_t depth = 2; depth <= depth_bound; ++depth) {
    std::size_t level_end = candidates.size();
    for (const SymbolUse& sym : symbols) {
      if (sym.arity == 1) {
        for (std::size_t i = level_begin; i < level_end; ++i)
          candidates.push_back(Term::app(sym.name, sym.theory, {candidates[i]}));
      } else if (sym.arity == 2) {
        for (std::size_t i = 0; i < level_end; ++i)
          for (std::size_t j = 0; j < level_end; ++j)
            if (i >= level_begin || j >= level_begin)
              candidates.push_back(
                  Term::app(sym.name, sym.theory, {candidates[i], candidates[j]}));
      }
    }
    for (const Atom& a : atoms)
      for (std::size_t i = level_begin; i < level_end; ++i)
        candidates.push_back(Term::abs(a, candidates[i]));
    level_begin = level_end;
  }

  std::vector<Variable> var_list(vars.begin(), vars.end());
  constexpr std::size_t kMaxAttempts = 200'000;
  std::size_t attempts = 0;

  // Odometer over (unbound | candidate) per variable; index 0 = unbound.
  std::vector<std::size_t> pick(var_list.size(), 0);
  while (true) {
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] <= candidates.size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;  // odometer wrapped: space exhausted

    Subst delta;
    for (std::size_t k = 0; k < pick.size(); ++k)
      if (pick[k] > 0) delta.bind(var_list[k], candidates[pick[k] - 1]);
    if (delta.is_identity()) continue;  // Id was tried up front
    if (check_instance(s1, s2, delta, group_cap)) return delta;
    if (++attempts >= kMaxAttempts) break;
  }
  return std::nullopt;
}

std::string to_string(const EqConstraint& c) {
  return to_string(c.lhs) + " =? " + to_string(c.rhs);
}

std::string to_string(const UnifProblem& p) {
  std::string out;
  if (!p.nu_names.empty()) {
    out += "new";
    for (const Atom& a : p.nu_names) out += " " + a.str();
    out += " . ";
  }
  out += "{";
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    if (i) out += ", ";
    out += to_string(p.constraints[i]);
  }
  return out + "}";
}

}  // namespace nomc
