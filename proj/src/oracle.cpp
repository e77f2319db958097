#include "nomc/oracle.hpp"

namespace nomc {

namespace {

bool gaceq(const Term& g1, const Term& g2) {
  if (g1.kind() != g2.kind()) return false;
  switch (g1.kind()) {
    case Term::Kind::Atom:
      return g1.atom_value() == g2.atom_value();
    case Term::Kind::App: {
      if (g1.app_symbol() != g2.app_symbol() ||
          g1.app_args().size() != g2.app_args().size())
        return false;
      const auto& xs = g1.app_args();
      const auto& ys = g2.app_args();
      if (g1.app_theory() == Theory::C) {
        return (gaceq(xs[0], ys[0]) && gaceq(xs[1], ys[1])) ||
               (gaceq(xs[0], ys[1]) && gaceq(xs[1], ys[0]));
      }
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (!gaceq(xs[i], ys[i])) return false;
      return true;
    }
    case Term::Kind::Abs: {
      const Atom& a = g1.abs_binder();
      const Atom& b = g2.abs_binder();
      if (a == b) return gaceq(g1.abs_body(), g2.abs_body());
      AtomSet avoid = atoms_of(g1);
      AtomSet more = atoms_of(g2);
      avoid.insert(more.begin(), more.end());
      Atom c = fresh_atom(avoid);
      return gaceq(perm_apply(Perm::swap(a, c), g1.abs_body()),
                   perm_apply(Perm::swap(b, c), g2.abs_body()));
    }
    case Term::Kind::Susp:
      return false;  // unreachable for ground input
  }
  return false;
}

}  // namespace

bool ground_alpha_c_equal(const Term& g1, const Term& g2) {
  if (!is_ground(g1) || !is_ground(g2))
    throw NonGroundError("ground_alpha_c_equal requires ground terms");
  return gaceq(g1, g2);
}

AtomSet free_names(const Term& g) {
  switch (g.kind()) {
    case Term::Kind::Atom:
      return {g.atom_value()};
    case Term::Kind::Susp:
      throw NonGroundError("free_names requires a ground term");
    case Term::Kind::App: {
      AtomSet out;
      for (const Term& arg : g.app_args()) {
        AtomSet sub = free_names(arg);
        out.insert(sub.begin(), sub.end());
      }
      return out;
    }
    case Term::Kind::Abs: {
      AtomSet out = free_names(g.abs_body());
      out.erase(g.abs_binder());
      return out;
    }
  }
  return {};
}

Subst grounding_substitution(const Context& ctx, const VarSet& vars,
                             const AtomSet& query_atoms, Signature* scratch) {
  if (!ctx.normalized())
    throw NotNormalizedError("grounding_substitution requires a normalized context");

  AtomSet pool = atoms_of(ctx);
  pool.insert(query_atoms.begin(), query_atoms.end());

  Subst out;
  for (const Variable& x : vars) {
    AtomSet excluded = ctx.nu_names();
    for (const FixConstraint& c : fresh_fix_split(ctx, x).fresh) {
      AtomSet dom = c.perm.domain();
      excluded.insert(dom.begin(), dom.end());
    }
    std::vector<Term> args;
    for (const Atom& a : pool)
      if (!excluded.count(a)) args.push_back(Term::atom(a));

    std::string symbol = "d_" + x.name;
    if (scratch) scratch->declare(symbol, args.size(), Theory::Empty);
    out.bind(x, Term::app(std::move(symbol), Theory::Empty, std::move(args)));
  }
  return out;
}

}  // namespace nomc
