#include "nomc/equiv.hpp"

namespace nomc {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::AtomRefl: return "AtomRefl";
    case Rule::Var: return "Var";
    case Rule::Fun: return "Fun";
    case Rule::FunCAligned: return "FunC-aligned";
    case Rule::FunCSwapped: return "FunC-swapped";
    case Rule::AbsSame: return "AbsSame";
    case Rule::AbsDiff: return "AbsDiff";
  }
  return "?";
}

std::string to_string(const Judgement& j) {
  return to_string(j.ctx) + " |- " + to_string(j.lhs) + " = " +
         to_string(j.rhs);
}

namespace {

using ProofSlot = std::optional<ProofTree>;

// Recursive decision procedure. `out` is filled with the derivation node
// on success when non-null.
bool check_rec(const Context& ctx, const Term& s, const Term& t,
               const CheckOptions& opts, ProofSlot* out) {
  auto conclude = [&](Rule rule, std::vector<ProofSlot> slots = {},
                      std::optional<Atom> fresh = std::nullopt) {
    if (out) {
      std::vector<ProofTree> premises;
      premises.reserve(slots.size());
      for (ProofSlot& slot : slots) premises.push_back(std::move(*slot));
      *out = ProofTree{rule, Judgement{ctx, s, t}, std::move(premises),
                       std::move(fresh)};
    }
    return true;
  };

  if (s.kind() != t.kind()) return false;
  switch (s.kind()) {
    case Term::Kind::Atom:
      return s.atom_value() == t.atom_value() && conclude(Rule::AtomRefl);

    case Term::Kind::Susp: {
      if (s.susp_var() != t.susp_var()) return false;
      Perm offset = t.susp_perm().inverse().compose(s.susp_perm());
      if (!coset_product_member(offset, membership_group(ctx, s.susp_var()),
                                opts.group_cap))
        return false;
      return conclude(Rule::Var);
    }

    case Term::Kind::App: {
      if (s.app_symbol() != t.app_symbol()) return false;
      if (s.app_args().size() != t.app_args().size() ||
          s.app_theory() != t.app_theory())
        throw SignatureError("symbol used with mismatched arity or theory: " +
                             s.app_symbol());
      if (s.app_theory() == Theory::C) {
        const Term &s0 = s.app_args()[0], &s1 = s.app_args()[1];
        const Term &t0 = t.app_args()[0], &t1 = t.app_args()[1];
        std::vector<ProofSlot> slots(2);
        ProofSlot* p0 = out ? &slots[0] : nullptr;
        ProofSlot* p1 = out ? &slots[1] : nullptr;
        if (check_rec(ctx, s0, t0, opts, p0) && check_rec(ctx, s1, t1, opts, p1))
          return conclude(Rule::FunCAligned, std::move(slots));
        if (check_rec(ctx, s0, t1, opts, p0) && check_rec(ctx, s1, t0, opts, p1))
          return conclude(Rule::FunCSwapped, std::move(slots));
        return false;
      }
      std::vector<ProofSlot> slots(s.app_args().size());
      for (std::size_t i = 0; i < s.app_args().size(); ++i) {
        if (!check_rec(ctx, s.app_args()[i], t.app_args()[i], opts,
                       out ? &slots[i] : nullptr))
          return false;
      }
      return conclude(Rule::Fun, std::move(slots));
    }

    case Term::Kind::Abs: {
      const Atom& a = s.abs_binder();
      const Atom& b = t.abs_binder();
      if (a == b) {
        std::vector<ProofSlot> slots(1);
        if (!check_rec(ctx, s.abs_body(), t.abs_body(), opts,
                       out ? &slots[0] : nullptr))
          return false;
        return conclude(Rule::AbsSame, std::move(slots));
      }
      AtomSet avoid = atoms_of(ctx);
      AtomSet more = atoms_of(s);
      avoid.insert(more.begin(), more.end());
      more = atoms_of(t);
      avoid.insert(more.begin(), more.end());
      Atom c1 = fresh_atom(avoid);
      Context extended = ctx.with_nu_name(c1);
      std::vector<ProofSlot> slots(1);
      if (!check_rec(extended, perm_apply(Perm::swap(a, c1), s.abs_body()),
                     perm_apply(Perm::swap(b, c1), t.abs_body()), opts,
                     out ? &slots[0] : nullptr))
        return false;
      return conclude(Rule::AbsDiff, std::move(slots), c1);
    }
  }
  return false;
}

}  // namespace

bool check(const Context& ctx, const Term& lhs, const Term& rhs,
           const CheckOptions& opts) {
  return check_rec(normalize(ctx), lhs, rhs, opts, nullptr);
}

std::optional<ProofTree> prove(const Context& ctx, const Term& lhs,
                               const Term& rhs, const CheckOptions& opts) {
  ProofSlot proof;
  if (!check_rec(normalize(ctx), lhs, rhs, opts, &proof)) return std::nullopt;
  return proof;
}

bool check_equivariant(const Context& ctx, const Perm& rho, const Term& lhs,
                       const Term& rhs, const CheckOptions& opts) {
  return check(ctx, perm_apply(rho, lhs), perm_apply(rho, rhs), opts);
}

bool entails(const Context& ctx, const Perm& p, const Term& t,
             std::size_t group_cap) {
  return check(ctx, perm_apply(p, t), t, CheckOptions{group_cap});
}

namespace {

void render(const ProofTree& node, std::string& out, std::size_t depth) {
  out.append(2 * depth, ' ');
  out += rule_name(node.rule);
  if (node.fresh) out += " " + node.fresh->str();
  out += ": " + to_string(node.conclusion) + "\n";
  for (const ProofTree& premise : node.premises) render(premise, out, depth + 1);
}

}  // namespace

std::string to_text(const ProofTree& proof) {
  std::string out;
  render(proof, out, 0);
  return out;
}

}  // namespace nomc
