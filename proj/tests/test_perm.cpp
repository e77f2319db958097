#include <doctest.h>

#include "nomc/parser.hpp"
#include "nomc/perm.hpp"
#include "support/gen.hpp"

using namespace nomc;

TEST_SUITE_BEGIN("perm");

namespace {
Perm pp(const char* text) { return parse_perm(text); }
}  // namespace

TEST_CASE("swapping products and disjoint cycles represent the same map") {
  CHECK(pp("(a d)(a c)(a b)(e f)") == pp("(a b c d)(e f)"));
  CHECK(pp("(a d)(a c)(a b)(e f)").str() == "(a b c d)(e f)");
}

TEST_CASE("compose applies the right factor first") {
  Perm p = pp("(a b)").compose(pp("(b c)"));
  CHECK(p == pp("(a b c)"));
  CHECK(pp("(a b)").compose(pp("(a b)")).is_identity());
}

TEST_CASE("inverse") {
  CHECK(pp("(a b c)").inverse() == pp("(a c b)"));
  CHECK(Perm{}.inverse().is_identity());
  CHECK(pp("(a b)(c d)").inverse() == pp("(a b)(c d)"));
}

TEST_CASE("conjugate relabels cycle atoms") {
  // pi = (a b c1)(d e) conjugated by (c1 d) renames c1 <-> d.
  Perm pi = pp("(a b c1)(d e)");
  Perm rho = pp("(c1 d)");
  CHECK(pi.conjugate(rho) == pp("(a b d)(c1 e)"));
  CHECK(pi.conjugate(Perm{}) == pi);
  CHECK(Perm{}.conjugate(rho).is_identity());
  // Definition check: pi^rho = rho o pi o rho^-1.
  CHECK(pi.conjugate(rho) == rho.compose(pi).compose(rho.inverse()));
}

TEST_CASE("canonical form is unique") {
  CHECK(pp("(b c a)") == pp("(a b c)"));
  CHECK(pp("(c d)(a b)") == pp("(a b)(c d)"));
  CHECK(pp("(a b)(b c)") == pp("(a b)").compose(pp("(b c)")));
}

TEST_CASE("apply walks the cycles") {
  Perm p = pp("(a b c)(d e)");
  CHECK(p.apply(Atom{"a"}) == Atom{"b"});
  CHECK(p.apply(Atom{"c"}) == Atom{"a"});
  CHECK(p.apply(Atom{"e"}) == Atom{"d"});
  CHECK(p.apply(Atom{"z"}) == Atom{"z"});
  CHECK(p.domain() ==
        AtomSet{Atom{"a"}, Atom{"b"}, Atom{"c"}, Atom{"d"}, Atom{"e"}});
}

TEST_CASE("group laws on random permutations") {
  gen::Rng rng(2024);
  std::vector<Atom> pool = gen::default_atoms();
  for (int i = 0; i < 300; ++i) {
    Perm p = gen::perm(rng, pool, 8);
    Perm q = gen::perm(rng, pool, 8);
    Perm r = gen::perm(rng, pool, 8);
    CHECK(p.compose(q).compose(r) == p.compose(q.compose(r)));
    CHECK(p.compose(Perm{}) == p);
    CHECK(Perm{}.compose(p) == p);
    CHECK(p.compose(p.inverse()).is_identity());
    CHECK(p.inverse().compose(p).is_identity());
  }
}

TEST_CASE("print/parse round trip") {
  gen::Rng rng(7);
  std::vector<Atom> pool = gen::default_atoms();
  for (int i = 0; i < 200; ++i) {
    Perm p = gen::perm(rng, pool, 8);
    CHECK(parse_perm(p.str()) == p);
  }
}

TEST_CASE("fresh atom sits above every index in the avoid set") {
  CHECK(fresh_atom({Atom{"a"}, Atom{"b"}}) == Atom{"c", 1});
  CHECK(fresh_atom({Atom{"a"}, Atom{"c", 1}}) == Atom{"c", 2});
  CHECK(fresh_atom({Atom{"a", 9}}) == Atom{"c", 10});
  CHECK(fresh_atom({}) == Atom{"c", 1});
}

TEST_SUITE_END();
