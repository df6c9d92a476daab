#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "operad/opoly.hpp"
#include "operad/presets.hpp"
#include "operad/rewrite.hpp"

using namespace operad;

namespace {

struct random_trees {
  generator_set gs;
  operad_kind kind;
  std::mt19937_64 rng;
  order_spec os;

  tree_mono random_monomial(int arity) {
    std::vector<tree_mono> all = enumerate_tree_monomials(gs, kind, arity, {}, os);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
  }
};

}  // namespace

TEST_CASE("signed associativity: sequential axiom over random triples") {
  // (R o_i S) with T substituted deeper equals the one-shot composition through S
  for (int parity = 0; parity <= 1; ++parity) {
    random_trees rt{generator_set({{"b", 2, parity, 1}}), operad_kind::shuffle,
                    std::mt19937_64(42 + parity)};
    std::uniform_int_distribution<int> ar(2, 4);
    int checked = 0;
    for (int it = 0; it < 500; ++it) {
      tree_mono r = rt.random_monomial(ar(rt.rng));
      tree_mono s = rt.random_monomial(ar(rt.rng));
      tree_mono t = rt.random_monomial(ar(rt.rng));
      // route 1: u = r o_{i,id} s, then graft t into a slot of the s-block
      int i = 1;
      unshuffle u1 = unshuffle::identity(i, s.arity(), r.arity());
      signed_tree rs = compose(rt.gs, rt.kind, r, u1, s);
      // slot j inside the grafted block: leaves i..i+s.arity()-1 of rs
      int j = i + s.arity() - 1;
      unshuffle u2 = unshuffle::identity(j, t.arity(), rs.mono.arity());
      signed_tree lhs = compose(rt.gs, rt.kind, rs.mono, u2, t);
      // route 2: s' = s o_{s.arity(), id} t, then r o_{i,id} s'
      unshuffle u3 = unshuffle::identity(s.arity(), t.arity(), s.arity());
      signed_tree st = compose(rt.gs, rt.kind, s, u3, t);
      unshuffle u4 = unshuffle::identity(i, st.mono.arity(), r.arity());
      signed_tree rhs = compose(rt.gs, rt.kind, r, u4, st.mono);
      REQUIRE(lhs.mono == rhs.mono);
      CHECK(lhs.sign * rs.sign == rhs.sign * st.sign);
      ++checked;
    }
    CHECK(checked == 500);
  }
}

TEST_CASE("signed exchange: disjoint slots anticommute by the Koszul rule") {
  for (int parity = 0; parity <= 1; ++parity) {
    random_trees rt{generator_set({{"b", 2, parity, 1}}), operad_kind::shuffle,
                    std::mt19937_64(7 + parity)};
    std::uniform_int_distribution<int> ar(2, 4);
    for (int it = 0; it < 500; ++it) {
      tree_mono r = rt.random_monomial(3);
      tree_mono s = rt.random_monomial(ar(rt.rng));
      tree_mono t = rt.random_monomial(ar(rt.rng));
      // graft s at slot 1 and t at slot 3 of r, in both orders
      unshuffle ua = unshuffle::identity(1, s.arity(), r.arity());
      signed_tree a1 = compose(rt.gs, rt.kind, r, ua, s);
      int slot3 = 2 + s.arity();  // former slot 3 after the first graft
      unshuffle ub = unshuffle::identity(slot3, t.arity(), a1.mono.arity());
      signed_tree a2 = compose(rt.gs, rt.kind, a1.mono, ub, t);

      unshuffle uc = unshuffle::identity(3, t.arity(), r.arity());
      signed_tree b1 = compose(rt.gs, rt.kind, r, uc, t);
      unshuffle ud = unshuffle::identity(1, s.arity(), b1.mono.arity());
      signed_tree b2 = compose(rt.gs, rt.kind, b1.mono, ud, s);

      REQUIRE(a2.mono == b2.mono);
      int expected = (s.parity() * t.parity()) % 2 ? -1 : 1;
      CHECK(a1.sign * a2.sign == expected * b1.sign * b2.sign);
    }
  }
}

TEST_CASE("order compatibility in random composition contexts") {
  for (const char* oname : {"rpdl", "pdl-forward"}) {
    order_spec os = order_spec::from_name(oname);
    random_trees rt{generator_set({{"a", 2, 0, 1}, {"c", 3, 0, 1}}), operad_kind::shuffle,
                    std::mt19937_64(99), os};
    std::uniform_int_distribution<int> ar(2, 4);
    int violations = 0;
    for (int it = 0; it < 1000; ++it) {
      int arity = ar(rt.rng);
      tree_mono s = rt.random_monomial(arity);
      tree_mono t = rt.random_monomial(arity);
      if (s == t) continue;
      operad::cmp rel = operad::compare(os, s, t);
      CHECK(((rel == operad::cmp::less) != (operad::compare(os, t, s) == operad::cmp::less)));
      // outer position: C[s] vs C[t]
      tree_mono c = rt.random_monomial(ar(rt.rng));
      std::uniform_int_distribution<int> slot_pick(1, c.arity());
      int slot = slot_pick(rt.rng);
      auto us = enumerate_unshuffles(slot, arity, c.arity());
      std::uniform_int_distribution<size_t> upick(0, us.size() - 1);
      const unshuffle& u = us[upick(rt.rng)];
      tree_mono cs = compose(rt.gs, rt.kind, c, u, s).mono;
      tree_mono ct = compose(rt.gs, rt.kind, c, u, t).mono;
      if ((rel == operad::cmp::less) != (operad::compare(os, cs, ct) == operad::cmp::less)) ++violations;
      // inner position: s[C'] vs t[C']
      tree_mono c2 = rt.random_monomial(ar(rt.rng));
      std::uniform_int_distribution<int> slot2_pick(1, arity);
      int slot2 = slot2_pick(rt.rng);
      auto us2 = enumerate_unshuffles(slot2, c2.arity(), arity);
      std::uniform_int_distribution<size_t> upick2(0, us2.size() - 1);
      const unshuffle& u2 = us2[upick2(rt.rng)];
      tree_mono sc = compose(rt.gs, rt.kind, s, u2, c2).mono;
      tree_mono tc = compose(rt.gs, rt.kind, t, u2, c2).mono;
      if ((rel == operad::cmp::less) != (operad::compare(os, sc, tc) == operad::cmp::less)) ++violations;
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("substitute distributes over addition") {
  order_spec os;
  presentation lie = preset("lie", os);
  const generator_set& gs = lie.gens;
  std::mt19937_64 rng(5);
  std::vector<tree_mono> M3 = enumerate_tree_monomials(gs, operad_kind::shuffle, 3, {}, os);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int it = 0; it < 200; ++it) {
    auto rnd_poly = [&]() {
      std::vector<std::pair<tree_mono, rational>> terms;
      for (const auto& m : M3) terms.emplace_back(m, rational(coef(rng)));
      return opoly(os, std::move(terms));
    };
    opoly p = rnd_poly(), q = rnd_poly(), r = rnd_poly();
    unshuffle u = unshuffle::identity(2, 3, 3);
    opoly lhs = substitute(gs, operad_kind::shuffle, os, add(os, p, q), u, r);
    opoly rhs = add(os, substitute(gs, operad_kind::shuffle, os, p, u, r),
                    substitute(gs, operad_kind::shuffle, os, q, u, r));
    CHECK(lhs == rhs);
    opoly lhs2 = substitute(gs, operad_kind::shuffle, os, r, u, add(os, p, q));
    opoly rhs2 = add(os, substitute(gs, operad_kind::shuffle, os, r, u, p),
                     substitute(gs, operad_kind::shuffle, os, r, u, q));
    CHECK(lhs2 == rhs2);
  }
}

TEST_CASE("right divisors of random monomials are pairwise disjoint") {
  random_trees rt{generator_set({{"b", 2, 0, 1}}), operad_kind::shuffle, std::mt19937_64(11)};
  std::uniform_int_distribution<int> ar(3, 7);
  for (int it = 0; it < 300; ++it) {
    tree_mono t = rt.random_monomial(ar(rt.rng));
    for (int d = 1; d <= 3; ++d) {
      auto occs = right_divisors_weight(rt.gs, t, d);
      for (size_t a = 0; a < occs.size(); ++a)
        for (size_t b = a + 1; b < occs.size(); ++b)
          for (int va : occs[a].vertices)
            for (int vb : occs[b].vertices) CHECK(va != vb);
    }
  }
}

TEST_CASE("determinism: identical runs produce identical bases") {
  order_spec os;
  presentation p1 = preset("lie", os);
  groebner_data g1 = buchberger(p1, os, bound_for_arity(p1.gens, 5));
  presentation p2 = preset("lie", os);
  groebner_data g2 = buchberger(p2, os, bound_for_arity(p2.gens, 5));
  REQUIRE(g1.basis().size() == g2.basis().size());
  for (size_t j = 0; j < g1.basis().size(); ++j) CHECK(g1.basis()[j] == g2.basis()[j]);
}
