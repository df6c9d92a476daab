#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operad/io.hpp"
#include "operad/presets.hpp"
#include "operad/veronese.hpp"

using namespace operad;

namespace {

groebner_data gb(const std::string& name, int max_arity, const order_spec& os = order_spec()) {
  presentation p = preset(name, os);
  return buchberger(p, os, bound_for_arity(p.gens, max_arity));
}

}  // namespace

TEST_CASE("free membership: the naive-Veronese counterexample") {
  order_spec os;
  generator_set gs({{"m", 2, 0, 1}});
  // nu = mu^(3) o_3 mu^(1), weight 4
  tree_mono m3 = left_comb(gs, operad_kind::shuffle, {0, 0, 0});
  tree_mono nu = compose(gs, operad_kind::shuffle, m3, unshuffle::identity(3, 2, 4),
                         tree_mono::vertex(gs, operad_kind::shuffle, 0))
                     .mono;
  CHECK_FALSE(free_membership(gs, operad_kind::shuffle, nu, 2));
  CHECK_FALSE(free_membership_bruteforce(gs, operad_kind::shuffle, nu, 2));
  // left combs always decompose
  for (int k = 2; k <= 3; ++k) {
    std::vector<int> labels(2 * k, 0);
    tree_mono comb = left_comb(gs, operad_kind::shuffle, labels);
    CHECK(free_membership(gs, operad_kind::shuffle, comb, 2));
  }
  // a weight-d monomial is a generator itself
  CHECK(free_membership(gs, operad_kind::shuffle, m3, 3));
}

TEST_CASE("free membership agrees with brute force on all small binary monomials") {
  order_spec os;
  generator_set gs({{"m", 2, 0, 1}});
  for (int arity = 2; arity <= 7; ++arity) {
    for (const auto& t : enumerate_tree_monomials(gs, operad_kind::shuffle, arity, {}, os)) {
      for (int d = 2; d <= 3; ++d) {
        CHECK(free_membership(gs, operad_kind::shuffle, t, d) ==
              free_membership_bruteforce(gs, operad_kind::shuffle, t, d));
      }
    }
  }
}

TEST_CASE("Veronese generators") {
  order_spec os;
  groebner_data lie = gb("lie", 5);
  veronese_basis y = veronese_generators(lie, 2);
  CHECK(y.elements.size() == 2);
  CHECK(y.ygens[0].arity == 3);

  groebner_data com = gb("com", 5);
  CHECK(veronese_generators(com, 2).elements.size() == 1);

  groebner_data prelie = gb("prelie", 5);
  CHECK(veronese_generators(prelie, 2).elements.size() == 9);
}

TEST_CASE("naive dims of Lie pick the odd arities") {
  order_spec os;
  groebner_data lie = gb("lie", 7);
  std::vector<long> naive = naive_dims(lie, 2, 7);
  CHECK(naive == std::vector<long>{1, 0, 2, 0, 24, 0, 720});
}

TEST_CASE("suboperad dims: Lie matches the naive power, the free operad does not") {
  order_spec os;
  groebner_data lie = gb("lie", 7);
  std::vector<long> sub = suboperad_dims(lie, 2, 7);
  CHECK(sub == std::vector<long>{1, 0, 2, 0, 24, 0, 720});

  // free operad on one binary generator: strictly smaller at arity 5
  presentation free_op;
  free_op.name = "free";
  free_op.kind = presentation_kind::symmetric_input;
  free_op.gens = generator_set({{"m", 2, 0, 1}});
  free_op.actions =
      symmetric_actions(free_op.gens, {std::vector<action_entry>(1, action_entry{0, 1})});
  groebner_data gfree = buchberger(free_op, os, bound_for_arity(free_op.gens, 5));
  std::vector<long> fsub = suboperad_dims(gfree, 2, 5);
  std::vector<long> fnaive = naive_dims(gfree, 2, 5);
  CHECK(fsub[4] < fnaive[4]);
  CHECK(fnaive[4] == 105);
  CHECK(fsub[2] == fnaive[2]);
}

TEST_CASE("quadratic Veronese of Lie is the Lie-triple-system presentation") {
  order_spec os;
  groebner_data lie = gb("lie", 5);
  presentation lts = quadratic_veronese(lie, 2);
  CHECK(lts.gens.size() == 2);
  // relation space at arity 5: dim T(Y)(5)_2 - dim Lie(5) = 40 - 24
  long total = 0;
  for (const auto& r : lts.relations)
    if (r.arity() == 5) ++total;
  CHECK(total == 16);
  // the relations evaluate to zero in Lie
  veronese_evaluation ev = evaluate_veronese_square(lie, 2);
  for (const auto& sl : ev.slices) {
    std::map<std::vector<int>, size_t> at;
    for (size_t j = 0; j < sl.ymonos.size(); ++j) at[sl.ymonos[j].encoding()] = j;
    for (const auto& r : lts.relations) {
      if (r.arity() != sl.arity) continue;
      opoly image;
      for (const auto& [m, c] : r.terms())
        image = axpy(os, image, c, sl.images[at.at(m.encoding())]);
      CHECK(image.zero());
    }
  }
}

TEST_CASE("pbw check: Lie and Com pass, example1 fails") {
  order_spec os;
  groebner_data lie = gb("lie", 5);
  CHECK(pbw_check(lie, 2).pbw);
  groebner_data com = gb("com", 7);
  CHECK(pbw_check(com, 3).pbw);
  groebner_data e1 = gb("example1", 7);
  pbw_report rep = pbw_check(e1, 2);
  CHECK_FALSE(rep.quadratic_gb);
  CHECK_FALSE(rep.pbw);
}

TEST_CASE("left-comb spanning for the three graces, failing for the free operad") {
  order_spec os;
  CHECK(leftcomb_spanning(gb("lie", 5), 5));
  CHECK(leftcomb_spanning(gb("com", 5), 5));
  CHECK(leftcomb_spanning(gb("ass", 5), 5));

  presentation free_op;
  free_op.name = "free";
  free_op.kind = presentation_kind::symmetric_input;
  free_op.gens = generator_set({{"m", 2, 0, 1}});
  free_op.actions =
      symmetric_actions(free_op.gens, {std::vector<action_entry>(1, action_entry{0, 1})});
  groebner_data gfree = buchberger(free_op, os, bound_for_arity(free_op.gens, 5));
  CHECK_FALSE(leftcomb_spanning(gfree, 5));
}

TEST_CASE("di dims") {
  order_spec os;
  groebner_data lie = gb("lie", 6);
  std::vector<long> d = di_dims(dims(lie, 6));
  CHECK(d == std::vector<long>{1, 2, 6, 24, 120, 720});
  groebner_data leib = gb("leib", 6);
  CHECK(dims(leib, 6) == d);
}

TEST_CASE("example1 Veronese squares are not quadratic") {
  order_spec os;
  groebner_data e1 = gb("example1", 7);
  for (int d = 2; d <= 3; ++d) {
    // the witness w^(d) o_{d+1} (w^(d) o_{d+1} w^(d)) vanishes in the operad
    // but does not follow from the quadratic Veronese relations
    const generator_set& gs = e1.gens();
    std::vector<int> labels(d, 0);
    tree_mono wd = left_comb(gs, operad_kind::nonsymmetric, labels);
    opoly wdp(os, {{wd, rational(1)}});
    opoly inner = substitute(gs, operad_kind::nonsymmetric, os, wdp,
                             unshuffle::identity(d + 1, d + 1, d + 1), wdp);
    opoly witness = substitute(gs, operad_kind::nonsymmetric, os, wdp,
                               unshuffle::identity(d + 1, 2 * d + 1, d + 1), inner);
    if (3 * d + 1 <= 7) CHECK(normal_form(e1, witness).zero());

    presentation qv = quadratic_veronese(e1, d);
    // dims of the quadratic Veronese exceed the suboperad at the weight-3 slice
    groebner_data gq = buchberger(qv, os, bound_for_arity(qv.gens, 3 * d + 1));
    if (3 * d + 1 <= 7) {
      std::vector<long> qdims = dims(gq, 3 * d + 1);
      std::vector<long> sdims = suboperad_dims(e1, d, 3 * d + 1);
      CHECK(qdims[3 * d] > sdims[3 * d]);
    }
  }
}
