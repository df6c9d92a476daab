#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operad/tree.hpp"

using namespace operad;

namespace {

generator_set one_binary(int parity = 0) {
  return generator_set({{"b", 2, parity, 1}});
}

tree_node leaf(int j) {
  tree_node n;
  n.leaf = j;
  return n;
}

tree_node node(int g, std::vector<tree_node> kids) {
  tree_node n;
  n.gen = g;
  n.kids = std::move(kids);
  return n;
}

}  // namespace

TEST_CASE("unshuffle enumeration counts C(n-i+m-1, m-1)") {
  CHECK(enumerate_unshuffles(1, 2, 2).size() == 2);
  CHECK(enumerate_unshuffles(2, 1, 2).size() == 1);
  CHECK(enumerate_unshuffles(1, 3, 3).size() == 6);
  CHECK(enumerate_unshuffles(2, 3, 3).size() == 3);
  CHECK(enumerate_unshuffles(3, 3, 3).size() == 1);
  for (const auto& u : enumerate_unshuffles(1, 3, 4)) {
    // blocks are increasing
    for (size_t j = 1; j + 1 < u.values.size() && j < 2; ++j) CHECK(u.values[j - 1] < u.values[j]);
  }
  CHECK(unshuffle::identity(2, 3, 4).is_identity());
}

TEST_CASE("tree monomial constructors validate the shuffle condition") {
  generator_set gs = one_binary();
  CHECK_NOTHROW(tree_mono(gs, operad_kind::shuffle, node(0, {node(0, {leaf(1), leaf(3)}), leaf(2)})));
  CHECK_THROWS_AS(tree_mono(gs, operad_kind::shuffle, node(0, {leaf(2), leaf(1)})), error);
  CHECK_THROWS_AS(
      tree_mono(gs, operad_kind::nonsymmetric, node(0, {node(0, {leaf(1), leaf(3)}), leaf(2)})),
      error);
  tree_mono unit = tree_mono::unit();
  CHECK(unit.arity() == 1);
  CHECK(unit.weight() == 0);
}

TEST_CASE("composition grafts and relabels") {
  generator_set gs = one_binary();
  tree_mono b = tree_mono::vertex(gs, operad_kind::shuffle, 0);
  // b o_1 b with both unshuffles: the two left combs of arity 3
  auto us = enumerate_unshuffles(1, 2, 2);
  signed_tree t1 = compose(gs, operad_kind::shuffle, b, us[0], b);
  signed_tree t2 = compose(gs, operad_kind::shuffle, b, us[1], b);
  CHECK(t1.mono.text(gs) == "b(b(1,2),3)");
  CHECK(t2.mono.text(gs) == "b(b(1,3),2)");
  CHECK(t1.sign == 1);
  CHECK(t2.sign == 1);
  signed_tree t3 = compose(gs, operad_kind::shuffle, b, unshuffle::identity(2, 2, 2), b);
  CHECK(t3.mono.text(gs) == "b(1,b(2,3))");
  // unit laws
  CHECK(compose(gs, operad_kind::shuffle, t1.mono, unshuffle::identity(2, 1, 3), tree_mono::unit())
            .mono == t1.mono);
}

TEST_CASE("left combs") {
  generator_set gs = one_binary();
  tree_mono comb = left_comb(gs, operad_kind::shuffle, {0, 0, 0});
  CHECK(comb.arity() == 4);
  CHECK(comb.text(gs) == "b(b(b(1,2),3),4)");
  CHECK(enumerate_left_combs(gs, operad_kind::shuffle, 0, 3).size() == 6);
}

TEST_CASE("divisor occurrences in small trees") {
  generator_set gs = one_binary();
  tree_mono b2 = tree_mono::vertex(gs, operad_kind::shuffle, 0);
  tree_mono comb = left_comb(gs, operad_kind::shuffle, {0, 0, 0});
  auto occs = divisor_occurrences(gs, b2, comb);
  CHECK(occs.size() == 3);
  // identity embedding
  auto self = divisor_occurrences(gs, comb, comb);
  REQUIRE(self.size() == 1);
  CHECK(self[0].right_divisor);
  // size bound
  CHECK(divisor_occurrences(gs, comb, b2).empty());
}

TEST_CASE("right divisors of given weight are disjoint full subtrees") {
  generator_set gs = one_binary();
  tree_mono comb4 = left_comb(gs, operad_kind::shuffle, {0, 0, 0, 0});
  auto r2 = right_divisors_weight(gs, comb4, 2);
  REQUIRE(r2.size() == 1);  // only the bottom two-vertex comb
  auto r1 = right_divisors_weight(gs, comb4, 1);
  CHECK(r1.size() == 1);  // only the bottom vertex has all-leaf children
  // nu = mu^(3) o_3 mu^(1): weight 4, R_2 is empty
  tree_mono m3 = left_comb(gs, operad_kind::shuffle, {0, 0, 0});
  signed_tree nu =
      compose(gs, operad_kind::shuffle, m3, unshuffle::identity(3, 2, 4), tree_mono::vertex(gs, operad_kind::shuffle, 0));
  CHECK(right_divisors_weight(gs, nu.mono, 2).empty());
}

TEST_CASE("rpdl order: the non-comb arity-3 monomial is largest") {
  generator_set gs = one_binary();
  order_spec os;
  tree_mono m1(gs, operad_kind::shuffle, node(0, {node(0, {leaf(1), leaf(2)}), leaf(3)}));
  tree_mono m2(gs, operad_kind::shuffle, node(0, {node(0, {leaf(1), leaf(3)}), leaf(2)}));
  tree_mono m3(gs, operad_kind::shuffle, node(0, {leaf(1), node(0, {leaf(2), leaf(3)})}));
  CHECK(compare(os, m3, m2) == cmp::greater);
  CHECK(compare(os, m2, m1) == cmp::greater);
  CHECK(compare(os, m1, m1) == cmp::equal);
  CHECK(compare(os, m1, m3) == cmp::less);
}

TEST_CASE("enumeration counts match free-operad dimensions") {
  generator_set gs = one_binary();
  order_spec os;
  CHECK(enumerate_tree_monomials(gs, operad_kind::shuffle, 1, {}, os).size() == 1);
  CHECK(enumerate_tree_monomials(gs, operad_kind::shuffle, 3, {}, os).size() == 3);
  CHECK(enumerate_tree_monomials(gs, operad_kind::shuffle, 4, {}, os).size() == 15);
  CHECK(enumerate_tree_monomials(gs, operad_kind::shuffle, 5, {}, os).size() == 105);
  CHECK(enumerate_tree_monomials(gs, operad_kind::nonsymmetric, 3, {}, os).size() == 2);
  CHECK(enumerate_tree_monomials(gs, operad_kind::nonsymmetric, 4, {}, os).size() == 5);
  generator_set ternary({{"t", 3, 0, 1}});
  CHECK(enumerate_tree_monomials(ternary, operad_kind::shuffle, 5, {}, os).size() == 10);
  CHECK(enumerate_tree_monomials(ternary, operad_kind::shuffle, 7, {}, os).size() == 280);
}

TEST_CASE("odd generators produce composition signs") {
  generator_set gs = one_binary(1);
  tree_mono b = tree_mono::vertex(gs, operad_kind::shuffle, 0);
  tree_mono m3 = compose(gs, operad_kind::shuffle, b, unshuffle::identity(2, 2, 2), b).mono;
  // graft at slot 1 of b(1, b(2,3)): one odd vertex after the slot
  signed_tree st = compose(gs, operad_kind::shuffle, m3, unshuffle::identity(1, 2, 3), b);
  CHECK(st.sign == -1);
  // even case: no signs
  generator_set ge = one_binary(0);
  tree_mono be = tree_mono::vertex(ge, operad_kind::shuffle, 0);
  tree_mono m3e = compose(ge, operad_kind::shuffle, be, unshuffle::identity(2, 2, 2), be).mono;
  CHECK(compose(ge, operad_kind::shuffle, m3e, unshuffle::identity(1, 2, 3), be).sign == 1);
}

TEST_CASE("replace_occurrence rebuilds the tree") {
  generator_set gs = one_binary();
  tree_mono comb = left_comb(gs, operad_kind::shuffle, {0, 0, 0});
  tree_mono b2 = tree_mono::vertex(gs, operad_kind::shuffle, 0);
  tree_mono m3(gs, operad_kind::shuffle, node(0, {leaf(1), node(0, {leaf(2), leaf(3)})}));
  // occurrences of the 2-vertex comb inside the 3-vertex comb
  tree_mono two = left_comb(gs, operad_kind::shuffle, {0, 0});
  auto occs = divisor_occurrences(gs, two, comb);
  REQUIRE(!occs.empty());
  // replacing the pattern with itself is the identity
  for (const auto& occ : occs) {
    signed_tree st = replace_occurrence(gs, operad_kind::shuffle, comb, occ, two);
    CHECK(st.mono == comb);
    CHECK(st.sign == 1);
  }
  // replacing the top pattern with m3 changes the shape
  signed_tree st = replace_occurrence(gs, operad_kind::shuffle, comb, occs[0], m3);
  CHECK(st.mono.arity() == 4);
}
