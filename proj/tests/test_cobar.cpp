#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operad/cobar.hpp"
#include "operad/presets.hpp"

using namespace operad;

namespace {

groebner_data gb(const std::string& name, int max_arity) {
  order_spec os;
  presentation p = preset(name, os);
  return buchberger(p, os, bound_for_arity(p.gens, max_arity));
}

}  // namespace

TEST_CASE("composition tables of tCom presets") {
  order_spec os;
  groebner_data g = gb("tcom:2:1", 3);
  operad_tables t = operad_tables::build(g, 3);
  CHECK(t.basis(2).size() == 1);
  CHECK(t.basis(3).size() == 1);
  CHECK(t.basis(2)[0].intdeg == 1);
  CHECK(t.basis(3)[0].intdeg == 2);
  // the arity-3 element expands in three ways, all with coefficient +-1
  int xi = t.gen_of(3, 0);
  CHECK(t.expansions(xi).size() == 3);

  groebner_data g3 = gb("tcom:3:1", 5);
  operad_tables t3 = operad_tables::build(g3, 5);
  CHECK(t3.basis(3).size() == 1);
  CHECK(t3.basis(4).size() == 0);
  CHECK(t3.basis(5).size() == 1);
  CHECK(t3.expansions(t3.gen_of(5, 0)).size() == 10);

  groebner_data gc = gb("com", 4);
  operad_tables tc = operad_tables::build(gc, 4);
  CHECK(tc.basis(2).size() == 1);
  CHECK(tc.basis(3).size() == 1);
  CHECK(tc.basis(4).size() == 1);
}

TEST_CASE("chain bases of the mock-commutative dual cobar") {
  order_spec os;
  groebner_data g = gb("tcom:2:1", 3);
  operad_tables t = operad_tables::build(g, 3);
  // arity 4, degree 1: one xi and one ell
  auto b41 = chain_basis(t, 4, 1, os);
  CHECK(b41.size() == 10);
  // arity 4, degree 0: binary trees; the six left combs appear
  auto b40 = chain_basis(t, 4, 0, os);
  CHECK(b40.size() == 15);
  int ell = t.gen_of(2, 0);
  auto combs = enumerate_left_combs(t.chain_gens(), t.kind(), ell, 3);
  CHECK(combs.size() == 6);
  // degree beyond the weight bound is empty
  CHECK(chain_basis(t, 4, 3, os).empty());
  CHECK(chain_basis(t, 3, 1, os).size() == 1);
}

TEST_CASE("d squared vanishes on computable slices") {
  order_spec os;
  for (const char* name : {"tcom:2:1", "com"}) {
    groebner_data g = gb(name, name[0] == 'c' ? 4 : 3);
    operad_tables t = operad_tables::build(g, name[0] == 'c' ? 4 : 3);
    for (int arity = 2; arity <= 6; ++arity)
      for (int deg = -6; deg <= 3; ++deg) CHECK(d_squared_zero(t, arity, deg, os));
  }
  groebner_data g3 = gb("tcom:3:1", 5);
  operad_tables t3 = operad_tables::build(g3, 5);
  for (int arity = 3; arity <= 9; arity += 2)
    for (int deg = 0; deg <= 2; ++deg) CHECK(d_squared_zero(t3, arity, deg, os));
}

TEST_CASE("homology of the Com dual cobar is concentrated on the diagonal") {
  order_spec os;
  groebner_data g = gb("com", 4);
  operad_tables t = operad_tables::build(g, 4);
  auto h3 = homology_ranks(t, 3, os);
  // degrees -1 (one vertex) and -2 (two vertices): homology 0 and 2 = dim Lie(3)
  REQUIRE(h3.size() == 2);
  for (const auto& s : h3) {
    if (s.degree == -1) CHECK(s.homology == 0);
    if (s.degree == -2) CHECK(s.homology == 2);
  }
  auto h4 = homology_ranks(t, 4, os);
  for (const auto& s : h4) {
    if (s.degree == -3) CHECK(s.homology == 6);  // dim Lie(4)
    if (s.degree > -3) CHECK(s.homology == 0);
  }
}

TEST_CASE("mock n = 2: homology appears off the diagonal") {
  order_spec os;
  groebner_data g = gb("tcom:2:1", 3);
  operad_tables t = operad_tables::build(g, 3);
  auto h5 = homology_ranks(t, 5, os);
  bool nonzero_degree1 = false;
  for (const auto& s : h5)
    if (s.degree == 1 && s.homology > 0) nonzero_degree1 = true;
  CHECK(nonzero_degree1);
  // arity 1: nothing in positive degrees
  auto h1 = homology_ranks(t, 1, os);
  for (const auto& s : h1)
    if (s.degree > 0) CHECK(s.dim == 0);
}

TEST_CASE("boundary theorem: the left-comb sum is a boundary with the n! multiple") {
  order_spec os;
  groebner_data g = gb("tcom:2:1", 3);
  operad_tables t = operad_tables::build(g, 3);
  int ell = t.gen_of(2, 0);
  auto combs = enumerate_left_combs(t.chain_gens(), t.kind(), ell, 3);
  chain target;
  for (const auto& c : combs) target.emplace_back(c, rational(2));
  boundary_solution sol = solve_boundary(t, target, 1, os, 7);
  CHECK(sol.solvable);
  // check the preimage really maps to the target
  chain img = apply_differential(t, sol.preimage);
  std::map<std::vector<int>, rational> want;
  for (const auto& [m, c] : target) want[m.encoding()] = c;
  CHECK(img.size() == target.size());
  for (const auto& [m, c] : img) CHECK(want.at(m.encoding()) == c);
  // zero target has the zero solution
  boundary_solution z = solve_boundary(t, {}, 1, os);
  CHECK(z.solvable);
  CHECK(z.preimage.empty());
}

TEST_CASE("pure cycle certificate for n = 2") {
  order_spec os;
  groebner_data g = gb("tcom:2:1", 3);
  pure_cycle_result res = pure_cycle_report(g, 2, os, 12345);
  CHECK(res.arity == 5);
  CHECK(res.boundary_solved);
  CHECK(res.cycle_closed);
  CHECK(res.omega_in_beta_zero);
  CHECK(res.omega_coefficient != 0);
  CHECK(res.nonzero_in_homology);
  CHECK(res.full_rank_comparison);
  CHECK(res.d_squared_ok);
}
