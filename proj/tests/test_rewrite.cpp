#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operad/io.hpp"
#include "operad/presets.hpp"
#include "operad/rewrite.hpp"

using namespace operad;

namespace {

std::vector<long> gb_dims(const std::string& name, int max_arity) {
  order_spec os;
  presentation p = preset(name, os);
  groebner_data g = buchberger(p, os, bound_for_arity(p.gens, max_arity));
  return dims(g, max_arity);
}

}  // namespace

TEST_CASE("span_reduce oracle on small presets") {
  order_spec os;
  CHECK(span_reduce(preset("lie", os), os, 3).dim == 2);
  CHECK(span_reduce(preset("lie", os), os, 4).dim == 6);
  CHECK(span_reduce(preset("com", os), os, 4).dim == 1);
  CHECK(span_reduce(preset("com", os), os, 5).dim == 1);
  CHECK(span_reduce(preset("perm", os), os, 4).dim == 4);
  CHECK(span_reduce(preset("prelie", os), os, 3).dim == 9);
  CHECK(span_reduce(preset("ass", os), os, 4).dim == 24);
}

TEST_CASE("Lie has a quadratic Groebner basis with left-comb normal monomials") {
  order_spec os;
  presentation lie = preset("lie", os);
  groebner_data g = buchberger(lie, os, bound_for_arity(lie.gens, 6));
  CHECK(is_quadratic_up_to(g).quadratic);
  std::vector<long> d = dims(g, 6);
  CHECK(d == std::vector<long>{1, 1, 2, 6, 24, 120});
  // normal monomials at arity 3 are the two left combs
  auto normals = g.normal_monomials(3);
  REQUIRE(normals.size() == 2);
  CHECK(normals[0].text(g.gens()) == "b(b(1,2),3)");
  CHECK(normals[1].text(g.gens()) == "b(b(1,3),2)");
}

TEST_CASE("tCom dims distinguish parities") {
  CHECK(gb_dims("tcom:2:0", 7) == std::vector<long>{1, 1, 1, 1, 1, 1, 1});
  CHECK(gb_dims("tcom:2:1", 7) == std::vector<long>{1, 1, 1, 0, 0, 0, 0});
  CHECK(gb_dims("tcom:3:0", 7) == std::vector<long>{1, 0, 1, 0, 1, 0, 1});
  CHECK(gb_dims("tcom:3:1", 7) == std::vector<long>{1, 0, 1, 0, 1, 0, 0});
}

TEST_CASE("the odd tCom basis contains the cubic monomial") {
  // the literal Groebner-basis membership holds for the forward path order;
  // under the default order the monomial is still in the ideal and the basis
  // is still non-quadratic
  order_spec fwd = order_spec::from_name("pdl-forward");
  presentation p = preset("tcom:2:1", fwd);
  groebner_data g = buchberger(p, fwd, bound_for_arity(p.gens, 5));
  opoly rc = parse_polynomial("m(1,m(2,m(3,4)))", g.pres(), fwd);
  bool found = false;
  for (const auto& b : g.basis())
    if (b.lead() == rc.lead() && b.size() == 1) found = true;
  CHECK(found);
  CHECK(normal_form(g, rc).zero());

  order_spec os;
  presentation p2 = preset("tcom:2:1", os);
  groebner_data g2 = buchberger(p2, os, bound_for_arity(p2.gens, 5));
  CHECK(normal_form(g2, parse_polynomial("m(1,m(2,m(3,4)))", g2.pres(), os)).zero());
  CHECK(!is_quadratic_up_to(g2).quadratic);
}

TEST_CASE("example2: the listed relations are already a Groebner basis") {
  // the paper's ordering mu > rho > nu is realised by the forward path order
  order_spec os = order_spec::from_name("pdl-forward");
  presentation p = preset("example2", os);
  groebner_data g = buchberger(p, os, bound_for_arity(p.gens, 7));
  CHECK(g.basis().size() == 14);
  CHECK(is_quadratic_up_to(g).quadratic);
  CHECK(dims(g, 3) == std::vector<long>{1, 3, 4});

  // normal monomials of weight two: A = nu o1 nu, B = mu o2 nu, C = rho o2 nu, D = nu o2 nu
  auto normals = g.normal_monomials(3);
  REQUIRE(normals.size() == 4);

  // B o_1 D grafts D into slot 1 of B
  presentation pr = g.pres();
  opoly B = parse_polynomial("mu(1,nu(2,3))", pr, os);
  opoly D = parse_polynomial("nu(1,nu(2,3))", pr, os);
  opoly A = parse_polynomial("nu(nu(1,2),3)", pr, os);
  opoly BD = substitute(pr.gens, operad_kind::nonsymmetric, os, B, unshuffle::identity(1, 3, 3), D);
  opoly nf = normal_form(g, BD);
  // expected: (rho o_2 (nu o_2 nu)) o_2 nu
  opoly rho_p = parse_polynomial("rho(1,2)", pr, os);
  opoly t1 = substitute(pr.gens, operad_kind::nonsymmetric, os, rho_p, unshuffle::identity(2, 3, 2),
                        parse_polynomial("nu(1,nu(2,3))", pr, os));
  opoly t2 = substitute(pr.gens, operad_kind::nonsymmetric, os, t1, unshuffle::identity(2, 2, 4),
                        parse_polynomial("nu(1,2)", pr, os));
  CHECK(!nf.zero());
  CHECK(nf == t2);

  // the two cubic identities: B o1 (D o1 A) = 0 = B o1 (D o1 D)
  opoly DA = substitute(pr.gens, operad_kind::nonsymmetric, os, D, unshuffle::identity(1, 3, 3), A);
  opoly DD = substitute(pr.gens, operad_kind::nonsymmetric, os, D, unshuffle::identity(1, 3, 3), D);
  opoly BDA = substitute(pr.gens, operad_kind::nonsymmetric, os, B, unshuffle::identity(1, 5, 3), DA);
  opoly BDD = substitute(pr.gens, operad_kind::nonsymmetric, os, B, unshuffle::identity(1, 5, 3), DD);
  CHECK(normal_form(g, BDA).zero());
  CHECK(normal_form(g, BDD).zero());
}

TEST_CASE("normal form is idempotent and detects ideal membership") {
  order_spec os;
  presentation lie = preset("lie", os);
  groebner_data g = buchberger(lie, os, bound_for_arity(lie.gens, 5));
  const opoly& jac = g.pres().relations[0];
  opoly b(os, {{tree_mono::vertex(g.gens(), operad_kind::shuffle, 0), rational(1)}});
  // substitute the Jacobi relation into slot 1 of the bracket
  for (const auto& u : enumerate_unshuffles(1, 3, 2)) {
    opoly elem = substitute(g.gens(), operad_kind::shuffle, os, b, u, jac);
    CHECK(normal_form(g, elem).zero());
  }
  opoly p = parse_polynomial("b(b(b(1,2),3),4) + 2 * b(b(b(1,3),2),4)", g.pres(), os);
  opoly nf = normal_form(g, p);
  CHECK(normal_form(g, nf) == nf);
}

TEST_CASE("oracle agreement between buchberger and span_reduce") {
  order_spec os;
  for (const char* name : {"lie", "com", "ass", "perm", "example1", "example2"}) {
    presentation p = preset(name, os);
    groebner_data g = buchberger(p, os, bound_for_arity(p.gens, 5));
    for (int a = 2; a <= 5; ++a) {
      long via_gb = g.count_normal(a);
      long via_span = span_reduce(p, os, a).dim;
      CHECK_MESSAGE(via_gb == via_span, name, " at arity ", a);
    }
  }
}
