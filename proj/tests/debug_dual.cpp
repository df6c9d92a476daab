#include <cstdio>

#include "operad/dual.hpp"
#include "operad/io.hpp"
#include "operad/presets.hpp"

using namespace operad;

int main() {
  order_spec os;
  presentation lie = preset("lie", os);
  groebner_data glie = buchberger(lie, os, bound_for_arity(lie.gens, 5));
  presentation lts = quadratic_veronese(glie, 2);
  dual_presentation d = quadratic_dual(lts, os);
  std::printf("dual gens: %d, parity %d\n", d.pres.gens.size(), d.pres.gens[0].parity);
  std::printf("dual relations: %zu\n", d.pres.relations.size());
  groebner_data g = buchberger(d.pres, os, bound_for_arity(d.pres.gens, 7));
  std::printf("GB size %zu, quadratic %d\n", g.basis().size(), (int)is_quadratic_up_to(g).quadratic);
  auto dm = dims(g, 7);
  std::printf("cominf3 dims: ");
  for (long v : dm) std::printf("%ld ", v);
  std::printf("(want 1 0 2 0 16 0 272)\n");

  groebner_data gcom = buchberger(preset("com", os), os, bound_for_arity(lie.gens, 5));
  dual_presentation dl = pure_homotopy(gcom, 2);
  std::printf("linf gens: %d parity %d relations %zu\n", dl.pres.gens.size(),
              dl.pres.gens[0].parity, dl.pres.relations.size());
  groebner_data gl = buchberger(dl.pres, os, bound_for_arity(dl.pres.gens, 7));
  auto lm = dims(gl, 7);
  std::printf("linf3 dims: ");
  for (long v : lm) std::printf("%ld ", v);
  std::printf("(want 1 0 1 0 9 0 225)\n");
  for (const auto& r : dl.pres.relations) std::printf("rel: %s\n", r.text(dl.pres.gens).c_str());
  return 0;
}
