#pragma once

#include "operad/rewrite.hpp"
#include "operad/veronese.hpp"

namespace operad {

struct dual_presentation {
  presentation pres;
  std::string pairing_convention;  // records the sign rule used
};

// Sign of the monomial-diagonal pairing on a weight-2 monomial y o_{i,s} y':
// sgn(s) * (-1)^(i-1).  Chosen so the dual of the Com preset is the Lie
// relation on the nose; recorded in every dual_presentation.
int pairing_sign(const generator_set& gens, const tree_mono& two_vertex_mono);

// Koszul dual of a presentation whose relations all have two vertices.
// Generator parities shift by arity(y) - 2 - parity(y) mod 2.
dual_presentation quadratic_dual(const presentation& p, const order_spec& os);

// Parity-level operadic suspension for single-generator-arity presentations:
// characters flip by sgn, weight-2 relations twist by (-1)^((i-1)(n-1)).
presentation suspend_parity(const presentation& p, const order_spec& os);

// The pure weight-k dual, computed through the transpose of the Veronese
// evaluation (the cobar-side route); span-equal to
// quadratic_dual(quadratic_veronese(P, k)).
dual_presentation pure_homotopy(const groebner_data& g, int k);

}  // namespace operad
