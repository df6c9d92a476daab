#pragma once

#include <optional>
#include <string>
#include <vector>

#include "operad/rewrite.hpp"

namespace operad {

// The generators Y of the d-th Veronese power: all weight-d normal monomials.
struct veronese_basis {
  int d = 0;
  std::vector<tree_mono> elements;  // in the source operad's monomial order
  generator_set ygens;              // fresh ids y1, y2, ...; weight d each
};

veronese_basis veronese_generators(const groebner_data& g, int d);

// dim of the weight-multiple-of-d part, per arity 1..max_arity.
std::vector<long> naive_dims(const groebner_data& g, int d, int max_arity);

// Membership of T in the suboperad of the free operad generated by the
// weight-d component, by the iterated right-divisor test.
bool free_membership(const generator_set& gs, operad_kind kind, const tree_mono& t, int d);

// Brute-force oracle: backtracking over all ways to strip weight-d right
// divisors one at a time.
bool free_membership_bruteforce(const generator_set& gs, operad_kind kind, const tree_mono& t,
                                int d);

// Evaluation of the weight-2 slice of T(Y) into the source operad.
struct veronese_evaluation {
  veronese_basis basis;
  // per arity: the T(Y)_(2) monomials and their normal forms in the source
  struct slice {
    int arity = 0;
    std::vector<tree_mono> ymonos;       // trees over ygens, two vertices
    std::vector<opoly> images;           // normal forms in the source operad
    std::vector<tree_mono> source_basis; // weight-2d normal monomials of the source
  };
  std::vector<slice> slices;
};

veronese_evaluation evaluate_veronese_square(const groebner_data& g, int d);

// Presentation of qP^[d]: generators Y, relations = kernel of the evaluation.
presentation quadratic_veronese(const groebner_data& g, int d);

// dims of the suboperad generated by the weight-d component, by span closure.
std::vector<long> suboperad_dims(const groebner_data& g, int d, int max_arity);

struct pbw_report {
  bool pbw = false;
  bool quadratic_gb = false;
  std::vector<tree_mono> failing;  // weight-2d normal monomials outside T(X)^[d]
};

pbw_report pbw_check(const groebner_data& g, int d);

bool leftcomb_spanning(const groebner_data& g, int max_arity);

std::vector<long> di_dims(const std::vector<long>& dims);

}  // namespace operad
