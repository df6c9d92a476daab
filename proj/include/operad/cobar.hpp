#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "operad/rewrite.hpp"

namespace operad {

// The truncated operad materialised from a Groebner basis: normal-monomial
// bases per arity with integer internal degrees, and every pairwise
// composition expanded over those bases.
class operad_tables {
 public:
  struct element {
    tree_mono mono;  // in the source operad's monomial basis
    int intdeg = 0;  // integer internal degree (sum of vertex parities)
  };
  struct expansion {
    int outer = 0, inner = 0;  // chain generator ids
    unshuffle u;
    rational coef;
    tree_mono pattern;  // the two-vertex chain tree outer o_u inner
  };

  static operad_tables build(const groebner_data& g, int arity_bound);

  int arity_bound() const { return arity_bound_; }
  const std::vector<element>& basis(int arity) const;
  const generator_set& chain_gens() const { return chain_gens_; }
  operad_kind kind() const { return kind_; }
  int gen_of(int arity, int index) const;                       // chain generator id
  const std::pair<int, int>& elem_of(int gen) const;            // (arity, index)
  const std::vector<expansion>& expansions(int gen) const;      // differential data
  int intdeg_of_gen(int gen) const;

 private:
  int arity_bound_ = 0;
  operad_kind kind_ = operad_kind::shuffle;
  std::vector<std::vector<element>> basis_;  // [arity]
  generator_set chain_gens_;
  std::vector<std::pair<int, int>> gen_elem_;
  std::map<std::pair<int, int>, int> elem_gen_;
  std::vector<std::vector<expansion>> expansions_;
};

// A chain of the cobar complex: a sparse combination of chain trees.
using chain = std::vector<std::pair<tree_mono, rational>>;

int chain_degree(const operad_tables& t, const tree_mono& m);

// All chain monomials of the slice, sorted under the order.
std::vector<tree_mono> chain_basis(const operad_tables& t, int arity, int degree,
                                   const order_spec& os);

// The cobar differential of a single chain monomial.
chain differential_of(const operad_tables& t, const tree_mono& m);
chain apply_differential(const operad_tables& t, const chain& c);

bool d_squared_zero(const operad_tables& t, int arity, int degree, const order_spec& os);

struct homology_slice {
  int degree = 0;
  long dim = 0;
  long rank_out = 0;  // rank of the differential leaving this degree
  long rank_in = 0;   // rank of the differential entering from degree+1
  long homology = 0;
};

std::vector<homology_slice> homology_ranks(const operad_tables& t, int arity,
                                           const order_spec& os);

struct boundary_solution {
  bool solvable = false;
  chain preimage;
  std::vector<tree_mono> zero_coefficient;  // basis monomials missing from the preimage
  long kernel_dim = 0;
};

// Solves d x = target with x one degree above the target; least-index pivots.
boundary_solution solve_boundary(const operad_tables& t, const chain& target, int degree_of_x,
                                 const order_spec& os, unsigned long seed = 0,
                                 int nonzero_witness_attempts = 32);

struct pure_cycle_result {
  int n = 0;
  int arity = 0;  // n^2 + n - 1
  bool boundary_solved = false;
  bool nu_all_nonzero = false;
  bool cycle_closed = false;          // d(alpha - beta) = 0
  bool omega_in_beta_zero = false;
  rational omega_coefficient;         // in alpha - beta
  bool nonzero_in_homology = false;   // certified by rank comparison
  long image_rank = 0, extended_rank = 0;  // on the certifying row set
  long certificate_rows = 0;
  bool full_rank_comparison = false;  // whole slice (small n) vs restricted rows
  bool d_squared_ok = false;
  std::string detail;
};

// Builds the tCom^n_1 dual-cobar data and certifies the paper's degree-1
// cycle; n in {2, 3}.
pure_cycle_result pure_cycle_report(const groebner_data& tcom_n_1, int n, const order_spec& os,
                                    unsigned long seed = 0);

}  // namespace operad
