#pragma once

#include <optional>
#include <string>
#include <vector>

#include "operad/exact.hpp"
#include "operad/tree.hpp"

namespace operad {

// A homogeneous signed combination of tree monomials, terms sorted descending
// under the active order (leading term first), no zero coefficients.
class opoly {
 public:
  opoly() = default;
  opoly(const order_spec& os, std::vector<std::pair<tree_mono, rational>> terms);

  bool zero() const { return terms_.empty(); }
  const std::vector<std::pair<tree_mono, rational>>& terms() const { return terms_; }
  const tree_mono& lead() const;
  const rational& lead_coeff() const;
  int arity() const { return zero() ? 0 : terms_.front().first.arity(); }
  int weight() const { return zero() ? 0 : terms_.front().first.weight(); }
  int parity() const { return zero() ? 0 : terms_.front().first.parity(); }
  size_t size() const { return terms_.size(); }

  opoly scaled(const rational& c) const;
  bool operator==(const opoly& o) const { return terms_ == o.terms_; }

  std::string text(const generator_set& gs) const;

 private:
  std::vector<std::pair<tree_mono, rational>> terms_;
};

opoly add(const order_spec& os, const opoly& a, const opoly& b);
opoly axpy(const order_spec& os, const opoly& a, const rational& c, const opoly& b);

// Monomial action of the adjacent transposition (j, j+1) on a generator.
struct action_entry {
  int image = -1;  // generator index
  int sign = 1;
};

// Per generator: entries for transpositions s_1..s_{arity-1}.  Checked against
// the Coxeter relations of S_arity at construction.
class symmetric_actions {
 public:
  symmetric_actions() = default;
  symmetric_actions(const generator_set& gs, std::vector<std::vector<action_entry>> table);

  bool empty() const { return table_.empty(); }
  const action_entry& act(int gen, int transposition) const;  // s_{transposition}, 1-based

  const std::vector<std::vector<action_entry>>& table() const { return table_; }

 private:
  std::vector<std::vector<action_entry>> table_;
};

enum class presentation_kind { shuffle, nonsymmetric, symmetric_input };

struct presentation {
  std::string name;
  presentation_kind kind = presentation_kind::shuffle;
  generator_set gens;
  symmetric_actions actions;  // required for symmetric_input
  std::vector<opoly> relations;

  operad_kind tree_kind() const {
    return kind == presentation_kind::nonsymmetric ? operad_kind::nonsymmetric
                                                   : operad_kind::shuffle;
  }
};

void validate_presentation(const presentation& p);

// Sorts children at every vertex, resolving slot transpositions through the
// generator actions and Koszul block signs.  The input tree may carry an
// arbitrary leaf bijection and arbitrary child order.
signed_tree canonicalize(const generator_set& gs, const symmetric_actions& acts, operad_kind kind,
                         tree_node raw);

// Leaf relabelling l -> perm[l-1] followed by canonicalisation.
opoly act_on_leaves(const generator_set& gs, const symmetric_actions& acts, const order_spec& os,
                    const opoly& p, const std::vector<int>& perm);

// Expands a symmetric-input presentation into a shuffle presentation spanning
// the same ideal: every relation is replaced by a spanning set of its
// S_n-orbit, written on shuffle monomials.
presentation symmetric_to_shuffle(const presentation& p, const order_spec& os);

// Bilinear extension of the signed composition.
opoly substitute(const generator_set& gs, operad_kind kind, const order_spec& os,
                 const opoly& outer, const unshuffle& u, const opoly& inner);

}  // namespace operad
