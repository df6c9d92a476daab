#pragma once

#include <map>
#include <optional>
#include <vector>

#include "operad/linalg.hpp"
#include "operad/opoly.hpp"

namespace operad {

struct completion_bound {
  int max_arity = 0;
  int max_weight = 0;
};

// Weight needed so that every monomial of arity <= max_arity lies inside the
// completed region.
completion_bound bound_for_arity(const generator_set& gs, int max_arity);

class groebner_data {
 public:
  const presentation& pres() const { return pres_; }           // shuffle or nonsymmetric
  const presentation& source() const { return source_; }       // as handed in
  const order_spec& order() const { return os_; }
  const completion_bound& bound() const { return bound_; }
  const std::vector<opoly>& basis() const { return basis_; }
  operad_kind kind() const { return pres_.tree_kind(); }
  const generator_set& gens() const { return pres_.gens; }

  bool completed(int arity, int weight) const {
    return arity <= bound_.max_arity && weight <= bound_.max_weight;
  }
  void require_completed(int arity, int weight) const {
    if (!completed(arity, weight)) throw not_completed_error(arity, weight);
  }

  // True iff some basis lead divides the monomial anchored at its root.
  bool reducible_at_root(const tree_mono& t) const;

  std::vector<tree_mono> normal_monomials(int arity, std::optional<int> weight = {}) const;
  long count_normal(int arity) const;

 private:
  friend groebner_data buchberger(const presentation&, const order_spec&, completion_bound);
  presentation source_;
  presentation pres_;
  order_spec os_;
  completion_bound bound_;
  std::vector<opoly> basis_;
};

groebner_data buchberger(const presentation& p, const order_spec& os, completion_bound bound);

// The unique reduction of p modulo the basis; requires p inside the completed
// region.
opoly normal_form(const groebner_data& g, const opoly& p);

// Reduction that does not consult the completion region (used internally and
// by callers that reason about slices themselves).
opoly reduce_full(const generator_set& gs, operad_kind kind, const order_spec& os,
                  const std::vector<opoly>& basis, const opoly& p);

struct span_result {
  std::vector<tree_mono> leads;
  std::vector<tree_mono> normals;
  std::vector<opoly> reduced_basis;
  std::map<int, long> normal_by_weight;
  long dim = 0;
};

// Linear-algebra oracle for one arity slice of the relation ideal.
span_result span_reduce(const presentation& p, const order_spec& os, int arity);

std::vector<long> dims(const groebner_data& g, int max_arity);

struct quadratic_report {
  bool quadratic = true;
  std::vector<opoly> offending;  // weight > 2 in the standard grading
  std::vector<opoly> linear;     // single-vertex elements (generator eliminations)
};

quadratic_report is_quadratic_up_to(const groebner_data& g);

}  // namespace operad
