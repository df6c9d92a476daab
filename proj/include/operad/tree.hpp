#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "operad/errors.hpp"

namespace operad {

enum class operad_kind { shuffle, nonsymmetric };

struct generator_info {
  std::string id;
  int arity = 2;
  int parity = 0;  // homological degree mod 2
  int weight = 1;
};

// Immutable table of generators; index order is the declared order and drives
// the letterwise comparison of path words.
class generator_set {
 public:
  generator_set() = default;
  explicit generator_set(std::vector<generator_info> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const generator_info& operator[](int i) const { return gens_[i]; }
  int index_of(const std::string& id) const;  // -1 when absent
  int require(const std::string& id) const;   // throws on unknown generator
  int max_arity() const { return max_arity_; }
  int min_arity() const { return min_arity_; }

 private:
  std::vector<generator_info> gens_;
  int max_arity_ = 0;
  int min_arity_ = 0;
};

struct tree_node {
  int gen = -1;  // -1 for a leaf
  int leaf = 0;  // 1-based leaf label when gen == -1
  std::vector<tree_node> kids;

  bool is_leaf() const { return gen < 0; }
};

// A canonical tree monomial.  Shuffle kind: minimal leaf labels of the
// children strictly increase left to right at every vertex.  Nonsymmetric
// kind: leaf labels read 1..arity in planar order.
class tree_mono {
 public:
  tree_mono() : node_{-1, 1, {}}, arity_(1), weight_(0), parity_(0) {}  // the unit

  // Validates the canonical form for the given kind.
  tree_mono(const generator_set& gs, operad_kind kind, tree_node root);

  static tree_mono unit() { return tree_mono(); }
  static tree_mono vertex(const generator_set& gs, operad_kind kind, int gen);

  const tree_node& root() const { return node_; }
  int arity() const { return arity_; }
  int weight() const { return weight_; }
  int parity() const { return parity_; }
  bool is_unit() const { return node_.is_leaf(); }
  int num_vertices() const { return num_vertices_; }

  // Preorder encoding used for hashing and structural equality.
  const std::vector<int>& encoding() const { return enc_; }

  bool operator==(const tree_mono& o) const { return enc_ == o.enc_; }
  bool operator!=(const tree_mono& o) const { return enc_ != o.enc_; }
  bool operator<(const tree_mono& o) const { return enc_ < o.enc_; }  // structural, not the monomial order

  std::string text(const generator_set& gs) const;

 private:
  friend class tree_builder;
  tree_node node_;
  int arity_;
  int weight_;
  int parity_;
  int num_vertices_ = 0;
  std::vector<int> enc_;

  void finish(const generator_set& gs, operad_kind kind);
};

struct tree_hash {
  size_t operator()(const tree_mono& t) const {
    size_t h = 1469598103934665603ull;
    for (int v : t.encoding()) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// An (m-1, n-i)-unshuffle: the images sigma(i+1..n+m-1), both blocks increasing.
struct unshuffle {
  int slot = 1;   // i
  int inner = 1;  // m
  int outer = 1;  // n
  std::vector<int> values;

  static unshuffle identity(int slot, int inner, int outer);
  bool is_identity() const;
  int sign() const;  // sgn of the permutation on {slot+1, .., outer+inner-1}
  bool operator==(const unshuffle& o) const {
    return slot == o.slot && inner == o.inner && outer == o.outer && values == o.values;
  }
};

// All unshuffles in lexicographic order of the inner block.
std::vector<unshuffle> enumerate_unshuffles(int slot, int inner, int outer);

struct signed_tree {
  tree_mono mono;
  int sign = 1;
};

// Infinitesimal shuffle product outer o_{i,sigma} inner with the Koszul sign
// of sorting the (outer, inner) orientation into the result's preorder.
signed_tree compose(const generator_set& gs, operad_kind kind, const tree_mono& outer,
                    const unshuffle& u, const tree_mono& inner);

// Iterated first-slot composition with identity-block unshuffles.
tree_mono left_comb(const generator_set& gs, operad_kind kind, const std::vector<int>& gens);

// All left combs of `count` copies of `gen` over all unshuffle choices.
std::vector<tree_mono> enumerate_left_combs(const generator_set& gs, operad_kind kind, int gen,
                                            int count);

// An occurrence of a divisor D in T: the preorder ids (over internal vertices
// of T) matched by D's vertices, plus for each leaf of D the preorder id (over
// all nodes of T) of the hanging subtree's root.
struct occurrence {
  std::vector<int> vertices;
  std::vector<int> leaf_nodes;
  bool right_divisor = false;
};

std::vector<occurrence> divisor_occurrences(const generator_set& gs, const tree_mono& divisor,
                                            const tree_mono& tree);

// R_d(T): right divisors of weight d (full subtrees); pairwise node-disjoint.
std::vector<occurrence> right_divisors_weight(const generator_set& gs, const tree_mono& tree,
                                              int d);

// The divisor monomial extracted from an occurrence (collapse of the pattern).
tree_mono occurrence_pattern(const generator_set& gs, operad_kind kind, const tree_mono& tree,
                             const occurrence& occ);

// Replace the matched pattern by `replacement` (same arity as the divisor);
// the sign compares the canonical orientations of both composition readings.
signed_tree replace_occurrence(const generator_set& gs, operad_kind kind, const tree_mono& tree,
                               const occurrence& occ, const tree_mono& replacement);

// Collapse every listed right-divisor occurrence to a leaf and renumber.
tree_mono strip_right_divisors(const generator_set& gs, operad_kind kind, const tree_mono& tree,
                               const std::vector<occurrence>& occs);

enum class cmp { less, equal, greater };

// Monomial orders.  The default ("rpdl") compares weight first, then the
// root-to-leaf path words leaf by leaf with reversed length convention
// (shorter word larger, then letterwise by declared generator order), then
// the planar leaf sequence.  Scanning leaves by label in forward order keeps
// the comparison compatible with compositions in both arguments; the
// reversed length convention is what makes left combs normal for Lie.
struct order_spec {
  bool weight_first = true;
  bool reverse_leaf_order = false;  // forward label scan
  bool longer_word_larger = false;  // shorter word larger
  bool higher_gen_larger = true;    // later-declared generator is the bigger letter
  bool planar_larger = true;        // tiebreak on the planar leaf sequence

  std::string name() const;
  static order_spec rpdl() { return order_spec{}; }
  static order_spec from_name(const std::string& name);
};

cmp compare(const order_spec& os, const tree_mono& a, const tree_mono& b);
inline bool order_less(const order_spec& os, const tree_mono& a, const tree_mono& b) {
  return compare(os, a, b) == cmp::less;
}

// Enumerates canonical monomials of the given arity (and weight if set),
// pruning any subtree for which `prune` returns true.  `visit` returning
// false stops the enumeration.
void for_each_tree_monomial(const generator_set& gs, operad_kind kind, int arity,
                            std::optional<int> weight,
                            const std::function<bool(const tree_mono&)>& visit,
                            const std::function<bool(const tree_mono&)>& prune = {});

std::vector<tree_mono> enumerate_tree_monomials(const generator_set& gs, operad_kind kind,
                                                int arity, std::optional<int> weight,
                                                const order_spec& os);

// Maximal weight of an arity-n monomial, or nullopt when unbounded (unary
// generators present).
std::optional<int> max_weight_at_arity(const generator_set& gs, int arity);

// Leaf relabelling: label l becomes map[l] (1-based; map[0] unused).
tree_node relabel_tree(const tree_node& n, const std::vector<int>& map);

// Ordered partitions of the sorted block into k parts with increasing minima
// (shuffle) or consecutive intervals (nonsymmetric).
void for_each_partition(const std::vector<int>& block, int k, operad_kind kind,
                        const std::function<void(const std::vector<std::vector<int>>&)>& cb);

}  // namespace operad
