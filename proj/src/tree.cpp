#include "operad/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace operad {

generator_set::generator_set(std::vector<generator_info> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.arity < 1) throw error("generator " + g.id + ": arity must be >= 1");
    if (g.weight < 1) throw error("generator " + g.id + ": weight must be >= 1");
    if (g.parity != 0 && g.parity != 1) throw error("generator " + g.id + ": parity must be 0 or 1");
    if (!seen.insert(g.id).second) throw error("duplicate generator id " + g.id);
  }
  max_arity_ = 0;
  min_arity_ = gens_.empty() ? 0 : gens_.front().arity;
  for (const auto& g : gens_) {
    max_arity_ = std::max(max_arity_, g.arity);
    min_arity_ = std::min(min_arity_, g.arity);
  }
}

int generator_set::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[i].id == id) return i;
  return -1;
}

int generator_set::require(const std::string& id) const {
  int i = index_of(id);
  if (i < 0) throw error("unknown generator " + id);
  return i;
}

namespace {

// Per-node data in all-node preorder.
struct flat_tree {
  std::vector<const tree_node*> node;
  std::vector<int> parent;
  std::vector<int> min_leaf;
  std::vector<int> sub_weight;
  std::vector<int> sub_parity;
  std::vector<int> verts;  // all-node ids of internal vertices, in preorder
  std::vector<int> parity; // per all-node id: vertex parity (0 for leaves)

  int walk(const generator_set& gs, const tree_node& n, int parent_id) {
    int id = static_cast<int>(node.size());
    node.push_back(&n);
    parent.push_back(parent_id);
    min_leaf.push_back(0);
    sub_weight.push_back(0);
    sub_parity.push_back(0);
    parity.push_back(0);
    if (n.is_leaf()) {
      min_leaf[id] = n.leaf;
    } else {
      verts.push_back(id);
      const auto& info = gs[n.gen];
      parity[id] = info.parity;
      int mn = 0, w = info.weight, p = info.parity;
      for (const auto& k : n.kids) {
        int cid = walk(gs, k, id);
        if (mn == 0 || min_leaf[cid] < mn) mn = min_leaf[cid];
        w += sub_weight[cid];
        p = (p + sub_parity[cid]) % 2;
      }
      min_leaf[id] = mn;
      sub_weight[id] = w;
      sub_parity[id] = p;
    }
    return id;
  }
};

flat_tree flatten(const generator_set& gs, const tree_node& root) {
  flat_tree f;
  f.walk(gs, root, -1);
  return f;
}

void collect_leaves(const tree_node& n, std::vector<int>& out) {
  if (n.is_leaf()) {
    out.push_back(n.leaf);
    return;
  }
  for (const auto& k : n.kids) collect_leaves(k, out);
}

int min_leaf_of(const tree_node& n) {
  if (n.is_leaf()) return n.leaf;
  int mn = 0;
  for (const auto& k : n.kids) {
    int m = min_leaf_of(k);
    if (mn == 0 || m < mn) mn = m;
  }
  return mn;
}

void validate_node(const generator_set& gs, operad_kind kind, const tree_node& n) {
  if (n.is_leaf()) {
    if (n.leaf < 1) throw error("leaf label must be >= 1");
    return;
  }
  if (n.gen < 0 || n.gen >= gs.size()) throw error("invalid generator index in tree");
  if (static_cast<int>(n.kids.size()) != gs[n.gen].arity)
    throw error("vertex " + gs[n.gen].id + " has wrong number of children");
  int prev = 0;
  for (const auto& k : n.kids) {
    int m = min_leaf_of(k);
    if (m <= prev) throw error(kind == operad_kind::shuffle
                                   ? "shuffle condition violated: child minima must increase"
                                   : "tree is not in canonical form");
    prev = m;
    validate_node(gs, kind, k);
  }
}

void encode_node(const tree_node& n, std::vector<int>& enc) {
  if (n.is_leaf()) {
    enc.push_back(-n.leaf);
    return;
  }
  enc.push_back(n.gen + 1);
  for (const auto& k : n.kids) encode_node(k, enc);
}

void text_node(const generator_set& gs, const tree_node& n, std::string& out) {
  if (n.is_leaf()) {
    out += std::to_string(n.leaf);
    return;
  }
  out += gs[n.gen].id;
  out += '(';
  bool first = true;
  for (const auto& k : n.kids) {
    if (!first) out += ',';
    first = false;
    text_node(gs, k, out);
  }
  out += ')';
}

}  // namespace

tree_mono::tree_mono(const generator_set& gs, operad_kind kind, tree_node root)
    : node_(std::move(root)), arity_(0), weight_(0), parity_(0) {
  finish(gs, kind);
}

void tree_mono::finish(const generator_set& gs, operad_kind kind) {
  std::vector<int> leaves;
  collect_leaves(node_, leaves);
  arity_ = static_cast<int>(leaves.size());
  std::vector<bool> seen(arity_ + 1, false);
  for (size_t pos = 0; pos < leaves.size(); ++pos) {
    int l = leaves[pos];
    if (l < 1 || l > arity_ || seen[l]) throw error("leaf labels must be a permutation of 1..arity");
    seen[l] = true;
    if (kind == operad_kind::nonsymmetric && l != static_cast<int>(pos) + 1)
      throw error("nonsymmetric monomial must read leaves 1..arity in planar order");
  }
  validate_node(gs, kind, node_);
  flat_tree f = flatten(gs, node_);
  weight_ = node_.is_leaf() ? 0 : f.sub_weight[0];
  parity_ = node_.is_leaf() ? 0 : f.sub_parity[0];
  num_vertices_ = static_cast<int>(f.verts.size());
  enc_.clear();
  encode_node(node_, enc_);
}

tree_mono tree_mono::vertex(const generator_set& gs, operad_kind kind, int gen) {
  if (gen < 0 || gen >= gs.size()) throw error("unknown generator index");
  tree_node n;
  n.gen = gen;
  for (int i = 1; i <= gs[gen].arity; ++i) {
    tree_node leaf;
    leaf.leaf = i;
    n.kids.push_back(std::move(leaf));
  }
  return tree_mono(gs, kind, std::move(n));
}

std::string tree_mono::text(const generator_set& gs) const {
  std::string out;
  text_node(gs, node_, out);
  return out;
}

unshuffle unshuffle::identity(int slot, int inner, int outer) {
  unshuffle u;
  u.slot = slot;
  u.inner = inner;
  u.outer = outer;
  for (int v = slot + 1; v <= outer + inner - 1; ++v) u.values.push_back(v);
  return u;
}

bool unshuffle::is_identity() const {
  for (size_t j = 0; j < values.size(); ++j)
    if (values[j] != slot + 1 + static_cast<int>(j)) return false;
  return true;
}

int unshuffle::sign() const {
  int inv = 0;
  for (size_t a = 0; a < values.size(); ++a)
    for (size_t b = a + 1; b < values.size(); ++b)
      if (values[a] > values[b]) ++inv;
  return inv % 2 ? -1 : 1;
}

std::vector<unshuffle> enumerate_unshuffles(int slot, int inner, int outer) {
  if (slot < 1 || slot > outer) throw error("unshuffle slot out of range");
  if (inner < 1) throw error("unshuffle inner arity must be >= 1");
  int lo = slot + 1, hi = outer + inner - 1;
  int pool = hi - lo + 1;  // n - i + m - 1 elements
  int pick = inner - 1;
  std::vector<unshuffle> out;
  std::vector<int> idx(pick);
  for (int j = 0; j < pick; ++j) idx[j] = j;
  while (true) {
    unshuffle u;
    u.slot = slot;
    u.inner = inner;
    u.outer = outer;
    std::vector<bool> used(pool, false);
    for (int j = 0; j < pick; ++j) {
      u.values.push_back(lo + idx[j]);
      used[idx[j]] = true;
    }
    for (int j = 0; j < pool; ++j)
      if (!used[j]) u.values.push_back(lo + j);
    out.push_back(std::move(u));
    // next combination in lexicographic order
    int j = pick - 1;
    while (j >= 0 && idx[j] == pool - pick + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int l = j + 1; l < pick; ++l) idx[l] = idx[l - 1] + 1;
  }
  return out;
}

namespace {

tree_node relabel_node(const tree_node& n, const std::vector<int>& map) {
  tree_node out;
  if (n.is_leaf()) {
    out.leaf = map[n.leaf];
    return out;
  }
  out.gen = n.gen;
  for (const auto& k : n.kids) out.kids.push_back(relabel_node(k, map));
  return out;
}

// Replaces the leaf labelled `slot` of `n` by `graft` (already relabelled).
tree_node graft_node(const tree_node& n, int slot, const tree_node& graft,
                     const std::vector<int>& outer_map) {
  tree_node out;
  if (n.is_leaf()) {
    if (n.leaf == slot) return graft;
    out.leaf = outer_map[n.leaf];
    return out;
  }
  out.gen = n.gen;
  for (const auto& k : n.kids) out.kids.push_back(graft_node(k, slot, graft, outer_map));
  return out;
}

// Number of odd vertices of `outer` whose preorder position is strictly after
// the position of leaf `slot`.
int odd_after_slot(const generator_set& gs, const tree_node& n, int slot, bool& seen) {
  if (n.is_leaf()) {
    if (n.leaf == slot) seen = true;
    return 0;
  }
  // preorder: this vertex first, then children
  int total = (seen && gs[n.gen].parity) ? 1 : 0;
  for (const auto& k : n.kids) total += odd_after_slot(gs, k, slot, seen);
  return total;
}

}  // namespace

signed_tree compose(const generator_set& gs, operad_kind kind, const tree_mono& outer,
                    const unshuffle& u, const tree_mono& inner) {
  int n = outer.arity(), m = inner.arity(), i = u.slot;
  if (i < 1 || i > n) throw error("composition slot out of range");
  if (u.inner != m || u.outer != n) throw error("unshuffle incompatible with arities");
  if (kind == operad_kind::nonsymmetric && !u.is_identity())
    throw error("nonsymmetric composition requires the identity unshuffle");
  if (static_cast<int>(u.values.size()) != m - 1 + n - i)
    throw error("unshuffle has wrong number of values");

  if (inner.is_unit()) return {outer, 1};
  if (outer.is_unit()) return {inner, 1};

  // leaf k of inner: 1 -> i, k -> values[k-2]
  std::vector<int> inner_map(m + 1, 0);
  inner_map[1] = i;
  for (int k = 2; k <= m; ++k) inner_map[k] = u.values[k - 2];
  // leaf j of outer: j < i -> j, j > i -> values[m-2+j-i]
  std::vector<int> outer_map(n + 1, 0);
  for (int j = 1; j < i; ++j) outer_map[j] = j;
  for (int j = i + 1; j <= n; ++j) outer_map[j] = u.values[m - 2 + j - i];

  tree_node grafted = relabel_node(inner.root(), inner_map);
  tree_node root = graft_node(outer.root(), i, grafted, outer_map);

  bool seen = false;
  int post = odd_after_slot(gs, outer.root(), i, seen);
  int sign = (inner.parity() * post) % 2 ? -1 : 1;
  return {tree_mono(gs, kind, std::move(root)), sign};
}

tree_mono left_comb(const generator_set& gs, operad_kind kind, const std::vector<int>& gens) {
  if (gens.empty()) throw error("left comb needs at least one generator");
  tree_mono acc = tree_mono::vertex(gs, kind, gens[0]);
  for (size_t j = 1; j < gens.size(); ++j) {
    int m = gs[gens[j]].arity;
    acc = compose(gs, kind, acc, unshuffle::identity(1, m, acc.arity()),
                  tree_mono::vertex(gs, kind, gens[j]))
              .mono;
  }
  return acc;
}

std::vector<tree_mono> enumerate_left_combs(const generator_set& gs, operad_kind kind, int gen,
                                            int count) {
  std::vector<tree_mono> cur = {tree_mono::vertex(gs, kind, gen)};
  int m = gs[gen].arity;
  for (int step = 1; step < count; ++step) {
    std::vector<tree_mono> next;
    tree_mono v = tree_mono::vertex(gs, kind, gen);
    for (const auto& t : cur)
      for (const auto& u : enumerate_unshuffles(1, m, t.arity()))
        next.push_back(compose(gs, kind, t, u, v).mono);
    cur = std::move(next);
  }
  return cur;
}

namespace {

struct matcher {
  const generator_set& gs;
  const flat_tree& f;
  std::vector<int> vertices;
  std::vector<int> leaf_nodes;  // by divisor leaf label, 1-based at [label-1]

  // Walks divisor node d against T's all-node id t.
  bool match(const tree_node& d, int t) {
    if (d.is_leaf()) {
      leaf_nodes[d.leaf - 1] = t;
      return true;
    }
    const tree_node* tn = f.node[t];
    if (tn->is_leaf() || tn->gen != d.gen) return false;
    vertices.push_back(t);
    int child = t + 1;
    for (size_t j = 0; j < d.kids.size(); ++j) {
      if (!match(d.kids[j], child)) return false;
      child = subtree_end(child);
    }
    return true;
  }

  int subtree_end(int id) const {
    // all-node preorder: end = id + number of nodes in the subtree
    int end = id + 1;
    const tree_node* n = f.node[id];
    if (!n->is_leaf()) {
      int c = id + 1;
      for (size_t j = 0; j < n->kids.size(); ++j) {
        c = subtree_end(c);
      }
      end = c;
    }
    return end;
  }
};

}  // namespace

std::vector<occurrence> divisor_occurrences(const generator_set& gs, const tree_mono& divisor,
                                            const tree_mono& tree) {
  std::vector<occurrence> out;
  if (divisor.is_unit()) {
    if (tree.is_unit()) {
      occurrence o;
      o.leaf_nodes = {0};
      o.right_divisor = true;
      out.push_back(std::move(o));
    }
    return out;
  }
  if (divisor.num_vertices() > tree.num_vertices()) return out;
  flat_tree f = flatten(gs, tree.root());
  int m = divisor.arity();
  for (int v : f.verts) {
    matcher mm{gs, f, {}, std::vector<int>(m, -1)};
    if (!mm.match(divisor.root(), v)) continue;
    // the hanging-subtree minima must be order-isomorphic to the divisor's leaf labels
    bool ok = true;
    for (int k = 1; k < m; ++k)
      if (f.min_leaf[mm.leaf_nodes[k - 1]] >= f.min_leaf[mm.leaf_nodes[k]]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    occurrence o;
    o.vertices = std::move(mm.vertices);
    o.leaf_nodes = std::move(mm.leaf_nodes);
    o.right_divisor = true;
    for (int ln : o.leaf_nodes)
      if (!f.node[ln]->is_leaf()) {
        o.right_divisor = false;
        break;
      }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<occurrence> right_divisors_weight(const generator_set& gs, const tree_mono& tree,
                                              int d) {
  if (d < 1) throw error("right divisor weight must be >= 1");
  std::vector<occurrence> out;
  if (tree.is_unit()) return out;
  flat_tree f = flatten(gs, tree.root());
  for (int v : f.verts) {
    if (f.sub_weight[v] != d) continue;
    occurrence o;
    // subtree span in all-node preorder
    matcher mm{gs, f, {}, {}};
    int end = mm.subtree_end(v);
    std::vector<std::pair<int, int>> leaves;  // (label, all-node id)
    for (int id = v; id < end; ++id) {
      if (f.node[id]->is_leaf())
        leaves.emplace_back(f.node[id]->leaf, id);
      else
        o.vertices.push_back(id);
    }
    std::sort(leaves.begin(), leaves.end());
    for (auto& [lab, id] : leaves) o.leaf_nodes.push_back(id);
    o.right_divisor = true;
    out.push_back(std::move(o));
  }
  return out;
}

namespace {

// groups: 0 context, 1 pattern, 2+k hanging k (k = divisor leaf index, 0-based)
int inversion_sign(const std::vector<std::pair<int, int>>& tagged /* (group, parity) in preorder */) {
  // natural order: stable by group; count odd-odd inversions between natural
  // order and preorder (= given order).
  int max_group = 0;
  for (const auto& [g, p] : tagged) max_group = std::max(max_group, g);
  std::vector<int> natural;  // preorder positions of odd vertices, listed in natural order
  for (int want = 0; want <= max_group; ++want) {
    for (size_t pos = 0; pos < tagged.size(); ++pos)
      if (tagged[pos].first == want && tagged[pos].second)
        natural.push_back(static_cast<int>(pos));
  }
  int inv = 0;
  for (size_t a = 0; a < natural.size(); ++a)
    for (size_t b = a + 1; b < natural.size(); ++b)
      if (natural[a] > natural[b]) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

tree_mono occurrence_pattern(const generator_set& gs, operad_kind kind, const tree_mono& tree,
                             const occurrence& occ) {
  flat_tree f = flatten(gs, tree.root());
  std::set<int> verts(occ.vertices.begin(), occ.vertices.end());
  std::map<int, int> leaf_label;  // all-node id of hanging root -> divisor leaf label
  for (size_t k = 0; k < occ.leaf_nodes.size(); ++k)
    leaf_label[occ.leaf_nodes[k]] = static_cast<int>(k) + 1;

  std::function<tree_node(int)> build = [&](int id) -> tree_node {
    tree_node out;
    auto it = leaf_label.find(id);
    if (it != leaf_label.end()) {
      out.leaf = it->second;
      return out;
    }
    const tree_node* n = f.node[id];
    out.gen = n->gen;
    int child = id + 1;
    matcher mm{gs, f, {}, {}};
    for (size_t j = 0; j < n->kids.size(); ++j) {
      out.kids.push_back(build(child));
      child = mm.subtree_end(child);
    }
    return out;
  };
  if (occ.vertices.empty()) return tree_mono::unit();
  return tree_mono(gs, kind, build(occ.vertices.front()));
}

namespace {

// Tags T's vertices by occurrence group and returns the orientation sign of
// the decomposition (context, pattern, hangings).
int decomposition_sign(const generator_set& gs, const tree_mono& tree, const occurrence& occ) {
  flat_tree f = flatten(gs, tree.root());
  std::set<int> verts(occ.vertices.begin(), occ.vertices.end());
  std::map<int, int> hang;  // all-node id -> group
  for (size_t k = 0; k < occ.leaf_nodes.size(); ++k)
    hang[occ.leaf_nodes[k]] = static_cast<int>(k) + 2;

  std::vector<std::pair<int, int>> tagged;
  std::vector<int> group_stack;
  std::function<void(int, int)> walk = [&](int id, int group) {
    auto it = hang.find(id);
    if (it != hang.end()) group = it->second;
    else if (verts.count(id)) group = 1;
    const tree_node* n = f.node[id];
    if (!n->is_leaf()) {
      tagged.emplace_back(group, f.parity[id]);
      int child = id + 1;
      matcher mm{gs, f, {}, {}};
      for (size_t j = 0; j < n->kids.size(); ++j) {
        walk(child, group);
        child = mm.subtree_end(child);
      }
    }
  };
  walk(0, 0);
  return inversion_sign(tagged);
}

}  // namespace

signed_tree replace_occurrence(const generator_set& gs, operad_kind kind, const tree_mono& tree,
                               const occurrence& occ, const tree_mono& replacement) {
  if (occ.vertices.empty()) throw error("cannot replace an empty occurrence");
  flat_tree f = flatten(gs, tree.root());

  int sign_before = decomposition_sign(gs, tree, occ);

  // Build the replaced tree and its tag list (group, parity) in preorder.
  matcher mm{gs, f, {}, {}};
  std::vector<std::pair<int, int>> tagged;
  int top = occ.vertices.front();

  std::function<tree_node(int, int)> clone = [&](int id, int group) -> tree_node {
    const tree_node* n = f.node[id];
    tree_node out;
    if (n->is_leaf()) {
      out.leaf = n->leaf;
      return out;
    }
    out.gen = n->gen;
    tagged.emplace_back(group, f.parity[id]);
    int child = id + 1;
    for (size_t j = 0; j < n->kids.size(); ++j) {
      out.kids.push_back(clone(child, group));
      child = mm.subtree_end(child);
    }
    return out;
  };

  std::function<tree_node(const tree_node&)> emit_replacement = [&](const tree_node& rn) -> tree_node {
    if (rn.is_leaf()) {
      int k = rn.leaf;  // divisor leaf label
      return clone(occ.leaf_nodes[k - 1], k + 1);
    }
    tree_node out;
    out.gen = rn.gen;
    tagged.emplace_back(1, gs[rn.gen].parity);
    for (const auto& kid : rn.kids) out.kids.push_back(emit_replacement(kid));
    return out;
  };

  std::function<tree_node(int)> rebuild = [&](int id) -> tree_node {
    if (id == top) return emit_replacement(replacement.root());
    const tree_node* n = f.node[id];
    tree_node out;
    if (n->is_leaf()) {
      out.leaf = n->leaf;
      return out;
    }
    out.gen = n->gen;
    tagged.emplace_back(0, f.parity[id]);
    int child = id + 1;
    for (size_t j = 0; j < n->kids.size(); ++j) {
      out.kids.push_back(rebuild(child));
      child = mm.subtree_end(child);
    }
    return out;
  };

  tree_node root = rebuild(0);
  int sign_after = inversion_sign(tagged);
  return {tree_mono(gs, kind, std::move(root)), sign_before * sign_after};
}

tree_mono strip_right_divisors(const generator_set& gs, operad_kind kind, const tree_mono& tree,
                               const std::vector<occurrence>& occs) {
  flat_tree f = flatten(gs, tree.root());
  std::set<int> tops;
  for (const auto& o : occs) {
    if (!o.right_divisor || o.vertices.empty()) throw error("strip expects right-divisor occurrences");
    tops.insert(o.vertices.front());
  }
  std::function<tree_node(int)> rebuild = [&](int id) -> tree_node {
    matcher mm{gs, f, {}, {}};
    tree_node out;
    if (tops.count(id)) {
      out.leaf = f.min_leaf[id];
      return out;
    }
    const tree_node* n = f.node[id];
    if (n->is_leaf()) {
      out.leaf = n->leaf;
      return out;
    }
    out.gen = n->gen;
    int child = id + 1;
    for (size_t j = 0; j < n->kids.size(); ++j) {
      out.kids.push_back(rebuild(child));
      child = mm.subtree_end(child);
    }
    return out;
  };
  tree_node root = rebuild(0);
  // renumber leaves order-preservingly
  std::vector<int> labels;
  collect_leaves(root, labels);
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> map(tree.arity() + 1, 0);
  for (size_t j = 0; j < sorted.size(); ++j) map[sorted[j]] = static_cast<int>(j) + 1;
  return tree_mono(gs, kind, relabel_node(root, map));
}

std::string order_spec::name() const {
  if (weight_first && !reverse_leaf_order && !longer_word_larger && higher_gen_larger &&
      planar_larger)
    return "rpdl";
  if (weight_first && !reverse_leaf_order && longer_word_larger && higher_gen_larger &&
      planar_larger)
    return "pdl-forward";
  std::string n = "path";
  n += weight_first ? "-deg" : "";
  n += reverse_leaf_order ? "-rev" : "-fwd";
  n += longer_word_larger ? "-long" : "-short";
  n += higher_gen_larger ? "" : "-genrev";
  n += planar_larger ? "" : "-planrev";
  return n;
}

order_spec order_spec::from_name(const std::string& name) {
  order_spec os;
  if (name == "rpdl" || name.empty()) return os;
  if (name == "pdl-forward") {
    os.longer_word_larger = true;
    return os;
  }
  if (name == "rpdl-genrev") {
    os.higher_gen_larger = false;
    return os;
  }
  throw error("unknown order spec " + name);
}

namespace {

void path_words(const tree_node& n, std::vector<int>& prefix, std::vector<std::vector<int>>& words) {
  if (n.is_leaf()) {
    words[n.leaf - 1] = prefix;
    return;
  }
  prefix.push_back(n.gen);
  for (const auto& k : n.kids) path_words(k, prefix, words);
  prefix.pop_back();
}

void planar_labels(const tree_node& n, std::vector<int>& out) {
  if (n.is_leaf()) {
    out.push_back(n.leaf);
    return;
  }
  for (const auto& k : n.kids) planar_labels(k, out);
}

}  // namespace

cmp compare(const order_spec& os, const tree_mono& a, const tree_mono& b) {
  if (a.arity() != b.arity()) throw error("compare: arity mismatch");
  if (os.weight_first && a.weight() != b.weight())
    return a.weight() > b.weight() ? cmp::greater : cmp::less;
  int n = a.arity();
  std::vector<std::vector<int>> wa(n), wb(n);
  std::vector<int> prefix;
  path_words(a.root(), prefix, wa);
  path_words(b.root(), prefix, wb);
  for (int step = 0; step < n; ++step) {
    int leaf = os.reverse_leaf_order ? n - step : step + 1;
    const auto& x = wa[leaf - 1];
    const auto& y = wb[leaf - 1];
    if (x.size() != y.size()) {
      bool longer = x.size() > y.size();
      return (longer == os.longer_word_larger) ? cmp::greater : cmp::less;
    }
    for (size_t j = 0; j < x.size(); ++j)
      if (x[j] != y[j]) {
        bool higher = x[j] > y[j];
        return (higher == os.higher_gen_larger) ? cmp::greater : cmp::less;
      }
  }
  std::vector<int> pa, pb;
  planar_labels(a.root(), pa);
  planar_labels(b.root(), pb);
  for (size_t j = 0; j < pa.size(); ++j)
    if (pa[j] != pb[j]) {
      bool bigger = pa[j] > pb[j];
      return (bigger == os.planar_larger) ? cmp::greater : cmp::less;
    }
  return cmp::equal;
}

tree_node relabel_tree(const tree_node& n, const std::vector<int>& map) {
  return relabel_node(n, map);
}

void for_each_partition(const std::vector<int>& block, int k, operad_kind kind,
                        const std::function<void(const std::vector<std::vector<int>>&)>& cb) {
  int n = static_cast<int>(block.size());
  if (kind == operad_kind::nonsymmetric) {
    std::vector<int> cuts(k - 1);
    std::function<void(int, int)> rec = [&](int pos, int start) {
      if (pos == k - 1) {
        std::vector<std::vector<int>> parts(k);
        int prev = 0;
        for (int j = 0; j < k; ++j) {
          int end = (j < k - 1) ? cuts[j] : n;
          for (int t = prev; t < end; ++t) parts[j].push_back(block[t]);
          prev = end;
        }
        cb(parts);
        return;
      }
      for (int c = start; c <= n - (k - 1 - pos); ++c) {
        cuts[pos] = c;
        rec(pos + 1, c + 1);
      }
    };
    rec(0, 1);
    return;
  }
  std::vector<int> rest(block.begin() + 1, block.end());
  std::vector<int> mins_idx;
  std::function<void(std::vector<std::vector<int>>&, const std::vector<int>&,
                     const std::vector<int>&, size_t)>
      assign = [&](std::vector<std::vector<int>>& parts, const std::vector<int>& mins,
                   const std::vector<int>& free, size_t idx) {
        if (idx == free.size()) {
          cb(parts);
          return;
        }
        int e = free[idx];
        for (size_t j = 0; j < parts.size(); ++j) {
          if (mins[j] > e) break;
          parts[j].push_back(e);
          assign(parts, mins, free, idx + 1);
          parts[j].pop_back();
        }
      };
  std::function<void(int, int)> choose = [&](int from, int need) {
    if (need == 0) {
      std::vector<std::vector<int>> parts(k);
      parts[0].push_back(block[0]);
      std::vector<int> mins = {block[0]};
      std::vector<bool> taken(rest.size(), false);
      for (int j = 0; j < k - 1; ++j) {
        parts[j + 1].push_back(rest[mins_idx[j]]);
        mins.push_back(rest[mins_idx[j]]);
        taken[mins_idx[j]] = true;
      }
      std::vector<int> free;
      for (size_t t = 0; t < rest.size(); ++t)
        if (!taken[t]) free.push_back(rest[t]);
      assign(parts, mins, free, 0);
      return;
    }
    for (int j = from; j <= static_cast<int>(rest.size()) - need; ++j) {
      mins_idx.push_back(j);
      choose(j + 1, need - 1);
      mins_idx.pop_back();
    }
  };
  choose(0, k - 1);
}

std::optional<int> max_weight_at_arity(const generator_set& gs, int arity) {
  if (arity <= 1) return 0;
  if (gs.size() == 0) return std::nullopt;
  if (gs.min_arity() <= 1) return std::nullopt;
  int max_w = 1;
  for (int i = 0; i < gs.size(); ++i) max_w = std::max(max_w, gs[i].weight);
  return (arity - 1) / (gs.min_arity() - 1) * max_w;
}

namespace {

struct enumerator {
  const generator_set& gs;
  operad_kind kind;
  const std::function<bool(const tree_mono&)>& visit;
  const std::function<bool(const tree_mono&)>& prune;
  bool stopped = false;

  // Bounds per block size (weight of an arity-s canonical subtree).
  int min_weight(int s) const {
    if (s <= 1) return 0;
    // need at least ceil((s-1)/(max_arity-1)) vertices
    int ma = gs.max_arity();
    if (ma <= 1) return 1 << 28;
    int v = (s - 1 + ma - 2) / (ma - 1);
    int mw = 1 << 28;
    for (int i = 0; i < gs.size(); ++i) mw = std::min(mw, gs[i].weight);
    return v * mw;
  }
  int max_weight(int s) const {
    if (s <= 1) return 0;
    int mi = gs.min_arity();
    if (mi <= 1) return 1 << 28;
    int v = (s - 1) / (mi - 1);
    int mw = 1;
    for (int i = 0; i < gs.size(); ++i) mw = std::max(mw, gs[i].weight);
    return v * mw;
  }

  // Checks a freshly built subtree (absolute labels) against prune by
  // relabelling to 1..s.
  bool pruned(const tree_node& n) {
    if (!prune) return false;
    std::vector<int> labels;
    collect_leaves(n, labels);
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    int mx = sorted.back();
    std::vector<int> map(mx + 1, 0);
    for (size_t j = 0; j < sorted.size(); ++j) map[sorted[j]] = static_cast<int>(j) + 1;
    tree_mono t(gs, kind, relabel_node(n, map));
    return prune(t);
  }

  // Enumerates canonical subtrees over the sorted label block, total weight w,
  // calling out(node) for each.
  void trees(const std::vector<int>& block, int w, const std::function<void(tree_node&&)>& out) {
    if (stopped) return;
    if (block.size() == 1) {
      if (w == 0) {
        tree_node leaf;
        leaf.leaf = block[0];
        out(std::move(leaf));
      }
      return;
    }
    if (w < min_weight(static_cast<int>(block.size())) ||
        w > max_weight(static_cast<int>(block.size())))
      return;
    for (int g = 0; g < gs.size() && !stopped; ++g) {
      int k = gs[g].arity;
      if (k < 2 || k > static_cast<int>(block.size())) continue;
      if (gs[g].weight > w) continue;
      for_each_partition(block, k, kind, [&](const std::vector<std::vector<int>>& parts) {
        if (stopped) return;
        distribute(g, parts, 0, w - gs[g].weight, std::vector<tree_node>{}, out);
      });
    }
  }

  void distribute(int g, const std::vector<std::vector<int>>& parts, size_t j, int wleft,
                  std::vector<tree_node> kids, const std::function<void(tree_node&&)>& out) {
    if (stopped) return;
    if (j == parts.size()) {
      if (wleft != 0) return;
      tree_node n;
      n.gen = g;
      n.kids = kids;
      if (!pruned(n)) out(std::move(n));
      return;
    }
    // remaining blocks bound the weight we can still consume
    int lo = 0, hi = 0;
    for (size_t t = j + 1; t < parts.size(); ++t) {
      lo += min_weight(static_cast<int>(parts[t].size()));
      hi += max_weight(static_cast<int>(parts[t].size()));
    }
    int s = static_cast<int>(parts[j].size());
    int wlo = std::max(min_weight(s), wleft - hi);
    int whi = std::min(max_weight(s), wleft - lo);
    for (int w = wlo; w <= whi && !stopped; ++w) {
      trees(parts[j], w, [&](tree_node&& sub) {
        if (stopped) return;
        kids.push_back(std::move(sub));
        distribute(g, parts, j + 1, wleft - w, kids, out);
        kids.pop_back();
      });
    }
  }
};

}  // namespace

void for_each_tree_monomial(const generator_set& gs, operad_kind kind, int arity,
                            std::optional<int> weight,
                            const std::function<bool(const tree_mono&)>& visit,
                            const std::function<bool(const tree_mono&)>& prune) {
  if (arity < 1) throw error("arity must be >= 1");
  if (arity == 1) {
    if (!weight || *weight == 0) visit(tree_mono::unit());
    return;
  }
  if (!weight && gs.min_arity() <= 1)
    throw error("unbounded enumeration requires a weight bound with unary generators");
  enumerator en{gs, kind, visit, prune};
  std::vector<int> block(arity);
  for (int j = 0; j < arity; ++j) block[j] = j + 1;
  int wlo = weight ? *weight : en.min_weight(arity);
  int whi = weight ? *weight : en.max_weight(arity);
  for (int w = wlo; w <= whi && !en.stopped; ++w) {
    en.trees(block, w, [&](tree_node&& n) {
      if (en.stopped) return;
      tree_mono t(gs, kind, std::move(n));
      if (!visit(t)) en.stopped = true;
    });
  }
}

std::vector<tree_mono> enumerate_tree_monomials(const generator_set& gs, operad_kind kind,
                                                int arity, std::optional<int> weight,
                                                const order_spec& os) {
  std::vector<tree_mono> out;
  for_each_tree_monomial(gs, kind, arity, weight, [&](const tree_mono& t) {
    out.push_back(t);
    return true;
  });
  std::sort(out.begin(), out.end(),
            [&](const tree_mono& a, const tree_mono& b) { return order_less(os, a, b); });
  return out;
}

}  // namespace operad
