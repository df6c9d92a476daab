#include "operad/opoly.hpp"

#include <algorithm>
#include <map>

namespace operad {

opoly::opoly(const order_spec& os, std::vector<std::pair<tree_mono, rational>> terms) {
  std::map<std::vector<int>, std::pair<tree_mono, rational>> acc;
  for (auto& [m, c] : terms) {
    if (c == 0) continue;
    auto it = acc.find(m.encoding());
    if (it == acc.end())
      acc.emplace(m.encoding(), std::make_pair(m, c));
    else
      it->second.second += c;
  }
  for (auto& [enc, mc] : acc)
    if (mc.second != 0) terms_.push_back(std::move(mc));
  if (terms_.empty()) return;
  int ar = terms_.front().first.arity();
  int w = terms_.front().first.weight();
  int p = terms_.front().first.parity();
  for (const auto& [m, c] : terms_) {
    if (m.arity() != ar) throw error("inhomogeneous relation: mixed arities");
    if (m.weight() != w) throw error("inhomogeneous relation: mixed weights");
    if (m.parity() != p) throw error("inhomogeneous relation: mixed parities");
  }
  std::sort(terms_.begin(), terms_.end(), [&](const auto& a, const auto& b) {
    return compare(os, a.first, b.first) == cmp::greater;
  });
}

const tree_mono& opoly::lead() const {
  if (zero()) throw error("zero polynomial has no leading term");
  return terms_.front().first;
}

const rational& opoly::lead_coeff() const {
  if (zero()) throw error("zero polynomial has no leading coefficient");
  return terms_.front().second;
}

opoly opoly::scaled(const rational& c) const {
  opoly out;
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

std::string opoly::text(const generator_set& gs) const {
  if (zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    rational a = c;
    if (first) {
      if (a < 0) {
        out += "- ";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    out += to_string(a);
    out += " * ";
    out += m.text(gs);
    first = false;
  }
  return out;
}

opoly axpy(const order_spec& os, const opoly& a, const rational& c, const opoly& b) {
  std::vector<std::pair<tree_mono, rational>> terms = a.terms();
  for (const auto& [m, v] : b.terms()) terms.emplace_back(m, c * v);
  return opoly(os, std::move(terms));
}

opoly add(const order_spec& os, const opoly& a, const opoly& b) {
  return axpy(os, a, rational(1), b);
}

symmetric_actions::symmetric_actions(const generator_set& gs,
                                     std::vector<std::vector<action_entry>> table)
    : table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != gs.size())
    throw error("action table must cover every generator");
  for (int g = 0; g < gs.size(); ++g) {
    int k = gs[g].arity;
    if (static_cast<int>(table_[g].size()) != std::max(0, k - 1))
      throw error("generator " + gs[g].id + ": need an action for each adjacent transposition");
    for (const auto& e : table_[g]) {
      if (e.image < 0 || e.image >= gs.size()) throw error("action image out of range");
      if (gs[e.image].arity != k || gs[e.image].parity != gs[g].parity ||
          gs[e.image].weight != gs[g].weight)
        throw error("action must preserve arity, parity and weight");
      if (e.sign != 1 && e.sign != -1) throw error("action sign must be +1 or -1");
    }
  }
  // Coxeter relations: s_j^2 = 1, (s_j s_{j+1})^3 = 1, commuting far apart.
  auto apply = [&](int g, int s, int& sign) {
    const auto& e = table_[g][s - 1];
    sign *= e.sign;
    return e.image;
  };
  for (int g = 0; g < gs.size(); ++g) {
    int k = gs[g].arity;
    for (int s = 1; s <= k - 1; ++s) {
      int sign = 1, h = apply(g, s, sign);
      h = apply(h, s, sign);
      if (h != g || sign != 1) throw error("action violates s^2 = 1");
    }
    for (int s = 1; s + 1 <= k - 1; ++s) {
      int sa = 1, a = g;
      for (int t = 0; t < 3; ++t) {
        a = apply(a, s, sa);
        a = apply(a, s + 1, sa);
      }
      if (a != g || sa != 1) throw error("action violates the braid relation");
    }
    for (int s = 1; s <= k - 1; ++s)
      for (int t = s + 2; t <= k - 1; ++t) {
        int s1 = 1, a = apply(apply(g, s, s1), t, s1);
        int s2 = 1, b = apply(apply(g, t, s2), s, s2);
        if (a != b || s1 != s2) throw error("action violates commutation");
      }
  }
}

const action_entry& symmetric_actions::act(int gen, int transposition) const {
  return table_[gen][transposition - 1];
}

void validate_presentation(const presentation& p) {
  if (p.kind == presentation_kind::symmetric_input && p.actions.empty())
    throw error("symmetric-input presentation needs generator actions");
  for (const auto& r : p.relations) {
    if (r.zero()) throw error("zero relation");
    (void)r.arity();  // homogeneity was checked at construction
  }
}

namespace {

struct canon_result {
  tree_node node;
  int min_leaf = 0;
  int parity = 0;  // subtree parity
  int sign = 1;
  int gen_out = -1;
};

canon_result canonicalize_node(const generator_set& gs, const symmetric_actions& acts,
                               tree_node n) {
  canon_result out;
  if (n.is_leaf()) {
    out.min_leaf = n.leaf;
    out.node = std::move(n);
    return out;
  }
  int sign = 1;
  std::vector<canon_result> kids;
  kids.reserve(n.kids.size());
  for (auto& k : n.kids) {
    canon_result c = canonicalize_node(gs, acts, std::move(k));
    sign *= c.sign;
    kids.push_back(std::move(c));
  }
  int gen = n.gen;
  int parity = gs[gen].parity;
  for (const auto& k : kids) parity = (parity + k.parity) % 2;
  // bubble sort children by min leaf; each swap acts on the generator and
  // contributes the Koszul sign of the two subtree blocks
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t j = 0; j + 1 < kids.size(); ++j)
      if (kids[j].min_leaf > kids[j + 1].min_leaf) {
        if (acts.empty()) throw error("non-canonical tree in a kind without actions");
        const auto& e = acts.act(gen, static_cast<int>(j) + 1);
        sign *= e.sign;
        gen = e.image;
        if (kids[j].parity && kids[j + 1].parity) sign = -sign;
        std::swap(kids[j], kids[j + 1]);
        moved = true;
      }
  }
  tree_node node;
  node.gen = gen;
  for (auto& k : kids) node.kids.push_back(std::move(k.node));
  out.min_leaf = kids.front().min_leaf;
  out.parity = parity;
  out.sign = sign;
  out.node = std::move(node);
  return out;
}

}  // namespace

signed_tree canonicalize(const generator_set& gs, const symmetric_actions& acts, operad_kind kind,
                         tree_node raw) {
  canon_result c = canonicalize_node(gs, acts, std::move(raw));
  return {tree_mono(gs, kind, std::move(c.node)), c.sign};
}

namespace {

tree_node relabel(const tree_node& n, const std::vector<int>& perm) {
  tree_node out;
  if (n.is_leaf()) {
    out.leaf = perm[n.leaf - 1];
    return out;
  }
  out.gen = n.gen;
  for (const auto& k : n.kids) out.kids.push_back(relabel(k, perm));
  return out;
}

}  // namespace

opoly act_on_leaves(const generator_set& gs, const symmetric_actions& acts, const order_spec& os,
                    const opoly& p, const std::vector<int>& perm) {
  std::vector<std::pair<tree_mono, rational>> terms;
  for (const auto& [m, c] : p.terms()) {
    signed_tree st = canonicalize(gs, acts, operad_kind::shuffle, relabel(m.root(), perm));
    terms.emplace_back(st.mono, c * st.sign);
  }
  return opoly(os, std::move(terms));
}

presentation symmetric_to_shuffle(const presentation& p, const order_spec& os) {
  if (p.kind != presentation_kind::symmetric_input)
    throw error("symmetric_to_shuffle expects a symmetric-input presentation");
  validate_presentation(p);
  presentation out;
  out.name = p.name;
  out.kind = presentation_kind::shuffle;
  out.gens = p.gens;
  out.actions = p.actions;  // kept for reference; shuffle machinery ignores it

  // Orbit expansion per relation, reduced to a spanning set per arity slice.
  std::map<std::pair<int, int>, std::vector<opoly>> by_slice;  // (arity, weight)
  for (const auto& r : p.relations) {
    int n = r.arity();
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = j + 1;
    do {
      opoly q = act_on_leaves(p.gens, p.actions, os, r, perm);
      if (!q.zero()) by_slice[{q.arity(), q.weight()}].push_back(q);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (auto& [slice, polys] : by_slice) {
    // row-reduce the orbit to an independent spanning set; always eliminate
    // the largest reducible term so the reduction terminates
    std::vector<opoly> basis;
    std::map<std::vector<int>, size_t> lead_of;
    for (const auto& q : polys) {
      opoly red = q;
      bool changed = true;
      while (changed && !red.zero()) {
        changed = false;
        for (const auto& [m, c] : red.terms()) {
          auto it = lead_of.find(m.encoding());
          if (it != lead_of.end()) {
            red = axpy(os, red, -c, basis[it->second]);
            changed = true;
            break;
          }
        }
      }
      if (!red.zero()) {
        red = red.scaled(rational(1) / red.lead_coeff());
        lead_of[red.lead().encoding()] = basis.size();
        basis.push_back(std::move(red));
      }
    }
    for (auto& b : basis) out.relations.push_back(std::move(b));
  }
  return out;
}

opoly substitute(const generator_set& gs, operad_kind kind, const order_spec& os,
                 const opoly& outer, const unshuffle& u, const opoly& inner) {
  std::vector<std::pair<tree_mono, rational>> terms;
  for (const auto& [mo, co] : outer.terms())
    for (const auto& [mi, ci] : inner.terms()) {
      signed_tree st = compose(gs, kind, mo, u, mi);
      terms.emplace_back(st.mono, co * ci * st.sign);
    }
  return opoly(os, std::move(terms));
}

}  // namespace operad
